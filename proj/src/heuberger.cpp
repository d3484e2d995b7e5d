#include "cubelike/heuberger.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubelike {

namespace {

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

void require_binary(const HeubergerMatrix& m) {
    for (const auto& col : m.a_columns) {
        if (col.size() != m.m) throw std::invalid_argument("Heuberger column length differs from m");
        for (auto x : col)
            if (x != 0 && x != 1) throw std::invalid_argument("Heuberger column entries must be 0/1; reduce first");
    }
}

std::vector<OddColumn> odd_columns(const HeubergerMatrix& m) {
    require_binary(m);
    std::vector<OddColumn> out;
    for (std::size_t j = 0; j < m.a_columns.size(); ++j) {
        OddColumn oc{j, {}, 0};
        for (std::size_t i = 0; i < m.m; ++i)
            if (m.a_columns[j][i] == 1) oc.support.push_back(i);
        oc.z = oc.support.size();
        if (oc.z % 2 == 1) out.push_back(std::move(oc));
    }
    return out;
}

}  // namespace

Word HeubergerMatrix::column_mask(std::size_t j) const {
    const auto& col = a_columns.at(j);
    if (col.size() > kMaxWidth) throw std::invalid_argument("Heuberger matrix has more than 64 rows");
    Word mask = 0;
    for (std::size_t i = 0; i < col.size(); ++i)
        if (mod2(col[i])) mask |= Word{1} << i;
    return mask;
}

HeubergerMatrix heuberger_matrix(const ConnectionSet& s) {
    if (s.empty()) throw std::invalid_argument("Heuberger matrix needs a nonempty connection set");
    const auto kernel = kernel_basis(connection_matrix(s));
    HeubergerMatrix out;
    out.m = s.size();
    out.source = s;
    std::vector<Word> masks;
    for (const auto& v : kernel) masks.push_back(v.bits());
    std::sort(masks.begin(), masks.end());
    for (Word mask : masks) {
        IntColumn col(out.m, 0);
        for (std::size_t i = 0; i < out.m; ++i) col[i] = static_cast<std::int64_t>((mask >> i) & 1);
        out.a_columns.push_back(std::move(col));
    }
    return out;
}

HeubergerMatrix reduce_columns_mod2(const HeubergerMatrix& m) {
    HeubergerMatrix out;
    out.m = m.m;
    out.two_identity = m.two_identity;
    out.source = m.source;
    for (const auto& col : m.a_columns) {
        IntColumn reduced(col.size());
        std::transform(col.begin(), col.end(), reduced.begin(), mod2);
        if (std::any_of(reduced.begin(), reduced.end(), [](auto x) { return x != 0; }))
            out.a_columns.push_back(std::move(reduced));
    }
    return out;
}

std::size_t SacgGraph::index_of(Word rep) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), rep);
    if (it == vertices_.end() || *it != rep) throw std::out_of_range("not a canonical SACG vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Word> SacgGraph::neighbors(Word rep) const {
    std::vector<Word> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) out.push_back(canonical(rep ^ (Word{1} << i)));
    return out;
}

bool SacgGraph::adjacent(Word u, Word v) const {
    const Word diff = canonical(u ^ v);
    for (std::size_t i = 0; i < m_; ++i)
        if (canonical(Word{1} << i) == diff) return true;
    return false;
}

SacgGraph sacg_build(const HeubergerMatrix& m) {
    if (!m.two_identity) throw std::invalid_argument("SACG construction needs the 2I block");
    if (m.m == 0 || m.m > kMaxWidth) throw std::invalid_argument("SACG needs 1 <= m <= 64");
    require_binary(m);
    SacgGraph g;
    g.m_ = m.m;
    for (std::size_t j = 0; j < m.a_columns.size(); ++j) g.relations_.insert(m.column_mask(j));
    const unsigned free_dims = static_cast<unsigned>(m.m) - g.relations_.rank();
    if (free_dims > kMaxDimension)
        throw std::invalid_argument("SACG would have 2^" + std::to_string(free_dims) + " vertices");

    // Canonical representatives are exactly the vectors vanishing on every lead position.
    std::vector<unsigned> free_bits;
    for (unsigned i = 0; i < m.m; ++i)
        if (!((g.relations_.leads() >> i) & 1)) free_bits.push_back(i);
    const std::size_t count = std::size_t{1} << free_dims;
    g.vertices_.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        Word x = 0;
        for (unsigned b = 0; b < free_dims; ++b)
            if ((code >> b) & 1) x |= Word{1} << free_bits[b];
        g.vertices_.push_back(x);
    }
    std::sort(g.vertices_.begin(), g.vertices_.end());
    return g;
}

bool verify_canonical_iso(const HeubergerMatrix& m, const ConnectionSet& s) {
    if (m.m != s.size()) return false;
    const auto& elems = s.elements();
    auto image = [&](Word x) {
        Word acc = 0;
        for (std::size_t i = 0; i < m.m; ++i)
            if ((x >> i) & 1) acc ^= elems[i].bits();
        return acc;
    };
    // Well defined on cosets iff every column is a relation.
    for (std::size_t j = 0; j < m.a_columns.size(); ++j)
        if (image(m.column_mask(j)) != 0) return false;

    const SacgGraph g = sacg_build(reduce_columns_mod2(m));
    const auto component = span(elems, s.dimension());
    if (g.vertex_count() != component.size()) return false;

    std::vector<Word> targets;
    targets.reserve(g.vertex_count());
    for (Word v : g.vertices()) targets.push_back(image(v));
    std::vector<Word> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != component[i].bits()) return false;

    // Neighbourhoods must correspond exactly, which gives edge preservation in both directions.
    for (Word v : g.vertices()) {
        const Word fv = image(v);
        std::vector<Word> mapped;
        for (Word u : g.neighbors(v)) mapped.push_back(image(u));
        std::vector<Word> expected;
        for (const auto& e : elems) expected.push_back(fv ^ e.bits());
        std::sort(mapped.begin(), mapped.end());
        std::sort(expected.begin(), expected.end());
        if (mapped != expected) return false;
    }
    return true;
}

HeubergerMatrix all_ones_relation_matrix(unsigned z) {
    HeubergerMatrix m;
    m.m = z;
    m.a_columns.push_back(IntColumn(z, 1));
    return m;
}

bool verify_qd_iso(unsigned z) {
    if (z < 3 || z % 2 == 0) throw std::invalid_argument("verify_qd_iso needs odd z >= 3");
    if (z - 1 > kMaxDimension) throw std::invalid_argument("z too large");
    const unsigned n = z - 1;
    const SacgGraph src = sacg_build(all_ones_relation_matrix(z));
    const CubelikeGraph dst = cube_with_diagonals(n);

    auto f = [&](Word x) -> Vertex {
        Word y = x & low_mask(n);
        if ((x >> n) & 1) y ^= low_mask(n);
        return static_cast<Vertex>(y);
    };
    // Well defined: the relation w_z must map to 0.
    if (f(low_mask(z)) != 0) return false;
    if (src.vertex_count() != dst.vertex_count()) return false;

    std::vector<bool> hit(dst.vertex_count(), false);
    for (Word v : src.vertices()) {
        const Vertex fv = f(v);
        if (hit[fv]) return false;
        hit[fv] = true;
        std::vector<Vertex> mapped;
        for (Word u : src.neighbors(v)) mapped.push_back(f(u));
        std::vector<Vertex> expected = dst.neighbors(fv);
        std::sort(mapped.begin(), mapped.end());
        std::sort(expected.begin(), expected.end());
        if (mapped != expected) return false;
    }
    return true;
}

std::optional<OddColumn> find_odd_column(const HeubergerMatrix& m) {
    auto all = odd_columns(m);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<OddColumn> find_smallest_odd_column(const HeubergerMatrix& m) {
    auto all = odd_columns(m);
    if (all.empty()) return std::nullopt;
    return *std::min_element(all.begin(), all.end(),
                             [](const OddColumn& a, const OddColumn& b) { return a.z < b.z; });
}

}  // namespace cubelike
