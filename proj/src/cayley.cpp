#include "cubelike/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <sstream>

namespace cubelike {

ConnectionSet::ConnectionSet(unsigned n, std::span<const Word> masks) : n_(n) {
    if (n == 0 || n > kMaxWidth)
        throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxWidth) + "]");
    std::vector<Word> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    elements_.reserve(sorted.size());
    for (Word m : sorted) {
        if ((m & ~low_mask(n)) != 0)
            throw std::invalid_argument("set element " + std::to_string(m) + " is not below 2^" +
                                        std::to_string(n));
        elements_.emplace_back(m, n);
    }
}

ConnectionSet ConnectionSet::parse(unsigned n, std::string_view text) {
    std::vector<Word> masks;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) return ConnectionSet(n, masks);
    while (true) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        Word value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("cannot parse set element '" + std::string(item) + "'");
        masks.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return ConnectionSet(n, masks);
}

std::vector<Word> ConnectionSet::masks() const {
    std::vector<Word> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.bits());
    return out;
}

bool ConnectionSet::contains(Word x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), BitVec(x & low_mask(n_), n_)) &&
           (x & ~low_mask(n_)) == 0;
}

std::string ConnectionSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i].bits();
    return os.str();
}

CubelikeGraph::CubelikeGraph(ConnectionSet s) : set_(std::move(s)), member_(vertex_count(), false) {
    for (const auto& e : set_.elements()) member_[e.bits()] = true;
}

std::vector<Vertex> CubelikeGraph::neighbors(Vertex u) const {
    std::vector<Vertex> out;
    out.reserve(set_.size());
    for (const auto& e : set_.elements()) out.push_back(u ^ static_cast<Vertex>(e.bits()));
    return out;
}

CubelikeGraph build_graph(unsigned n, const ConnectionSet& s) {
    if (n > kMaxDimension)
        throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(kMaxDimension));
    if (s.dimension() != n)
        throw std::invalid_argument("connection set has dimension " + std::to_string(s.dimension()) +
                                    ", expected " + std::to_string(n));
    return CubelikeGraph(s);
}

ConnectionSet cube_with_diagonals_set(unsigned n) {
    if (n == 0) throw std::invalid_argument("cube-with-diagonals needs n >= 1");
    std::vector<Word> gens;
    for (unsigned j = 0; j < n; ++j) gens.push_back(Word{1} << j);
    gens.push_back(low_mask(n));
    return ConnectionSet(n, gens);
}

CubelikeGraph cube_with_diagonals(unsigned n) { return build_graph(n, cube_with_diagonals_set(n)); }

bool is_bipartite_bfs(const CubelikeGraph& g) {
    if (g.has_loop()) return false;
    const std::size_t nv = g.vertex_count();
    std::vector<std::int8_t> side(nv, -1);
    std::queue<Vertex> queue;
    for (std::size_t start = 0; start < nv; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        queue.push(static_cast<Vertex>(start));
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop();
            for (Vertex v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = static_cast<std::int8_t>(1 - side[u]);
                    queue.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Gf2Matrix connection_matrix(const ConnectionSet& s) { return Gf2Matrix(s.dimension(), s.elements()); }

bool is_bipartite_parity(const ConnectionSet& s) {
    if (s.has_loop()) throw LoopError();
    return solve_all_ones(connection_matrix(s)).has_value();
}

std::uint64_t component_count(const CubelikeGraph& g) {
    const auto& elems = g.connection_set().elements();
    Gf2Basis basis;
    for (const auto& e : elems) basis.insert(e.bits());
    return std::uint64_t{1} << (g.dimension() - basis.rank());
}

}  // namespace cubelike
