#include "cubelike/coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace cubelike {

bool Coloring::total() const noexcept {
    return std::all_of(colors.begin(), colors.end(), [this](Color c) { return c >= 0 && c < k; });
}

int Coloring::used_colors() const {
    std::set<Color> seen;
    for (Color c : colors)
        if (c >= 0) seen.insert(c);
    return static_cast<int>(seen.size());
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Colorable: return "colorable";
        case SolveStatus::Uncolorable: return "uncolorable";
        case SolveStatus::HasLoop: return "has_loop";
        case SolveStatus::Unresolved: return "unresolved";
    }
    return "unknown";
}

namespace {

/// The component of 0 re-indexed as Z_2^r through a reduced basis of span(S).
struct Component {
    Gf2Basis basis;
    std::vector<unsigned> lead_positions;  // ascending; local bit j <-> lead_positions[j]
    std::vector<Vertex> gens;              // S in local coordinates
    std::size_t size = 1;

    explicit Component(const ConnectionSet& s) {
        for (const auto& e : s.elements()) basis.insert(e.bits());
        for (Word rest = basis.leads(); rest != 0; rest &= rest - 1)
            lead_positions.push_back(static_cast<unsigned>(std::countr_zero(rest)));
        size = std::size_t{1} << lead_positions.size();
        for (const auto& e : s.elements()) gens.push_back(local(e.bits()));
    }

    /// Local coordinates of an element of span(S).
    Vertex local(Word h) const {
        Vertex out = 0;
        for (std::size_t j = 0; j < lead_positions.size(); ++j)
            if ((h >> lead_positions[j]) & 1) out |= Vertex{1} << j;
        return out;
    }

    /// Local coordinates of v's translate into the component of 0.
    Vertex project(Word v) const { return local(v ^ basis.reduce(v)); }
};

/// Maximum clique by branch and bound with a greedy-coloring bound.
class CliqueSearch {
public:
    template <class Adjacent>
    CliqueSearch(std::vector<Vertex> vertices, Adjacent adjacent)
        : vertices_(std::move(vertices)), words_((vertices_.size() + 63) / 64), adj_(vertices_.size()) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            adj_[i].assign(words_, 0);
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (i != j && adjacent(vertices_[i], vertices_[j])) adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }

    std::vector<Vertex> run() {
        Bits all(words_, 0);
        for (std::size_t i = 0; i < vertices_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
        std::vector<std::size_t> current;
        expand(current, all);
        std::vector<Vertex> out;
        for (std::size_t i : best_) out.push_back(vertices_[i]);
        return out;
    }

private:
    using Bits = std::vector<std::uint64_t>;

    static bool any(const Bits& b) {
        return std::any_of(b.begin(), b.end(), [](auto w) { return w != 0; });
    }

    void expand(std::vector<std::size_t>& current, Bits candidates) {
        // Greedy coloring of the candidates: order[i] can extend by at most bound[i].
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bits uncolored = candidates;
        for (std::size_t color = 1; any(uncolored); ++color) {
            Bits avail = uncolored;
            for (std::size_t w = 0; w < words_; ++w) {
                while (avail[w]) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(avail[w]));
                    avail[w] &= avail[w] - 1;
                    uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    for (std::size_t x = 0; x < words_; ++x) avail[x] &= ~adj_[v][x];
                    order.push_back(v);
                    bound.push_back(color);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current.push_back(v);
            Bits next(words_);
            for (std::size_t x = 0; x < words_; ++x) next[x] = candidates[x] & adj_[v][x];
            if (any(next))
                expand(current, std::move(next));
            else if (current.size() > best_.size())
                best_ = current;
            current.pop_back();
            candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    std::vector<Vertex> vertices_;
    std::size_t words_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> best_;
};

/// Components up to this size also get the independence-number bound.
constexpr std::size_t kIndependenceBoundLimit = 256;

/// A maximum clique through vertex 0 (enough, as the graph is vertex-transitive).
std::vector<Vertex> max_clique(const std::vector<Vertex>& gens, const std::vector<bool>& member) {
    std::vector<Vertex> nbrs(gens.begin(), gens.end());
    auto clique = CliqueSearch(nbrs, [&](Vertex a, Vertex b) { return member[a ^ b]; }).run();
    clique.insert(clique.begin(), 0);
    return clique;
}

/// Independence number, or 0 when the component is too large to bother.
std::size_t independence_number(std::size_t size, const std::vector<bool>& member) {
    if (size > kIndependenceBoundLimit) return 0;
    std::vector<Vertex> others;
    for (Vertex v = 1; v < size; ++v)
        if (!member[v]) others.push_back(v);
    return 1 + CliqueSearch(others, [&](Vertex a, Vertex b) { return !member[a ^ b]; }).run().size();
}

/// Backtracking with forward checking on Cay(Z_2^r, gens).
class ExactSolver {
public:
    ExactSolver(std::size_t n, std::vector<Vertex> gens, int k, std::uint64_t node_limit = 0)
        : n_(n), gens_(std::move(gens)), k_(k), node_limit_(node_limit), member_(n, false), color_(n, -1),
          domain_(n, full(k)) {
        for (Vertex g : gens_) member_[g] = true;
    }

    std::optional<std::vector<Color>> solve() {
        const auto clique = max_clique(gens_, member_);
        if (static_cast<int>(clique.size()) > k_) return std::nullopt;
        for (std::size_t i = 0; i < clique.size(); ++i)
            if (!assign(clique[i], static_cast<Color>(i))) return std::nullopt;
        max_used_ = static_cast<Color>(clique.size()) - 1;
        remaining_ = n_ - clique.size();
        if (!search()) return std::nullopt;
        return color_;
    }

    bool exhausted() const { return exhausted_; }

private:
    static std::uint64_t full(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

    // Assigns c to v and removes c from uncolored neighbours; false on a wipe-out.
    bool assign(Vertex v, Color c) {
        color_[v] = c;
        const std::uint64_t bit = std::uint64_t{1} << c;
        bool ok = true;
        for (Vertex g : gens_) {
            const Vertex u = v ^ g;
            if (color_[u] >= 0) {
                if (color_[u] == c) ok = false;
                continue;
            }
            if (domain_[u] & bit) {
                domain_[u] &= ~bit;
                trail_.push_back(u);
                if (domain_[u] == 0) ok = false;
            }
        }
        trail_.push_back(kMark);
        return ok;
    }

    // Smallest effective domain, ties to the most uncolored neighbours.
    Vertex pick() const {
        const std::uint64_t usable = full(std::min<int>(max_used_ + 2, k_));
        Vertex best = 0;
        int best_size = 65;
        int best_degree = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            const int sz = std::popcount(domain_[v] & usable);
            if (sz > best_size) continue;
            int degree = 0;
            for (Vertex g : gens_) degree += color_[v ^ g] < 0;
            if (sz < best_size || degree > best_degree) {
                best_size = sz;
                best_degree = degree;
                best = static_cast<Vertex>(v);
            }
        }
        return best;
    }

    bool search() {
        if (remaining_ == 0) return true;
        if (node_limit_ != 0 && ++nodes_ > node_limit_) {
            exhausted_ = true;
            return false;
        }
        const Vertex v = pick();
        const Color cap = std::min<Color>(max_used_ + 1, k_ - 1);
        for (Color c = 0; c <= cap; ++c) {
            if (!((domain_[v] >> c) & 1)) continue;
            const Color saved_max = max_used_;
            max_used_ = std::max(max_used_, c);
            --remaining_;
            const std::size_t depth = trail_.size();
            if (assign(v, c) && search()) return true;
            if (exhausted_) return false;
            undo_to(depth, c);
            color_[v] = -1;
            ++remaining_;
            max_used_ = saved_max;
        }
        return false;
    }

    void undo_to(std::size_t depth, Color c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        trail_.pop_back();  // mark
        while (trail_.size() > depth) {
            domain_[trail_.back()] |= bit;
            trail_.pop_back();
        }
    }

    static constexpr Vertex kMark = ~Vertex{0};

    std::size_t n_;
    std::vector<Vertex> gens_;
    int k_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<bool> member_;
    std::vector<Color> color_;
    std::vector<std::uint64_t> domain_;
    std::vector<Vertex> trail_;
    Color max_used_ = -1;
    std::size_t remaining_ = 0;
};

Coloring lift(const CubelikeGraph& g, const Component& comp, const std::vector<Color>& local, int k) {
    Coloring out;
    out.k = k;
    out.colors.resize(g.vertex_count());
    for (std::size_t v = 0; v < out.colors.size(); ++v) out.colors[v] = local[comp.project(v)];
    return out;
}

}  // namespace

Decision k_colorable_limited(const CubelikeGraph& g, int k, std::uint64_t node_limit,
                             std::optional<Coloring>* witness) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (g.has_loop()) throw LoopError();
    const Component comp(g.connection_set());
    if (static_cast<std::size_t>(k) >= comp.size) {
        std::vector<Color> distinct(comp.size);
        for (std::size_t i = 0; i < comp.size; ++i) distinct[i] = static_cast<Color>(i);
        if (witness) *witness = lift(g, comp, distinct, k);
        return Decision::Yes;
    }
    ExactSolver solver(comp.size, comp.gens, k, node_limit);
    auto local = solver.solve();
    if (!local) return solver.exhausted() ? Decision::Unknown : Decision::No;
    if (witness) *witness = lift(g, comp, *local, k);
    return Decision::Yes;
}

std::optional<Coloring> k_colorable(const CubelikeGraph& g, int k) {
    std::optional<Coloring> witness;
    k_colorable_limited(g, k, 0, &witness);
    return witness;
}

SolveResult chromatic_number(const CubelikeGraph& g, std::uint64_t node_limit_per_k) {
    SolveResult result;
    if (g.has_loop()) {
        result.status = SolveStatus::HasLoop;
        return result;
    }
    const Component comp(g.connection_set());
    int lower = 1;
    if (!comp.gens.empty()) {
        std::vector<bool> member(comp.size, false);
        for (Vertex v : comp.gens) member[v] = true;
        lower = static_cast<int>(max_clique(comp.gens, member).size());
        result.clique_bound = lower;
        // Vertex-transitive: chi >= |V| / alpha.
        if (const std::size_t alpha = independence_number(comp.size, member); alpha > 0)
            lower = std::max(lower, static_cast<int>((comp.size + alpha - 1) / alpha));
    } else {
        result.clique_bound = 1;
    }
    result.lower_bound = lower;
    result.proven_lower = lower;
    bool undecided = false;
    for (int k = lower;; ++k) {
        std::optional<Coloring> c;
        switch (k_colorable_limited(g, k, node_limit_per_k, &c)) {
            case Decision::Yes:
                result.status = undecided ? SolveStatus::Unresolved : SolveStatus::Colorable;
                result.k = k;
                if (!undecided) {
                    result.chi = k;
                    result.proven_lower = k;
                }
                result.witness = std::move(c);
                return result;
            case Decision::No:
                if (!undecided) result.proven_lower = k + 1;
                break;
            case Decision::Unknown:
                undecided = true;
                break;
        }
    }
}

Coloring sokolova_coloring(unsigned n) {
    if (n < 2) throw std::invalid_argument("the four-coloring of Q^d_n needs n >= 2");
    if (n > kMaxDimension) throw std::invalid_argument("dimension exceeds cap");
    Coloring c;
    c.k = 4;
    c.colors.resize(std::size_t{1} << n);
    for (std::size_t x = 0; x < c.colors.size(); ++x)
        c.colors[x] = static_cast<Color>(2 * (x & 1) + (std::popcount(x >> 1) & 1));
    return c;
}

bool verify_coloring(const CubelikeGraph& g, const Coloring& c) {
    if (c.colors.size() != g.vertex_count() || !c.total()) return false;
    if (g.has_loop()) return false;
    for (std::size_t u = 0; u < c.colors.size(); ++u)
        for (Vertex v : g.neighbors(static_cast<Vertex>(u)))
            if (c.colors[u] == c.colors[v]) return false;
    return true;
}

Color pair_representative(Color a, Color b) {
    if (a < 0 || a > 2 || b < 0 || b > 2) throw std::invalid_argument("pair colors must lie in Z_3");
    if (a == b) return a;
    return b == (a + 1) % 3 ? a : b;
}

Coloring reduce_coloring(const Coloring& c) {
    if (c.k != 3) throw std::invalid_argument("reduce_coloring needs a palette of exactly 3 colors");
    const std::size_t size = c.colors.size();
    if (size < 8 || !std::has_single_bit(size))
        throw std::invalid_argument("reduce_coloring needs a coloring of Z_2^(n+2) with n >= 1");
    if (!c.total()) throw std::invalid_argument("reduce_coloring needs a total coloring");
    const unsigned n = static_cast<unsigned>(std::countr_zero(size)) - 2;
    const Vertex w = static_cast<Vertex>(low_mask(n));
    Coloring out;
    out.k = 3;
    out.colors.resize(std::size_t{1} << n);
    for (Vertex v = 0; v < out.colors.size(); ++v)
        out.colors[v] = pair_representative(c.colors[v], c.colors[(v ^ w) | (Vertex{1} << n)]);
    return out;
}

bool LocalCheckReport::all_pass() const {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.pass; });
}

namespace {

/// Enumerates proper 3-colorings of a small induced subgraph of Q^d_{n+2}.
class LiftEnumerator {
public:
    LiftEnumerator(std::vector<Vertex> vertices, const ConnectionSet& big)
        : vertices_(std::move(vertices)), adj_(vertices_.size()), color_(vertices_.size(), -1),
          domain_(vertices_.size(), 0b111) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (i != j && big.contains(vertices_[i] ^ vertices_[j])) adj_[i].push_back(j);
    }

    std::size_t index_of(Vertex v) const {
        return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
    }

    /// Calls visit for each proper coloring; visit returns false to stop.
    void enumerate(const std::function<bool(const std::vector<Color>&)>& visit) {
        stop_ = false;
        recurse(0, visit);
    }

private:
    void recurse(std::size_t assigned, const std::function<bool(const std::vector<Color>&)>& visit) {
        if (stop_) return;
        if (assigned == vertices_.size()) {
            if (!visit(color_)) stop_ = true;
            return;
        }
        std::size_t v = vertices_.size();
        int best = 4;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (color_[i] >= 0) continue;
            const int sz = std::popcount(domain_[i]);
            if (sz < best) best = sz, v = i;
        }
        if (best == 0) return;
        for (Color c = 0; c < 3 && !stop_; ++c) {
            if (!((domain_[v] >> c) & 1)) continue;
            color_[v] = c;
            std::vector<std::size_t> touched;
            bool wiped = false;
            for (std::size_t u : adj_[v]) {
                if (color_[u] < 0 && ((domain_[u] >> c) & 1)) {
                    domain_[u] &= static_cast<std::uint8_t>(~(1u << c));
                    touched.push_back(u);
                    if (domain_[u] == 0) wiped = true;
                }
            }
            if (!wiped) recurse(assigned + 1, visit);
            for (std::size_t u : touched) domain_[u] |= static_cast<std::uint8_t>(1u << c);
            color_[v] = -1;
        }
    }

    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Color> color_;
    std::vector<std::uint8_t> domain_;
    bool stop_ = false;
};

std::vector<Vertex> ball(const ConnectionSet& small, const std::vector<Vertex>& centers, unsigned radius) {
    std::vector<int> dist(std::size_t{1} << small.dimension(), -1);
    std::queue<Vertex> q;
    for (Vertex c : centers)
        if (dist[c] < 0) dist[c] = 0, q.push(c);
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        if (static_cast<unsigned>(dist[u]) == radius) continue;
        for (const auto& g : small.elements()) {
            const Vertex v = u ^ static_cast<Vertex>(g.bits());
            if (dist[v] < 0) dist[v] = dist[u] + 1, q.push(v);
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < dist.size(); ++v)
        if (dist[v] >= 0) out.push_back(v);
    return out;
}

}  // namespace

LocalCheckReport lemma_local_check(unsigned n, unsigned radius) {
    if (n != 2 && n != 4) throw std::invalid_argument("lemma_local_check supports n = 2 or n = 4");
    const ConnectionSet small = cube_with_diagonals_set(n);
    const ConnectionSet big = cube_with_diagonals_set(n + 2);
    const Vertex w = static_cast<Vertex>(low_mask(n));
    const Vertex lift_bit = Vertex{1} << n;

    LocalCheckReport report;
    report.n = n;
    report.radius = radius;
    for (const auto& gen : small.elements()) {
        const Vertex s = static_cast<Vertex>(gen.bits());
        EdgeClassReport cls;
        cls.generator = s;
        cls.edge_class = s == w ? "w" : "e" + std::to_string(std::countr_zero(s) + 1);
        bool any_colorable = false;
        for (Vertex u = 0; u < (Vertex{1} << n); ++u) {
            const Vertex v = u ^ s;
            if (v < u) continue;
            ++cls.edges_checked;
            std::vector<Vertex> lifted;
            for (Vertex b : ball(small, {u, u ^ w, v, v ^ w}, radius))
                for (Vertex tail = 0; tail < 4; ++tail) lifted.push_back(b | (tail << n));
            cls.lift_size = std::max(cls.lift_size, lifted.size());

            LiftEnumerator en(lifted, big);
            const std::size_t iu0 = en.index_of(u), iu1 = en.index_of((u ^ w) | lift_bit);
            const std::size_t iv0 = en.index_of(v), iv1 = en.index_of((v ^ w) | lift_bit);
            en.enumerate([&](const std::vector<Color>& c) {
                ++cls.colorings_enumerated;
                any_colorable = true;
                if (pair_representative(c[iu0], c[iu1]) == pair_representative(c[iv0], c[iv1]) &&
                    !cls.counterexample) {
                    std::vector<std::pair<Vertex, Color>> ce;
                    for (std::size_t i = 0; i < lifted.size(); ++i) ce.emplace_back(lifted[i], c[i]);
                    cls.counterexample = std::move(ce);
                }
                return true;
            });
        }
        cls.vacuous = !any_colorable;
        cls.pass = !cls.counterexample.has_value();
        report.classes.push_back(std::move(cls));
    }
    return report;
}

std::optional<LocalCheckReport> find_sufficient_radius(unsigned n, unsigned max_radius) {
    for (unsigned r = 0; r <= max_radius; ++r) {
        auto rep = lemma_local_check(n, r);
        if (rep.all_pass()) return rep;
    }
    return std::nullopt;
}

}  // namespace cubelike
