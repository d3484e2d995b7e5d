#pragma once

// Exact colouring of cubelike graphs, the explicit 4-colouring of the
// cube-with-diagonals, and the 3-colouring reduction from Q^d_{n+2} to Q^d_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubelike/cayley.hpp"

namespace cubelike {

using Color = std::int32_t;

/// Colors indexed by vertex bitmask; -1 marks an unassigned vertex.
struct Coloring {
    int k = 0;
    std::vector<Color> colors;

    bool total() const noexcept;
    /// Number of distinct colors actually used.
    int used_colors() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class SolveStatus { Colorable, Uncolorable, HasLoop, Unresolved };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Uncolorable;
    /// Palette size the status refers to (the chromatic number when Colorable,
    /// the best known upper bound when Unresolved).
    int k = 0;
    std::optional<int> chi;
    std::optional<Coloring> witness;
    /// chi >= proven_lower; equals chi when resolved.
    int proven_lower = 0;
    /// Clique number of the graph.
    int clique_bound = 0;
    /// max(clique number, ceil(|V| / independence number)); the search starts here.
    int lower_bound = 0;
};

/// A proper k-coloring or nullopt, decided by exhaustive backtracking on the
/// component of 0 and translated to every other component. Throws LoopError.
std::optional<Coloring> k_colorable(const CubelikeGraph& g, int k);

enum class Decision { Yes, No, Unknown };

/// k_colorable with a cap on search nodes (0 = unlimited). Unknown when the cap
/// is hit before a decision; the count is deterministic.
Decision k_colorable_limited(const CubelikeGraph& g, int k, std::uint64_t node_limit,
                             std::optional<Coloring>* witness = nullptr);

/// Exact chromatic number: k_colorable for k upward from the clique and
/// fractional (|V| / alpha) bounds. Never throws on loops; reports HasLoop instead.
/// With a node limit per k, an undecided k keeps the search going upward and the
/// result is Unresolved with proven_lower <= chi <= k.
SolveResult chromatic_number(const CubelikeGraph& g, std::uint64_t node_limit_per_k = 0);

/// color(x) = 2 x_1 + (x_2 ^ ... ^ x_n), a proper 4-coloring of Q^d_n for n >= 2.
Coloring sokolova_coloring(unsigned n);

/// True iff c is total, in range, and no edge is monochromatic. Loops force false.
bool verify_coloring(const CubelikeGraph& g, const Coloring& c);

/// The representative k of the color pair {a, b} in Z_3: {k} -> k and
/// {k, k+1 mod 3} -> k.
Color pair_representative(Color a, Color b);

/// c'(v) = pair_representative(c(v*(0,0)), c((v + w_n)*(1,0))), where the two
/// appended coordinates sit at bit positions n and n+1. c must be a total
/// 3-coloring of Z_2^{n+2} with n >= 1.
Coloring reduce_coloring(const Coloring& c);

struct EdgeClassReport {
    std::string edge_class;  // "e1".."en" or "w"
    Word generator = 0;
    std::size_t edges_checked = 0;
    std::size_t lift_size = 0;             // vertices in the largest lift set
    std::uint64_t colorings_enumerated = 0;  // proper 3-colorings of lift sets, summed over edges
    bool vacuous = false;                  // no lift set admitted a proper 3-coloring
    bool pass = false;
    /// First counterexample: lift vertices and their colors.
    std::optional<std::vector<std::pair<Vertex, Color>>> counterexample;
};

struct LocalCheckReport {
    unsigned n = 0;
    unsigned radius = 0;
    std::vector<EdgeClassReport> classes;
    bool all_pass() const;
};

/// For every edge (u, u+s) of Q^d_n, enumerates the proper 3-colorings of the
/// subgraph of Q^d_{n+2} induced on L x Z_2^2, where L is the radius-ball in
/// Q^d_n around {u, u+w, v, v+w}, and checks c'(u) != c'(v) in each.
/// n must be 2 or 4.
LocalCheckReport lemma_local_check(unsigned n, unsigned radius);

/// Smallest radius in [0, max_radius] at which every edge class passes.
std::optional<LocalCheckReport> find_sufficient_radius(unsigned n, unsigned max_radius);

}  // namespace cubelike
