#pragma once

// Heuberger matrices (A | 2I_m) for cubelike graphs and the standardized
// abelian Cayley graphs (SACGs) they define.
//
// Row i of the matrix corresponds to the i-th element s_i of the connection
// set (ascending order). Each column of A is an integer relation: the sum of
// c_i * s_i vanishes in Z_2^n. The 2I_m block is always present and is not
// stored.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubelike/cayley.hpp"
#include "cubelike/gf2.hpp"

namespace cubelike {

using IntColumn = std::vector<std::int64_t>;

struct HeubergerMatrix {
    std::size_t m = 0;
    std::vector<IntColumn> a_columns;
    bool two_identity = true;
    /// The (n, S) the matrix was built from, when it was built from a graph.
    std::optional<ConnectionSet> source;

    /// Column j of A reduced mod 2 and packed into a word (bit i = row i).
    Word column_mask(std::size_t j) const;

    friend bool operator==(const HeubergerMatrix&, const HeubergerMatrix&) = default;
};

/// A = canonical GF(2) kernel basis of the columns of S, sorted by support
/// mask. Requires S nonempty and |S| <= 64.
HeubergerMatrix heuberger_matrix(const ConnectionSet& s);

/// Entrywise mod 2, then drops columns that became zero.
HeubergerMatrix reduce_columns_mod2(const HeubergerMatrix& m);

/// Cayley graph of Z_2^m / span(A mod 2) with generators the images of e_1..e_m.
/// Vertices are the minimum bitmask of each coset.
class SacgGraph {
public:
    std::size_t generator_count() const noexcept { return m_; }
    const std::vector<Word>& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    /// Canonical coset representative of x in Z_2^m.
    Word canonical(Word x) const noexcept { return relations_.reduce(x); }
    std::size_t index_of(Word rep) const;

    /// Images of rep + e_i for i = 0..m-1; repeats are kept, so the length is always m.
    std::vector<Word> neighbors(Word rep) const;
    bool adjacent(Word u, Word v) const;

    unsigned relation_rank() const noexcept { return relations_.rank(); }

private:
    friend SacgGraph sacg_build(const HeubergerMatrix& m);

    std::size_t m_ = 0;
    Gf2Basis relations_;
    std::vector<Word> vertices_;
};

/// Requires the 2I block and 0/1 entries; the quotient must have at most 2^24 vertices.
SacgGraph sacg_build(const HeubergerMatrix& m);

/// Checks that e_i -> s_i induces a well-defined bijective, edge-preserving
/// map from sacg_build(m) onto the component of 0 in Cay(Z_2^n, S).
bool verify_canonical_iso(const HeubergerMatrix& m, const ConnectionSet& s);

/// Checks that coset(x) -> (x_1 ^ x_z, ..., x_{z-1} ^ x_z) is an isomorphism
/// from the SACG of (w_z | 2I_z) onto Q^d_{z-1}. z must be odd and >= 3.
bool verify_qd_iso(unsigned z);

/// The SACG matrix (w_z | 2I_z).
HeubergerMatrix all_ones_relation_matrix(unsigned z);

struct OddColumn {
    std::size_t column = 0;
    std::vector<std::size_t> support;  // zero-based row indices, ascending
    std::size_t z = 0;

    friend bool operator==(const OddColumn&, const OddColumn&) = default;
};

/// First column of A with an odd number of ones. Entries must be 0/1.
std::optional<OddColumn> find_odd_column(const HeubergerMatrix& m);

/// Odd column with the fewest ones, ties to the lowest column index.
std::optional<OddColumn> find_smallest_odd_column(const HeubergerMatrix& m);

}  // namespace cubelike
