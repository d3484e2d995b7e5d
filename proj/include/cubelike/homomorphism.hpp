#pragma once

// Homomorphisms Q^d_{z-1} -> Cay(Z_2^n, S) built from an odd relation
// s_{i_1} + ... + s_{i_z} = 0 among connection-set elements.

#include <vector>

#include "cubelike/cayley.hpp"
#include "cubelike/coloring.hpp"

namespace cubelike {

struct HomWitness {
    unsigned z = 0;
    ConnectionSet target = ConnectionSet(1, std::span<const Word>{});
    std::vector<std::size_t> support;  // zero-based indices into target, ascending
    /// images[j] = s_{i_{j+1}}; the first z-1 are the images of e_1..e_{z-1},
    /// the last is the image of w_{z-1}.
    std::vector<Word> images;

    unsigned source_dimension() const noexcept { return z - 1; }
    /// psi(x) = XOR of images[j] over the set bits j of x.
    Word map(Vertex x) const;
};

/// Throws std::invalid_argument for even z, z < 3, bad indices, or a support
/// whose elements do not sum to zero.
HomWitness build_witness(const ConnectionSet& s, const std::vector<std::size_t>& support);

/// Edge-by-edge check that psi sends every edge of Q^d_{z-1} to an edge of the target.
bool verify_witness(const HomWitness& w);

/// c o psi. Throws if c is not total on the target.
Coloring pull_back_coloring(const HomWitness& w, const Coloring& c);

}  // namespace cubelike
