#include "cubelike/homomorphism.hpp"

#include <stdexcept>
#include <string>

namespace cubelike {

Word HomWitness::map(Vertex x) const {
    Word acc = 0;
    for (unsigned j = 0; j + 1 < z; ++j)
        if ((x >> j) & 1) acc ^= images[j];
    return acc;
}

HomWitness build_witness(const ConnectionSet& s, const std::vector<std::size_t>& support) {
    const std::size_t z = support.size();
    if (z % 2 == 0) throw std::invalid_argument("witness support size must be odd, got " + std::to_string(z));
    if (z < 3) throw std::invalid_argument("witness support size must be at least 3, got " + std::to_string(z));
    if (z - 1 > kMaxDimension) throw std::invalid_argument("witness source dimension exceeds cap");
    Word sum = 0;
    std::vector<Word> images;
    for (std::size_t j = 0; j < z; ++j) {
        if (support[j] >= s.size()) throw std::invalid_argument("support index out of range");
        if (j > 0 && support[j] <= support[j - 1])
            throw std::invalid_argument("support indices must be strictly ascending");
        images.push_back(s.elements()[support[j]].bits());
        sum ^= images.back();
    }
    if (sum != 0) throw std::invalid_argument("support elements do not sum to zero");
    return HomWitness{static_cast<unsigned>(z), s, support, std::move(images)};
}

bool verify_witness(const HomWitness& w) {
    if (w.z < 3 || w.z % 2 == 0 || w.z - 1 > kMaxDimension) return false;
    if (w.images.size() != w.z || w.support.size() != w.z) return false;
    for (std::size_t j = 0; j < w.z; ++j) {
        if (w.support[j] >= w.target.size()) return false;
        if (w.target.elements()[w.support[j]].bits() != w.images[j]) return false;
    }
    const unsigned n = w.source_dimension();
    const auto source = cube_with_diagonals_set(n);
    // The image of the diagonal is whatever psi computes; it must agree with the recorded one.
    if (w.map(static_cast<Vertex>(low_mask(n))) != w.images.back()) return false;
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t u = 0; u < count; ++u) {
        const Word pu = w.map(static_cast<Vertex>(u));
        for (const auto& g : source.elements()) {
            const Vertex v = static_cast<Vertex>(u ^ g.bits());
            if (!w.target.contains(pu ^ w.map(v))) return false;
        }
    }
    return true;
}

Coloring pull_back_coloring(const HomWitness& w, const Coloring& c) {
    const std::size_t target_size = std::size_t{1} << w.target.dimension();
    if (c.colors.size() != target_size || !c.total())
        throw std::invalid_argument("pullback needs a coloring total on the target's vertices");
    Coloring out;
    out.k = c.k;
    const std::size_t count = std::size_t{1} << w.source_dimension();
    out.colors.resize(count);
    for (std::size_t x = 0; x < count; ++x) out.colors[x] = c.colors[w.map(static_cast<Vertex>(x))];
    return out;
}

}  // namespace cubelike
