#pragma once

// Cubelike graphs: Cayley graphs Cay(Z_2^n, S), u ~ v iff u ^ v is in S.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubelike/gf2.hpp"

namespace cubelike {

using Vertex = std::uint32_t;

/// Graphs are materialized only up to this dimension (2^24 vertices).
inline constexpr unsigned kMaxDimension = 24;

/// The graph has a loop (0 is in S), so no proper coloring exists.
class LoopError : public std::domain_error {
public:
    LoopError() : std::domain_error("connection set contains 0: graph has loops and is not properly colorable") {}
};

/// Sorted, duplicate-free subset of Z_2^n. The zero element is allowed and
/// represents a loop at every vertex.
class ConnectionSet {
public:
    ConnectionSet(unsigned n, std::span<const Word> masks);
    ConnectionSet(unsigned n, std::initializer_list<Word> masks)
        : ConnectionSet(n, std::span<const Word>(masks.begin(), masks.size())) {}

    /// Parses "1,2,4,8,15". Whitespace around items is ignored; the empty string is the empty set.
    static ConnectionSet parse(unsigned n, std::string_view text);

    unsigned dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<BitVec>& elements() const noexcept { return elements_; }
    std::vector<Word> masks() const;

    bool contains(Word x) const noexcept;
    bool has_loop() const noexcept { return !elements_.empty() && elements_.front().is_zero(); }

    std::string to_string() const;

    friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

private:
    unsigned n_;
    std::vector<BitVec> elements_;
};

class CubelikeGraph {
public:
    const ConnectionSet& connection_set() const noexcept { return set_; }
    unsigned dimension() const noexcept { return set_.dimension(); }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << set_.dimension(); }
    /// Degree of every vertex; a loop counts once.
    std::size_t degree() const noexcept { return set_.size(); }
    bool has_loop() const noexcept { return set_.has_loop(); }

    bool adjacent(Vertex u, Vertex v) const { return member_.at(u ^ v); }
    std::vector<Vertex> neighbors(Vertex u) const;

private:
    friend CubelikeGraph build_graph(unsigned n, const ConnectionSet& s);
    explicit CubelikeGraph(ConnectionSet s);

    ConnectionSet set_;
    std::vector<bool> member_;
};

/// Rejects n above kMaxDimension or a set built for another dimension.
CubelikeGraph build_graph(unsigned n, const ConnectionSet& s);

/// Q^d_n = Cay(Z_2^n, {e_1, ..., e_n, w_n}). For n = 1, w_1 = e_1.
CubelikeGraph cube_with_diagonals(unsigned n);
ConnectionSet cube_with_diagonals_set(unsigned n);

/// Two-colors each component by BFS. Loops give false; edgeless graphs give true.
bool is_bipartite_bfs(const CubelikeGraph& g);

/// Bipartite iff some functional f: Z_2^n -> Z_2 has f(s) = 1 for all s in S.
/// Throws LoopError when 0 is in S.
bool is_bipartite_parity(const ConnectionSet& s);

/// The columns of S as a GF(2) matrix with n rows.
Gf2Matrix connection_matrix(const ConnectionSet& s);

/// 2^(n - rank S): the components are the cosets of span(S).
std::uint64_t component_count(const CubelikeGraph& g);

}  // namespace cubelike
