#pragma once

// Linear algebra over GF(2) with vectors packed into a single machine word.
//
// Coordinate convention: bit j (value 2^j) holds coordinate j+1, so the unit
// vector e_1 is 0b1 and the all-ones vector w_n is 2^n - 1.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cubelike {

using Word = std::uint64_t;

/// Largest number of coordinates a BitVec can carry.
inline constexpr unsigned kMaxWidth = 64;

inline constexpr Word low_mask(unsigned width) {
    return width >= 64 ? ~Word{0} : ((Word{1} << width) - 1);
}

/// An element of Z_2^width. Addition is XOR, so every element is its own inverse.
class BitVec {
public:
    BitVec() = default;
    BitVec(Word bits, unsigned width);

    /// e_{j+1}: a single 1 in coordinate j (zero-based).
    static BitVec unit(unsigned j, unsigned width);
    /// w_width: 1 in every coordinate.
    static BitVec ones(unsigned width);
    static BitVec zero(unsigned width) { return BitVec(0, width); }

    Word bits() const noexcept { return bits_; }
    unsigned width() const noexcept { return width_; }

    bool operator[](unsigned j) const noexcept { return (bits_ >> j) & 1u; }
    int popcount() const noexcept { return std::popcount(bits_); }
    bool is_zero() const noexcept { return bits_ == 0; }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.width_ <=> b.width_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Word bits_ = 0;
    unsigned width_ = 1;
};

/// Standard inner product over GF(2).
bool dot(const BitVec& a, const BitVec& b);

/// A rows x cols matrix stored column by column.
class Gf2Matrix {
public:
    Gf2Matrix(unsigned rows, std::vector<BitVec> columns);

    unsigned rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const std::vector<BitVec>& columns() const noexcept { return columns_; }
    const BitVec& column(std::size_t j) const { return columns_.at(j); }

    /// B * v, where v has width cols().
    BitVec apply(const BitVec& v) const;

private:
    unsigned rows_;
    std::vector<BitVec> columns_;
};

/// Fully reduced XOR basis keyed by leading (highest) bit.
///
/// Every stored vector has a distinct leading bit and no stored vector has a
/// bit set at another vector's leading position. Each vector carries a tag
/// word that is XOR-combined alongside it, which is how kernels and affine
/// right-hand sides are tracked.
class Gf2Basis {
public:
    struct Insertion {
        bool independent;
        Word tag;  // for a dependent vector: the tag combination that cancels it
    };

    Insertion insert(Word v, Word tag = 0);

    /// Smallest element of the coset x + span.
    Word reduce(Word x) const noexcept;
    bool contains(Word x) const noexcept { return reduce(x) == 0; }

    unsigned rank() const noexcept { return static_cast<unsigned>(std::popcount(leads_)); }
    Word leads() const noexcept { return leads_; }

    /// Basis vectors ordered by ascending leading bit.
    std::vector<Word> vectors() const;
    std::vector<Word> tags() const;

private:
    std::array<Word, 64> vec_{};
    std::array<Word, 64> tag_{};
    Word leads_ = 0;
};

/// Canonical basis of the null space of B, one vector per free column in
/// ascending order. Each vector has width B.cols().
std::vector<BitVec> kernel_basis(const Gf2Matrix& b);

/// Some x with x . b_j = 1 for every column b_j, or nullopt if none exists.
std::optional<BitVec> solve_all_ones(const Gf2Matrix& b);

/// Every element of the span, ascending by bitmask.
std::vector<BitVec> span(std::span<const BitVec> generators, unsigned width);

unsigned rank(std::span<const BitVec> generators);

}  // namespace cubelike
