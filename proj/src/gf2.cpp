#include "cubelike/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubelike {

namespace {

void check_width(unsigned width) {
    if (width == 0 || width > kMaxWidth)
        throw std::invalid_argument("BitVec width must be in [1, " + std::to_string(kMaxWidth) +
                                    "], got " + std::to_string(width));
}

}  // namespace

BitVec::BitVec(Word bits, unsigned width) : bits_(bits), width_(width) {
    check_width(width);
    if ((bits & ~low_mask(width)) != 0)
        throw std::invalid_argument("BitVec value " + std::to_string(bits) +
                                    " has bits at or above width " + std::to_string(width));
}

BitVec BitVec::unit(unsigned j, unsigned width) {
    if (j >= width) throw std::invalid_argument("unit vector index out of range");
    return BitVec(Word{1} << j, width);
}

BitVec BitVec::ones(unsigned width) {
    check_width(width);
    return BitVec(low_mask(width), width);
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.width_ != width_) throw std::invalid_argument("BitVec width mismatch in addition");
    bits_ ^= other.bits_;
    return *this;
}

bool dot(const BitVec& a, const BitVec& b) {
    if (a.width() != b.width()) throw std::invalid_argument("BitVec width mismatch in dot");
    return std::popcount(a.bits() & b.bits()) & 1;
}

Gf2Matrix::Gf2Matrix(unsigned rows, std::vector<BitVec> columns)
    : rows_(rows), columns_(std::move(columns)) {
    check_width(rows);
    for (const auto& c : columns_)
        if (c.width() != rows_) throw std::invalid_argument("matrix column width differs from row count");
}

BitVec Gf2Matrix::apply(const BitVec& v) const {
    if (v.width() != cols()) throw std::invalid_argument("vector width differs from column count");
    Word acc = 0;
    for (std::size_t j = 0; j < columns_.size(); ++j)
        if (v[static_cast<unsigned>(j)]) acc ^= columns_[j].bits();
    return BitVec(acc, rows_);
}

Gf2Basis::Insertion Gf2Basis::insert(Word v, Word tag) {
    for (int b = 63; b >= 0 && v != 0; --b) {
        if (((v >> b) & 1) && ((leads_ >> b) & 1)) {
            v ^= vec_[b];
            tag ^= tag_[b];
        }
    }
    if (v == 0) return {false, tag};

    const int lead = 63 - std::countl_zero(v);
    for (Word rest = leads_; rest != 0; rest &= rest - 1) {
        const int b = std::countr_zero(rest);
        if ((vec_[b] >> lead) & 1) {
            vec_[b] ^= v;
            tag_[b] ^= tag;
        }
    }
    vec_[lead] = v;
    tag_[lead] = tag;
    leads_ |= Word{1} << lead;
    return {true, tag};
}

Word Gf2Basis::reduce(Word x) const noexcept {
    for (Word rest = leads_ & x; rest != 0;) {
        const int b = 63 - std::countl_zero(rest);
        x ^= vec_[b];
        rest = leads_ & x & low_mask(static_cast<unsigned>(b));
    }
    return x;
}

std::vector<Word> Gf2Basis::vectors() const {
    std::vector<Word> out;
    for (Word rest = leads_; rest != 0; rest &= rest - 1) out.push_back(vec_[std::countr_zero(rest)]);
    return out;
}

std::vector<Word> Gf2Basis::tags() const {
    std::vector<Word> out;
    for (Word rest = leads_; rest != 0; rest &= rest - 1) out.push_back(tag_[std::countr_zero(rest)]);
    return out;
}

std::vector<BitVec> kernel_basis(const Gf2Matrix& b) {
    if (b.cols() > kMaxWidth)
        throw std::invalid_argument("kernel vectors need one coordinate per column; at most " +
                                    std::to_string(kMaxWidth) + " columns supported");
    const auto cols = static_cast<unsigned>(b.cols());
    std::vector<BitVec> out;
    Gf2Basis basis;
    for (unsigned j = 0; j < cols; ++j) {
        auto ins = basis.insert(b.column(j).bits(), Word{1} << j);
        // The cancelling combination involves column j and earlier pivot columns only.
        if (!ins.independent) out.emplace_back(ins.tag, cols);
    }
    return out;
}

std::optional<BitVec> solve_all_ones(const Gf2Matrix& b) {
    Gf2Basis equations;
    for (const auto& c : b.columns()) {
        auto ins = equations.insert(c.bits(), 1);
        if (!ins.independent && ins.tag != 0) return std::nullopt;
    }
    // Free coordinates are zero; each reduced equation then fixes its lead coordinate.
    Word x = 0;
    const auto vecs = equations.vectors();
    const auto rhs = equations.tags();
    for (std::size_t i = 0; i < vecs.size(); ++i)
        if (rhs[i] & 1) x |= Word{1} << (63 - std::countl_zero(vecs[i]));
    return BitVec(x, b.rows());
}

std::vector<BitVec> span(std::span<const BitVec> generators, unsigned width) {
    Gf2Basis basis;
    for (const auto& g : generators) {
        if (g.width() != width) throw std::invalid_argument("span generators must share one width");
        basis.insert(g.bits());
    }
    std::vector<Word> elems{0};
    for (Word v : basis.vectors()) {
        const std::size_t sz = elems.size();
        for (std::size_t i = 0; i < sz; ++i) elems.push_back(elems[i] ^ v);
    }
    std::sort(elems.begin(), elems.end());
    std::vector<BitVec> out;
    out.reserve(elems.size());
    for (Word e : elems) out.emplace_back(e, width);
    return out;
}

unsigned rank(std::span<const BitVec> generators) {
    Gf2Basis basis;
    for (const auto& g : generators) basis.insert(g.bits());
    return basis.rank();
}

}  // namespace cubelike
