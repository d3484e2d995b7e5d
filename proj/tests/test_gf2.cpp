#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cubelike/gf2.hpp"
#include "oracles.hpp"

using namespace cubelike;

namespace {

Gf2Matrix matrix(unsigned rows, std::vector<Word> cols) {
    std::vector<BitVec> v;
    for (Word c : cols) v.emplace_back(c, rows);
    return Gf2Matrix(rows, v);
}

}  // namespace

TEST_CASE("BitVec construction and encoding") {
    CHECK(BitVec::unit(0, 3).bits() == 0b001);
    CHECK(BitVec::unit(2, 3).bits() == 0b100);
    CHECK(BitVec::ones(4).bits() == 0b1111);
    CHECK((BitVec(0b101, 3) ^ BitVec(0b101, 3)).is_zero());
    CHECK(dot(BitVec(0b111, 3), BitVec(0b011, 3)) == false);
    CHECK(dot(BitVec(0b111, 3), BitVec(0b001, 3)) == true);

    CHECK_THROWS_AS(BitVec(0b100, 2), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(0, 65), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(1, 2) ^ BitVec(1, 3), std::invalid_argument);
    CHECK(BitVec::ones(64).bits() == ~Word{0});
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(matrix(2, {0b01, 0b10})).empty());

    auto k = kernel_basis(matrix(2, {0b01, 0b10, 0b11}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == BitVec(0b111, 3));
    // Oracle: the null space is {000, 111}.
    CHECK(oracle::null_space({0b01, 0b10, 0b11}) == std::vector<Word>{0b000, 0b111});

    auto z = kernel_basis(matrix(1, {0}));
    REQUIRE(z.size() == 1);
    CHECK(z[0] == BitVec(1, 1));
}

TEST_CASE("kernel_basis is reduced echelon with ascending free columns") {
    // Columns: 1, 1, 2, 3 over two rows. Pivots are columns 0 and 2.
    auto k = kernel_basis(matrix(2, {0b01, 0b01, 0b10, 0b11}));
    REQUIRE(k.size() == 2);
    CHECK(k[0].bits() == 0b0011);  // col1 = col0
    CHECK(k[1].bits() == 0b1101);  // col3 = col0 + col2
}

TEST_CASE("solve_all_ones examples") {
    auto one = solve_all_ones(matrix(1, {1}));
    REQUIRE(one);
    CHECK(one->bits() == 1);

    CHECK_FALSE(solve_all_ones(matrix(2, {0b01, 0b10, 0b11})));

    auto x = solve_all_ones(matrix(3, {0b001, 0b010, 0b100, 0b111}));
    REQUIRE(x);
    CHECK(x->bits() == 0b111);
    for (Word c : {0b001, 0b010, 0b100, 0b111}) CHECK(dot(*x, BitVec(c, 3)));

    CHECK_FALSE(solve_all_ones(matrix(2, {0})));
    auto empty = solve_all_ones(matrix(3, {}));
    REQUIRE(empty);
    CHECK(empty->is_zero());
}

TEST_CASE("span examples") {
    CHECK(span(std::vector<BitVec>{}, 2) == std::vector<BitVec>{BitVec(0, 2)});
    std::vector<BitVec> g{BitVec(0b01, 2), BitVec(0b10, 2)};
    CHECK(span(g, 2) == std::vector<BitVec>{BitVec(0, 2), BitVec(1, 2), BitVec(2, 2), BitVec(3, 2)});
    std::vector<BitVec> h{BitVec(0b11, 2)};
    CHECK(span(h, 2) == std::vector<BitVec>{BitVec(0, 2), BitVec(3, 2)});
    std::vector<BitVec> mixed{BitVec(1, 2), BitVec(1, 3)};
    CHECK_THROWS_AS(span(mixed, 2), std::invalid_argument);
}

TEST_CASE("Gf2Basis reduce gives the minimum of the coset") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Word> gens;
        Gf2Basis b;
        for (int i = 0; i < 3; ++i) {
            gens.push_back(rng() & 0x3f);
            b.insert(gens.back());
        }
        const auto sp = oracle::span(gens);
        CHECK(b.rank() == std::bit_width(sp.size()) - 1);
        const Word x = rng() & 0x3f;
        Word best = ~Word{0};
        for (Word h : sp) best = std::min(best, x ^ h);
        CHECK(b.reduce(x) == best);
    }
}

TEST_CASE("property: kernel, Fredholm duality, span closure on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned rows = 1 + rng() % 6;
        const unsigned cols = rng() % 9;
        std::vector<Word> c;
        for (unsigned j = 0; j < cols; ++j) c.push_back(rng() & low_mask(rows));
        const auto b = matrix(rows, c);

        const auto basis = kernel_basis(b);
        for (const auto& v : basis) CHECK(b.apply(v).is_zero());
        const auto brute = oracle::null_space(c);
        CHECK(brute.size() == (std::size_t{1} << basis.size()));
        CHECK(rank(std::span<const BitVec>(basis)) == basis.size());
        for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1].bits() < basis[i].bits());

        // solve_all_ones succeeds iff no null-space vector has odd weight.
        const bool odd_relation =
            std::any_of(brute.begin(), brute.end(), [](Word a) { return std::popcount(a) % 2 == 1; });
        const auto x = solve_all_ones(b);
        CHECK(x.has_value() == !odd_relation);
        CHECK(x.has_value() == oracle::all_ones_solvable(c, rows));
        if (x)
            for (const auto& col : b.columns()) CHECK(dot(*x, col));

        const auto sp = span(b.columns(), rows);
        CHECK(std::has_single_bit(sp.size()));
        const std::set<BitVec> members(sp.begin(), sp.end());
        for (const auto& u : sp)
            for (const auto& v : sp) CHECK(members.count(u ^ v) == 1);
        CHECK(sp.size() == oracle::span(c).size());
    }
}
