#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mobpoly/boolfn.hpp"
#include "mobpoly/errors.hpp"
#include "testutil.hpp"

using namespace mobpoly;
using testutil::ids;
using testutil::make_poly;

namespace {

TruthTable table_of(int n, const char* row) {
    std::vector<std::uint8_t> v;
    for (const char* p = row; *p; ++p) v.push_back(static_cast<std::uint8_t>(*p - '0'));
    return TruthTable(n, std::move(v));
}

} // namespace

TEST_CASE("table construction validates shape") {
    CHECK_THROWS_AS(TruthTable(2, {0, 1}), DimensionMismatch);
    CHECK_THROWS_AS(TruthTable(25, std::vector<std::uint8_t>(8, 0), kMaxTableVars), TooLarge);
    TruthTable t(1, {0, 7}); // normalizes nonzero to 1
    CHECK(t(1) == 1);
    TruthTable b = TruthTable::build(2, [](std::uint32_t x) { return x == 3; });
    CHECK(b.values == std::vector<std::uint8_t>{0, 0, 0, 1});
}

TEST_CASE("monotonicity detection") {
    CHECK(is_monotone(table_of(2, "0001"))); // and
    CHECK(is_monotone(table_of(2, "0111"))); // or
    CHECK(is_monotone(table_of(3, "00010111"))); // majority
    CHECK(!is_monotone(table_of(2, "0110"))); // xor
    CHECK(!is_monotone(table_of(1, "10")));
    CHECK(is_monotone(table_of(2, "0000")));
    CHECK(is_monotone(table_of(2, "1111")));
}

TEST_CASE("prime implicants of standard functions") {
    CHECK(prime_implicants(table_of(2, "0111")) == std::vector<Bitset>{ids({1}), ids({2})});
    CHECK(prime_implicants(table_of(2, "0001")) == std::vector<Bitset>{ids({1, 2})});
    CHECK(prime_implicants(table_of(3, "00010111")) ==
          std::vector<Bitset>{ids({1, 2}), ids({1, 3}), ids({2, 3})});
    CHECK(prime_implicants(table_of(2, "0000")).empty());
    CHECK_THROWS_AS(prime_implicants(table_of(2, "0110")), NonMonotone);
    CHECK_THROWS_AS(prime_implicants(table_of(2, "1111")), ConstantOne);
}

TEST_CASE("implicants are minimal true points") {
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        TruthTable t = testutil::random_monotone_table(n, rng);
        auto pi = prime_implicants(t);
        for (const Bitset& s : pi) {
            std::uint32_t mask = 0;
            for (int b : s.bits()) mask |= std::uint32_t{1} << b;
            CHECK(t(mask) == 1);
            for (int b : s.bits())
                CHECK(t(mask & ~(std::uint32_t{1} << b)) == 0);
        }
        for (std::size_t i = 1; i < pi.size(); ++i)
            CHECK(!pi[i - 1].is_subset_of(pi[i]));
    }
}

TEST_CASE("interpolation of small named functions") {
    CHECK(interpolate(table_of(2, "0110")) ==
          make_poly(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, -2}}));
    CHECK(interpolate(table_of(3, "00010111")) ==
          make_poly(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}, {{1, 2, 3}, -2}}));
    CHECK(interpolate(table_of(2, "0001")) == make_poly(2, {{{1, 2}, 1}}));
    CHECK(interpolate(table_of(1, "10")) == make_poly(1, {{{}, 1}, {{1}, -1}}));
    CHECK(interpolate(table_of(2, "0000")).terms.empty());
}

TEST_CASE("interpolation agrees with the table at every point") {
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::uint8_t> v(std::size_t{1} << n);
        for (auto& x : v) x = static_cast<std::uint8_t>(rng() & 1);
        TruthTable t(n, v);
        MultilinearPoly p = interpolate(t);
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            Bitset point = Bitset::from_mask(x);
            CHECK(p.evaluate(point) == t(x));
        }
    }
}

TEST_CASE("interpolation guard") {
    CHECK_THROWS_AS(interpolate(table_of(2, "0111"), 1), TooLarge);
}

TEST_CASE("dualization") {
    CHECK(dualize(table_of(2, "0001")).values == table_of(2, "0111").values);
    CHECK(dualize(table_of(2, "0111")).values == table_of(2, "0001").values);
    std::mt19937 rng(13);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::uint8_t> v(std::size_t{1} << n);
        for (auto& x : v) x = static_cast<std::uint8_t>(rng() & 1);
        TruthTable t(n, v);
        CHECK(dualize(dualize(t)).values == t.values);
    }
}
