#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "mobpoly/bitset.hpp"

using mobpoly::Bitset;

TEST_CASE("construction and bit access") {
    Bitset b;
    CHECK(b.empty());
    CHECK(b.count() == 0);
    b.set(0);
    b.set(70);
    CHECK(b.test(0));
    CHECK(b.test(70));
    CHECK(!b.test(1));
    CHECK(b.count() == 2);
    CHECK(b.bits() == std::vector<int>{0, 70});

    Bitset m = Bitset::from_mask(0b1011);
    CHECK(m.bits() == std::vector<int>{0, 1, 3});
    CHECK(Bitset::singleton(5).bits() == std::vector<int>{5});
}

TEST_CASE("reset trims to a canonical representation") {
    Bitset a;
    a.set(200);
    a.reset(200);
    CHECK(a == Bitset{});
    CHECK(a.empty());
    Bitset b = Bitset::from_mask(1);
    Bitset c;
    c.set(0);
    c.set(100);
    c.reset(100);
    CHECK(b == c);
    CHECK(Bitset::Hash{}(b) == Bitset::Hash{}(c));
}

TEST_CASE("set algebra") {
    Bitset a = Bitset::from_mask(0b0111);
    Bitset b = Bitset::from_mask(0b1100);
    CHECK((a | b) == Bitset::from_mask(0b1111));
    CHECK((a & b) == Bitset::from_mask(0b0100));
    CHECK(minus(a, b) == Bitset::from_mask(0b0011));
    CHECK(Bitset::from_mask(0b0011).is_subset_of(a));
    CHECK(!a.is_subset_of(b));
    CHECK(a.intersects(b));
    CHECK(!Bitset::from_mask(0b0011).intersects(b));
    Bitset wide;
    wide.set(64);
    CHECK((a & wide).empty());
    CHECK(a.is_subset_of(a | wide));
}

TEST_CASE("canonical order: cardinality first, then value") {
    std::vector<Bitset> v = {
        Bitset::from_mask(0b0011), // {1,2}
        Bitset::from_mask(0b0100), // {3}
        Bitset{},                  // {}
        Bitset::from_mask(0b0111), // {1,2,3}
        Bitset::from_mask(0b0101), // {1,3}
        Bitset::from_mask(0b0001), // {1}
    };
    std::sort(v.begin(), v.end(), mobpoly::CanonicalLess{});
    CHECK(v[0] == Bitset{});
    CHECK(v[1] == Bitset::from_mask(0b0001));
    CHECK(v[2] == Bitset::from_mask(0b0100));
    CHECK(v[3] == Bitset::from_mask(0b0011));
    CHECK(v[4] == Bitset::from_mask(0b0101));
    CHECK(v[5] == Bitset::from_mask(0b0111));
}

TEST_CASE("value order is total on trimmed sets") {
    Bitset big;
    big.set(80);
    CHECK(value_order(Bitset::from_mask(0b10), Bitset::from_mask(0b11)) < 0);
    CHECK(value_order(Bitset::from_mask(0b11), big) < 0);
    CHECK(value_order(big, big) == 0);
}

TEST_CASE("for_each_bit visits ascending") {
    Bitset b;
    b.set(3);
    b.set(65);
    b.set(7);
    std::vector<std::size_t> seen;
    b.for_each_bit([&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{3, 7, 65});
}
