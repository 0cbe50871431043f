#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mobpoly/boolfn.hpp"
#include "mobpoly/errors.hpp"
#include "mobpoly/lattice.hpp"
#include "testutil.hpp"

using namespace mobpoly;
using testutil::ids;
using testutil::make_poly;

TEST_CASE("antichain validation") {
    require_antichain({ids({1}), ids({2})});
    require_antichain({ids({1, 2}), ids({1, 3}), ids({2, 3})});
    CHECK_THROWS_AS(require_antichain({}), NotAntichain);
    CHECK_THROWS_AS(require_antichain({ids({1}), ids({1, 2})}), NotAntichain);
    CHECK_THROWS_AS(require_antichain({Bitset{}}), NotAntichain);
    CHECK_THROWS_AS(require_antichain({ids({1}), ids({1})}), NotAntichain);
}

TEST_CASE("union family of small antichains") {
    UnionFamily u = unions({ids({1}), ids({2})}, 2);
    CHECK(u.elements == std::vector<Bitset>{Bitset{}, ids({1}), ids({2}), ids({1, 2})});
    CHECK(u.atoms == std::vector<Bitset>{ids({1}), ids({2})});

    UnionFamily maj = unions({ids({1, 2}), ids({1, 3}), ids({2, 3})}, 3);
    CHECK(maj.elements == std::vector<Bitset>{Bitset{}, ids({1, 2}), ids({1, 3}), ids({2, 3}),
                                              ids({1, 2, 3})});
    CHECK(maj.contains(ids({1, 3})));
    CHECK(!maj.contains(ids({1})));
    CHECK_THROWS_AS(unions({ids({1}), ids({2}), ids({3})}, 3, 7), TooLarge);
}

TEST_CASE("moebius values on small families") {
    UnionFamily single = unions({ids({1})}, 1);
    MoebiusTable mu = moebius(single);
    CHECK(mu.mu[single.index_of(ids({1}))] == -1);

    UnionFamily square = unions({ids({1}), ids({2})}, 2);
    mu = moebius(square);
    CHECK(mu.mu[square.index_of(ids({1, 2}))] == 1);

    UnionFamily maj = unions({ids({1, 2}), ids({1, 3}), ids({2, 3})}, 3);
    mu = moebius(maj);
    CHECK(mu.mu[maj.index_of(ids({1, 2, 3}))] == 2);
}

TEST_CASE("moebius sums vanish below every nonempty element") {
    std::mt19937 rng(17);
    for (int round = 0; round < 80; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        UnionFamily u = unions(testutil::random_antichain(n, rng), n);
        MoebiusTable mu = moebius(u);
        CHECK(mu.mu[0] == 1);
        for (std::size_t i = 1; i < u.elements.size(); ++i) {
            mpz_class total = 0;
            for (std::size_t j = 0; j < u.elements.size(); ++j)
                if (u.elements[j].is_subset_of(u.elements[i])) total += mu.mu[j];
            CHECK(total == 0);
        }
    }
}

TEST_CASE("interval moebius values") {
    UnionFamily cube = unions({ids({1}), ids({2}), ids({3})}, 3);
    CHECK(moebius_interval(cube, ids({1}), ids({1})) == 1);
    CHECK(moebius_interval(cube, ids({1}), ids({1, 2})) == -1);
    CHECK(moebius_interval(cube, ids({1}), ids({1, 2, 3})) == 1);
    CHECK(moebius_interval(cube, Bitset{}, ids({1, 2, 3})) == -1);
    UnionFamily maj = unions({ids({1, 2}), ids({1, 3}), ids({2, 3})}, 3);
    CHECK(moebius_interval(maj, Bitset{}, ids({1, 2, 3})) == 2);
    CHECK(moebius_interval(maj, ids({1, 2}), ids({1, 2, 3})) == -1);
}

TEST_CASE("representing polynomials of small antichains") {
    CHECK(representing_poly({ids({1}), ids({2})}, 2) ==
          make_poly(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, -1}}));
    CHECK(representing_poly({ids({1, 2})}, 2) == make_poly(2, {{{1, 2}, 1}}));
    CHECK(representing_poly({ids({1, 2}), ids({1, 3}), ids({2, 3})}, 3) ==
          make_poly(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}, {{1, 2, 3}, -2}}));
}

TEST_CASE("representing polynomial matches interpolation on random monotone tables") {
    std::mt19937 rng(19);
    for (int round = 0; round < 120; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        TruthTable t = testutil::random_monotone_table(n, rng);
        MultilinearPoly direct = interpolate(t);
        MultilinearPoly viaLattice = representing_poly(prime_implicants(t), n);
        CHECK(direct == viaLattice);
    }
}

TEST_CASE("abstract atomistic-lattice recognition") {
    CHECK(is_atomistic_lattice({Bitset{}, ids({1}), ids({2}), ids({1, 2})}));
    CHECK(!is_atomistic_lattice({Bitset{}, ids({1}), ids({1, 2})}));
    CHECK(is_atomistic_lattice(
        {Bitset{}, ids({1, 2}), ids({1, 3}), ids({2, 3}), ids({1, 2, 3})}));
    CHECK(!is_atomistic_lattice({ids({1})}));                     // no bottom
    CHECK(is_atomistic_lattice({Bitset{}}));                      // one-point lattice
    CHECK(!is_atomistic_lattice({Bitset{}, ids({1}), ids({2})})); // missing join
}

TEST_CASE("union families are atomistic lattices") {
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        UnionFamily u = unions(testutil::random_antichain(n, rng), n);
        CHECK(is_atomistic_lattice(u.elements));
    }
}

TEST_CASE("abstract recognition agrees with the atom-set constructor") {
    std::mt19937 rng(29);
    for (int round = 0; round < 200; ++round) {
        int m = 2 + static_cast<int>(rng() % 3);
        const std::uint32_t top = (std::uint32_t{1} << m) - 1;
        std::set<std::uint32_t> fam = {0u, top};
        for (int j = 0; j < m; ++j) fam.insert(std::uint32_t{1} << j);
        int extra = static_cast<int>(rng() % 4);
        for (int i = 0; i < extra; ++i) fam.insert(static_cast<std::uint32_t>(rng()) & top);
        std::vector<Bitset> members;
        for (std::uint32_t x : fam) members.push_back(Bitset::from_mask(x));
        bool ctor_ok = true;
        try {
            AtomisticLattice probe(m, members);
            (void)probe;
        } catch (const NotAtomistic&) {
            ctor_ok = false;
        }
        CHECK(ctor_ok == is_atomistic_lattice(members));
    }
}

TEST_CASE("synthesis of the two-atom boolean lattice") {
    AtomisticLattice l(2, {Bitset{}, ids({1}), ids({2}), ids({1, 2})});
    SynthesisResult r = synthesize_function(l);
    CHECK(r.n == 3);
    CHECK(r.kept == std::vector<Bitset>{ids({1}), ids({2}), ids({1, 2})});
    CHECK(r.implicants == std::vector<Bitset>{ids({1, 3}), ids({2, 3})});
    CHECK(verify_isomorphism(l, unions(r.implicants, r.n)));
}

TEST_CASE("synthesis of the three-atom diamond lattice") {
    AtomisticLattice l(3, {Bitset{}, ids({1}), ids({2}), ids({3}), ids({1, 2, 3})});
    SynthesisResult r = synthesize_function(l);
    CHECK(r.n == 4);
    CHECK(r.kept ==
          std::vector<Bitset>{ids({1, 2}), ids({1, 3}), ids({2, 3}), ids({1, 2, 3})});
    CHECK(r.implicants ==
          std::vector<Bitset>{ids({1, 2, 4}), ids({1, 3, 4}), ids({2, 3, 4})});
    CHECK(verify_isomorphism(l, unions(r.implicants, r.n)));
}

TEST_CASE("single-atom synthesis") {
    AtomisticLattice l(1, {Bitset{}, ids({1})});
    SynthesisResult r = synthesize_function(l);
    CHECK(r.n == 1);
    CHECK(r.implicants == std::vector<Bitset>{ids({1})});
    CHECK(verify_isomorphism(l, unions(r.implicants, r.n)));
}

TEST_CASE("synthesis round-trips on random lattices") {
    std::mt19937 rng(31);
    for (int round = 0; round < 120; ++round) {
        int m = 1 + static_cast<int>(rng() % 6);
        AtomisticLattice l(m, testutil::random_atomistic_members(m, rng));
        SynthesisResult r = synthesize_function(l);
        CHECK(verify_isomorphism(l, unions(r.implicants, r.n)));
    }
}

TEST_CASE("isomorphism check rejects the wrong family") {
    AtomisticLattice l(2, {Bitset{}, ids({1}), ids({2}), ids({1, 2})});
    CHECK(!verify_isomorphism(l, unions({ids({1}), ids({2}), ids({3})}, 3)));
}

TEST_CASE("atom-count guard") {
    std::vector<Bitset> members = {Bitset{}};
    for (int j = 0; j < 11; ++j) members.push_back(Bitset::singleton(static_cast<std::size_t>(j)));
    Bitset top;
    for (int j = 0; j < 11; ++j) top.set(static_cast<std::size_t>(j));
    members.push_back(top);
    CHECK_THROWS_AS(AtomisticLattice(11, members), TooManyAtoms);
}
