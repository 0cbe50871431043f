#pragma once

#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mobpoly/bitset.hpp"
#include "mobpoly/boolfn.hpp"
#include "mobpoly/dag.hpp"
#include "mobpoly/gridcount.hpp"
#include "mobpoly/lattice.hpp"
#include "mobpoly/poly.hpp"

namespace testutil {

inline mobpoly::Bitset ids(std::initializer_list<int> one_based) {
    mobpoly::Bitset b;
    for (int i : one_based) b.set(static_cast<std::size_t>(i - 1));
    return b;
}

struct TermSpec {
    std::initializer_list<int> vars;
    long coef;
};

inline mobpoly::MultilinearPoly make_poly(int n, std::initializer_list<TermSpec> terms) {
    mobpoly::MultilinearPoly p;
    p.n = n;
    for (const TermSpec& t : terms) p.add_term(ids(t.vars), t.coef);
    return p;
}

// arcs 1: s->a, 2: a->t, 3: s->b, 4: b->t (two disjoint 2-arc paths)
inline mobpoly::Dag diamond_graph() {
    mobpoly::RawDigraph g;
    g.add_arc("s", "a");
    g.add_arc("a", "t");
    g.add_arc("s", "b");
    g.add_arc("b", "t");
    return mobpoly::normalize(g);
}

// Three s-t paths {1,2,3}, {3,4,5}, {4,6,7} whose eight subset-unions are
// all distinct.
inline mobpoly::Dag three_path_graph() {
    mobpoly::RawDigraph g;
    g.add_arc("n1", "n2");
    g.add_arc("n2", "n4");
    g.add_arc("n4", "n6");
    g.add_arc("n1", "n3");
    g.add_arc("n3", "n4");
    g.add_arc("n3", "n5");
    g.add_arc("n5", "n6");
    return mobpoly::normalize(g);
}

// Random normalized DAG with at most max_arcs arcs. Arcs only go forward in
// a random vertex order, so the input is always acyclic; normalization can
// still merge terminals and prune.
inline mobpoly::Dag random_dag(std::mt19937& rng, int max_arcs = 9) {
    for (;;) {
        int nv = 2 + static_cast<int>(rng() % 5);
        int na = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_arcs));
        mobpoly::RawDigraph g;
        for (int i = 0; i < na; ++i) {
            int u = static_cast<int>(rng() % static_cast<unsigned>(nv));
            int v = static_cast<int>(rng() % static_cast<unsigned>(nv));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            g.add_arc("v" + std::to_string(u), "v" + std::to_string(v));
        }
        if (g.arcs.empty()) continue;
        try {
            return mobpoly::normalize(g);
        } catch (const mobpoly::Error&) {
        }
    }
}

// Monotone table built from upward closures of random points; never
// constant 0. With allow_constant_one unset, resamples until f(0) = 0.
inline mobpoly::TruthTable random_monotone_table(int n, std::mt19937& rng,
                                                 bool allow_constant_one = false) {
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (;;) {
        std::vector<std::uint8_t> v(std::size_t{1} << n, 0);
        int seeds = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < seeds; ++i) {
            std::uint32_t p = static_cast<std::uint32_t>(rng()) & full;
            for (std::uint32_t x = 0; x <= full; ++x)
                if ((x & p) == p) v[x] = 1;
        }
        if (!allow_constant_one && v[0]) continue;
        return mobpoly::TruthTable(n, std::move(v));
    }
}

// Nonempty antichain over [n]: random sets with dominated ones dropped.
inline std::vector<mobpoly::Bitset> random_antichain(int n, std::mt19937& rng) {
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (;;) {
        std::set<std::uint32_t> raw;
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            std::uint32_t s = static_cast<std::uint32_t>(rng()) & full;
            if (s) raw.insert(s);
        }
        std::vector<mobpoly::Bitset> out;
        for (std::uint32_t s : raw) {
            bool minimal = true;
            for (std::uint32_t t : raw)
                if (t != s && (s & t) == t) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(mobpoly::Bitset::from_mask(s));
        }
        if (!out.empty()) return out;
    }
}

// Atom-set family of a random atomistic lattice: mandatory members plus
// random ones, closed under intersection (the least member above any atom
// set is then the intersection of all members above it, so joins are
// well defined).
inline std::vector<mobpoly::Bitset> random_atomistic_members(int m, std::mt19937& rng) {
    const std::uint32_t top = (std::uint32_t{1} << m) - 1;
    std::set<std::uint32_t> fam = {0u, top};
    for (int j = 0; j < m; ++j) fam.insert(std::uint32_t{1} << j);
    int extra = static_cast<int>(rng() % static_cast<unsigned>(m + 3));
    for (int i = 0; i < extra; ++i) fam.insert(static_cast<std::uint32_t>(rng()) & top);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::uint32_t> cur(fam.begin(), fam.end());
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b)
                if (fam.insert(cur[a] & cur[b]).second) changed = true;
    }
    std::vector<mobpoly::Bitset> members;
    for (std::uint32_t x : fam) members.push_back(mobpoly::Bitset::from_mask(x));
    return members;
}

// Reference predicate: h is exactly the union of the s-t paths inside it.
inline bool union_of_paths_reference(const mobpoly::Bitset& h,
                                     const std::vector<mobpoly::Bitset>& all_paths) {
    mobpoly::Bitset u;
    for (const mobpoly::Bitset& p : all_paths)
        if (p.is_subset_of(h)) u = u | p;
    return u == h;
}

} // namespace testutil
