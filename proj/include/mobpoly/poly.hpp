#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mobpoly/bitset.hpp"
#include "mobpoly/errors.hpp"

namespace mobpoly {

// Multilinear polynomial over variables x_1..x_n with integer coefficients,
// stored sparsely as monomial -> coefficient. Zero coefficients are never
// stored. Bit i of a key is variable i (0-based internally).
struct MultilinearPoly {
    int n = 0;
    std::map<Bitset, mpz_class, CanonicalLess> terms;

    void add_term(const Bitset& vars, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(vars, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    // Evaluate at a 0/1 point given as the set of variables equal to 1.
    mpz_class evaluate(const Bitset& ones) const {
        mpz_class acc = 0;
        for (const auto& [vars, c] : terms)
            if (vars.is_subset_of(ones)) acc += c;
        return acc;
    }

    mpz_class evaluate(const std::vector<int>& x) const {
        if (static_cast<int>(x.size()) != n)
            throw DimensionMismatch("point has " + std::to_string(x.size()) +
                                    " coordinates, polynomial has " + std::to_string(n));
        Bitset ones;
        for (int i = 0; i < n; ++i)
            if (x[i]) ones.set(static_cast<std::size_t>(i));
        return evaluate(ones);
    }

    int degree() const {
        int d = 0;
        for (const auto& [vars, c] : terms)
            d = std::max<int>(d, static_cast<int>(vars.count()));
        return d;
    }

    bool operator==(const MultilinearPoly& other) const {
        return n == other.n && terms == other.terms;
    }
};

} // namespace mobpoly
