#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mobpoly/poly.hpp"

namespace mobpoly {

inline constexpr int kMaxTableVars = 24;
inline constexpr int kMaxInterpolateVars = 20;

// Explicit value table of f:{0,1}^n -> {0,1}. Bit i of the row index is the
// value of variable i.
struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> values; // size 2^n, entries 0/1

    TruthTable() = default;
    TruthTable(int n_, std::vector<std::uint8_t> v, int max_n = kMaxTableVars);

    static TruthTable build(int n, const std::function<int(std::uint32_t)>& f,
                            int max_n = kMaxTableVars);

    std::uint8_t operator()(std::uint32_t point) const { return values[point]; }
    std::size_t size() const { return values.size(); }
};

bool is_monotone(const TruthTable& t);

// Minimal true points of a monotone function, as an antichain in canonical
// order. Rejects non-monotone input and the constant-1 function.
std::vector<Bitset> prime_implicants(const TruthTable& t);

// The unique multilinear polynomial agreeing with t on all 0/1 points.
MultilinearPoly interpolate(const TruthTable& t, int max_n = kMaxInterpolateVars);

// Pointwise f*(x) = 1 - f(complement of x). An involution.
TruthTable dualize(const TruthTable& t);

} // namespace mobpoly
