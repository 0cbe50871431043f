#include "mobpoly/boolfn.hpp"

#include <algorithm>
#include <string>

namespace mobpoly {

TruthTable::TruthTable(int n_, std::vector<std::uint8_t> v, int max_n) : n(n_), values(std::move(v)) {
    if (n < 1 || n > max_n)
        throw TooLarge("table variable count " + std::to_string(n) + " outside [1, " +
                       std::to_string(max_n) + "]");
    if (values.size() != (std::size_t{1} << n))
        throw DimensionMismatch("table needs " + std::to_string(std::size_t{1} << n) +
                                " values, got " + std::to_string(values.size()));
    for (auto& b : values) b = b ? 1 : 0;
}

TruthTable TruthTable::build(int n, const std::function<int(std::uint32_t)>& f, int max_n) {
    if (n < 1 || n > max_n)
        throw TooLarge("table variable count " + std::to_string(n) + " outside [1, " +
                       std::to_string(max_n) + "]");
    std::vector<std::uint8_t> v(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < v.size(); ++x) v[x] = f(x) ? 1 : 0;
    return TruthTable(n, std::move(v), max_n);
}

bool is_monotone(const TruthTable& t) {
    const std::uint32_t size = static_cast<std::uint32_t>(t.values.size());
    for (std::uint32_t x = 0; x < size; ++x) {
        for (int i = 0; i < t.n; ++i) {
            std::uint32_t bit = std::uint32_t{1} << i;
            if (!(x & bit) && t.values[x] > t.values[x | bit]) return false;
        }
    }
    return true;
}

std::vector<Bitset> prime_implicants(const TruthTable& t) {
    if (!is_monotone(t)) throw NonMonotone("prime implicants require a monotone table");
    if (t.values[0]) throw ConstantOne("constant-1 function has no representing antichain");
    std::vector<Bitset> out;
    const std::uint32_t size = static_cast<std::uint32_t>(t.values.size());
    for (std::uint32_t x = 1; x < size; ++x) {
        if (!t.values[x]) continue;
        bool minimal = true;
        for (std::uint32_t m = x; m; m &= m - 1) {
            std::uint32_t low = m & (~m + 1);
            if (t.values[x ^ low]) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(Bitset::from_mask(x));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

MultilinearPoly interpolate(const TruthTable& t, int max_n) {
    if (t.n > max_n)
        throw TooLarge("interpolation limited to " + std::to_string(max_n) + " variables, got " +
                       std::to_string(t.n));
    // In-place signed zeta transform; intermediate values are bounded by 2^n.
    std::vector<std::int64_t> a(t.values.begin(), t.values.end());
    for (int i = 0; i < t.n; ++i) {
        std::uint32_t bit = std::uint32_t{1} << i;
        for (std::uint32_t x = 0; x < a.size(); ++x)
            if (x & bit) a[x] -= a[x ^ bit];
    }
    MultilinearPoly p;
    p.n = t.n;
    for (std::uint32_t x = 0; x < a.size(); ++x)
        if (a[x]) p.terms.emplace(Bitset::from_mask(x), mpz_class(static_cast<long>(a[x])));
    return p;
}

TruthTable dualize(const TruthTable& t) {
    const std::uint32_t full = static_cast<std::uint32_t>(t.values.size()) - 1;
    std::vector<std::uint8_t> v(t.values.size());
    for (std::uint32_t x = 0; x <= full; ++x) v[x] = 1 - t.values[(~x) & full];
    return TruthTable(t.n, std::move(v));
}

} // namespace mobpoly
