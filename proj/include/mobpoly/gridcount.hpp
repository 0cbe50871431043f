#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mobpoly/dag.hpp"

namespace mobpoly {

inline constexpr int kMaxBruteGrid = 3;
inline constexpr int kMaxDpGrid = 12;
inline constexpr int kMaxLowerWidth = 6;
inline constexpr int kMaxUpperWidth = 15;
inline constexpr int kMaxUpperDenseWidth = 12;
inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr std::size_t kDefaultIterationCap = 1'000'000;

// Directed grid on vertices {0..n}^2 with arcs (i,j)->(i,j+1) and
// (i,j)->(i+1,j). Arc ids are assigned row-major per vertex, right-arc
// before down-arc.
Dag grid(int n);

// Number of arc subsets in which every vertex other than the two corners
// has an incoming arc iff it has an outgoing arc; equals the size of the
// union-of-paths family.
mpz_class count_unions_bruteforce(int n, int max_n = kMaxBruteGrid);

// Same count via a vertex-by-vertex sweep carrying pending-arc bits.
mpz_class count_unions_profile_dp(int n, int max_n = kMaxDpGrid);

enum class StripKind { lower, upper };

// Transfer matrix over width-d strips (4d arcs per strip).
//
// lower: 0/1 adjacency over valid strips; stored as the strip list with
// entries generated on demand and a factored matrix-vector product
// (the dense matrix would have up to 9*10^(d-1) rows).
//
// upper: 2^d x 2^d counts of interior-valid strips per pair of boundary
// indicator strings; dense entries kept for d <= 12, computed on demand
// above that, with a matrix-free product either way.
struct StripMatrix {
    StripKind kind;
    int d = 0;
    std::size_t dim = 0;

    int arcs_per_strip() const { return 4 * d; }

    // lower kind: per-strip packed arc bits (4 per level: BL,BR,LT,RT) and
    // base-4 boundary profiles.
    std::vector<std::uint32_t> strips;
    std::vector<std::uint32_t> left_profile, right_profile;

    // upper kind: row-major dense entries when materialized.
    std::vector<std::uint64_t> dense;

    std::uint64_t entry(std::size_t row, std::size_t col) const;
    std::vector<std::uint64_t> row_sums() const;

    // out = M * in  /  out = M^T * in (long double accumulation).
    void apply(const long double* in, long double* out) const;
    void apply_transpose(const long double* in, long double* out) const;
};

StripMatrix build_lower_strip_matrix(int d, int max_d = kMaxLowerWidth);
StripMatrix build_upper_strip_matrix(int d, bool force_matrix_free = false,
                                     int max_d = kMaxUpperWidth);

struct PowerResult {
    double value = 0.0;
    std::size_t iterations = 0;
};

// Power iteration from the all-ones vector. Stops when the Rayleigh
// quotient moves less than tol (relative) and the residual
// |Mv - rv| <= 10 * tol * max(1, r) * |v| holds; NoConvergence at the cap.
PowerResult power_iteration(std::size_t dim,
                            const std::function<void(const long double*, long double*)>& apply,
                            double tol, std::size_t cap = kDefaultIterationCap);

double spectral_radius(const StripMatrix& m, double tol, std::size_t cap = kDefaultIterationCap,
                       std::size_t* iterations = nullptr);

// Largest singular value via power iteration on the Gram operator.
double spectral_norm(const StripMatrix& m, double tol, std::size_t cap = kDefaultIterationCap,
                     std::size_t* iterations = nullptr);

struct GrowthEstimate {
    StripKind kind;
    int d = 0;
    double raw = 0.0;  // spectral radius or norm
    double base = 0.0; // raw^(1/(4d))
    double tol = 0.0;
    std::size_t iterations = 0;
};

GrowthEstimate lower_bound_base(int d, double tol = kDefaultSpectralTol,
                                std::size_t cap = kDefaultIterationCap,
                                int max_d = kMaxLowerWidth);
GrowthEstimate upper_bound_base(int d, double tol = kDefaultSpectralTol,
                                bool matrix_free = false,
                                std::size_t cap = kDefaultIterationCap,
                                int max_d = kMaxUpperWidth);

struct GrowthRow {
    int n = 0;
    mpz_class count;
    double base = 0.0; // count^(1/(2n(n+1)))
};

std::vector<GrowthRow> growth_report(const std::vector<int>& ns, int max_n = kMaxDpGrid);

// log of an arbitrary-precision positive integer.
double log_mpz(const mpz_class& z);

} // namespace mobpoly
