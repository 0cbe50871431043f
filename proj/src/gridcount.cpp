#include "mobpoly/gridcount.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mobpoly {

Dag grid(int n) {
    if (n < 1) throw TooLarge("grid side must be at least 1");
    RawDigraph raw;
    auto name = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            if (j < n) raw.add_arc(name(i, j), name(i, j + 1));
            if (i < n) raw.add_arc(name(i, j), name(i + 1, j));
        }
    }
    return normalize(raw, /*prune=*/false);
}

namespace {

// Arc list in grid id order: per vertex (row-major), right-arc then down-arc.
struct GridArcs {
    int n;
    std::vector<std::pair<int, int>> arcs; // (tail vertex, head vertex), vertex = i*(n+1)+j

    explicit GridArcs(int n_) : n(n_) {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                int v = i * (n + 1) + j;
                if (j < n) arcs.emplace_back(v, v + 1);
                if (i < n) arcs.emplace_back(v, v + n + 1);
            }
    }
};

} // namespace

mpz_class count_unions_bruteforce(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw TooLarge("brute-force counting limited to n <= " + std::to_string(max_n));
    GridArcs ga(n);
    const int nv = (n + 1) * (n + 1);
    const int na = static_cast<int>(ga.arcs.size());
    std::vector<std::uint32_t> in_mask(nv, 0), out_mask(nv, 0);
    for (int a = 0; a < na; ++a) {
        out_mask[static_cast<std::size_t>(ga.arcs[a].first)] |= std::uint32_t{1} << a;
        in_mask[static_cast<std::size_t>(ga.arcs[a].second)] |= std::uint32_t{1} << a;
    }
    const int s = 0, t = nv - 1;
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << na;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int v = 0; v < nv; ++v) {
            if (v == s || v == t) continue;
            bool has_in = (mask & in_mask[static_cast<std::size_t>(v)]) != 0;
            bool has_out = (mask & out_mask[static_cast<std::size_t>(v)]) != 0;
            if (has_in != has_out) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return mpz_class(static_cast<unsigned long>(count));
}

mpz_class count_unions_profile_dp(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw TooLarge("profile DP limited to n <= " + std::to_string(max_n));
    // Sweep vertices row-major. State bit j (0..n): a down-arc chosen at
    // (i-1,j) waiting for vertex (i,j); bit n+1: a right-arc waiting from
    // the left neighbor.
    const int bits = n + 2;
    const std::size_t states = std::size_t{1} << bits;
    std::vector<mpz_class> cur(states), nxt(states);
    cur[0] = 1;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            for (auto& x : nxt) x = 0;
            const bool corner = (i == 0 && j == 0) || (i == n && j == n);
            for (std::size_t st = 0; st < states; ++st) {
                if (cur[st] == 0) continue;
                int in_d = (i > 0) ? static_cast<int>((st >> j) & 1) : 0;
                int in_r = (j > 0) ? static_cast<int>((st >> (n + 1)) & 1) : 0;
                for (int out_d = 0; out_d <= (i < n ? 1 : 0); ++out_d) {
                    for (int out_r = 0; out_r <= (j < n ? 1 : 0); ++out_r) {
                        if (!corner && ((in_d | in_r) != (out_d | out_r))) continue;
                        std::size_t ns = st;
                        ns &= ~(std::size_t{1} << j);
                        ns &= ~(std::size_t{1} << (n + 1));
                        ns |= static_cast<std::size_t>(out_d) << j;
                        ns |= static_cast<std::size_t>(out_r) << (n + 1);
                        nxt[ns] += cur[st];
                    }
                }
            }
            cur.swap(nxt);
        }
    }
    return cur[0];
}

namespace {

// Shared-vertex compatibility kernel between the right digit of one strip
// and the left digit of the next: digit = bottom-arc bit + 2 * top-arc bit.
inline int k4(int rdigit, int ldigit) {
    int bottom = (rdigit & 1) | (ldigit & 1);
    int top = ((rdigit >> 1) & 1) | ((ldigit >> 1) & 1);
    return bottom == top ? 1 : 0;
}

// Strip code: bits 4y+0..3 = BL,BR,LT,RT of level y.
inline bool lower_strip_valid(std::uint32_t code, int d) {
    int bl0 = code & 1, br0 = (code >> 1) & 1;
    if ((bl0 | br0) == 0) return false;
    int top_shift = 4 * (d - 1);
    int ltD = (code >> (top_shift + 2)) & 1, rtD = (code >> (top_shift + 3)) & 1;
    if ((ltD | rtD) == 0) return false;
    for (int y = 1; y < d; ++y) {
        int prev = 4 * (y - 1), curs = 4 * y;
        int top_prev = ((code >> (prev + 2)) & 1) | ((code >> (prev + 3)) & 1);
        int bot_cur = ((code >> curs) & 1) | ((code >> (curs + 1)) & 1);
        if (top_prev != bot_cur) return false;
    }
    return true;
}

inline std::uint32_t lower_left_profile(std::uint32_t code, int d) {
    std::uint32_t p = 0;
    for (int y = 0; y < d; ++y) {
        std::uint32_t bl = (code >> (4 * y)) & 1, lt = (code >> (4 * y + 2)) & 1;
        p |= (bl + 2 * lt) << (2 * y);
    }
    return p;
}

inline std::uint32_t lower_right_profile(std::uint32_t code, int d) {
    std::uint32_t p = 0;
    for (int y = 0; y < d; ++y) {
        std::uint32_t br = (code >> (4 * y + 1)) & 1, rt = (code >> (4 * y + 3)) & 1;
        p |= (br + 2 * rt) << (2 * y);
    }
    return p;
}

inline int profile_digit(std::uint32_t profile, int y) { return (profile >> (2 * y)) & 3; }

int kernel_product(std::uint32_t rprof, std::uint32_t lprof, int d) {
    for (int y = 0; y < d; ++y)
        if (!k4(profile_digit(rprof, y), profile_digit(lprof, y))) return 0;
    return 1;
}

// Digit-wise 4x4 kernel transform of a base-4-indexed vector:
// out[r] = sum over l of prod_y k4[r_y, l_y] * in[l], one digit at a time.
void kron_k4_apply(std::vector<long double>& v, int d, bool transpose) {
    const std::size_t n4 = v.size();
    for (int y = 0; y < d; ++y) {
        const std::size_t stride = std::size_t{1} << (2 * y);
        for (std::size_t base = 0; base < n4; ++base) {
            if ((base / stride) % 4 != 0) continue;
            long double in[4], out[4];
            for (int a = 0; a < 4; ++a) in[a] = v[base + stride * static_cast<std::size_t>(a)];
            for (int r = 0; r < 4; ++r) {
                long double acc = 0;
                for (int l = 0; l < 4; ++l) {
                    int kk = transpose ? k4(l, r) : k4(r, l);
                    if (kk) acc += in[l];
                }
                out[r] = acc;
            }
            for (int a = 0; a < 4; ++a) v[base + stride * static_cast<std::size_t>(a)] = out[a];
        }
    }
}

// Per-level transfer tables of the boundary-string chain. State: the
// previous level's (left-top, right-top) arc pair; x selects the left
// boundary constraint, y the right one.
struct UpperTables {
    // start[x][y][s2], step[s][x][y][s2]
    std::uint64_t start[2][2][4] = {};
    std::uint64_t step[4][2][2][4] = {};
};

const UpperTables& upper_tables() {
    static const UpperTables tables = [] {
        UpperTables t;
        for (int lb = 0; lb < 2; ++lb)
            for (int lt = 0; lt < 2; ++lt)
                for (int br = 0; br < 2; ++br)
                    for (int tr = 0; tr < 2; ++tr) {
                        int s2 = lt + 2 * tr;
                        for (int x = 0; x < 2; ++x) {
                            if (x != (lb | lt)) continue;
                            for (int y = 0; y < 2; ++y) {
                                if (y != (br | tr)) continue;
                                t.start[x][y][s2] += 1;
                                for (int s = 0; s < 4; ++s) {
                                    int lt_prev = s & 1, tr_prev = (s >> 1) & 1;
                                    if ((lt_prev | lb) == (tr_prev | br))
                                        t.step[s][x][y][s2] += 1;
                                }
                            }
                        }
                    }
        return t;
    }();
    return tables;
}

std::uint64_t upper_entry_chain(std::uint64_t xbits, std::uint64_t ybits, int d) {
    const UpperTables& t = upper_tables();
    std::uint64_t state[4] = {};
    {
        int x0 = static_cast<int>(xbits & 1), y0 = static_cast<int>(ybits & 1);
        for (int s2 = 0; s2 < 4; ++s2) state[s2] = t.start[x0][y0][s2];
    }
    for (int k = 1; k < d; ++k) {
        int xk = static_cast<int>((xbits >> k) & 1), yk = static_cast<int>((ybits >> k) & 1);
        std::uint64_t nxt[4] = {};
        for (int s = 0; s < 4; ++s) {
            if (!state[s]) continue;
            for (int s2 = 0; s2 < 4; ++s2) nxt[s2] += state[s] * t.step[s][xk][yk][s2];
        }
        for (int s2 = 0; s2 < 4; ++s2) state[s2] = nxt[s2];
    }
    return state[0] + state[1] + state[2] + state[3];
}

// Hybrid contraction: consume one column-index bit and produce one
// row-index bit per level. With transpose set, roles are swapped.
void upper_apply_impl(const long double* in, long double* out, int d, bool transpose) {
    const UpperTables& t = upper_tables();
    const std::size_t N = std::size_t{1} << d;
    std::vector<long double> B(4 * N, 0.0L), B2;
    auto coeff_start = [&](int produced, int consumed) {
        return transpose ? t.start[consumed][produced] : t.start[produced][consumed];
    };
    auto coeff_step = [&](int s, int produced, int consumed) {
        return transpose ? t.step[s][consumed][produced] : t.step[s][produced][consumed];
    };
    for (std::size_t half = 0; half < (N >> 1); ++half) {
        for (int produced = 0; produced < 2; ++produced) {
            std::size_t dst = (half << 1) | static_cast<std::size_t>(produced);
            for (int consumed = 0; consumed < 2; ++consumed) {
                std::size_t src = (half << 1) | static_cast<std::size_t>(consumed);
                const std::uint64_t* c = coeff_start(produced, consumed);
                long double vin = in[src];
                if (vin == 0.0L) continue;
                for (int s2 = 0; s2 < 4; ++s2)
                    if (c[s2]) B[static_cast<std::size_t>(s2) * N + dst] += static_cast<long double>(c[s2]) * vin;
            }
        }
    }
    for (int k = 1; k < d; ++k) {
        B2.assign(4 * N, 0.0L);
        const std::size_t low = std::size_t{1} << k;
        const std::size_t hiN = N >> (k + 1);
        for (std::size_t hi = 0; hi < hiN; ++hi) {
            for (std::size_t lo = 0; lo < low; ++lo) {
                std::size_t base = (hi << (k + 1)) | lo;
                for (int produced = 0; produced < 2; ++produced) {
                    std::size_t dst = base | (static_cast<std::size_t>(produced) << k);
                    for (int consumed = 0; consumed < 2; ++consumed) {
                        std::size_t src = base | (static_cast<std::size_t>(consumed) << k);
                        for (int s = 0; s < 4; ++s) {
                            long double vin = B[static_cast<std::size_t>(s) * N + src];
                            if (vin == 0.0L) continue;
                            const std::uint64_t* c = coeff_step(s, produced, consumed);
                            for (int s2 = 0; s2 < 4; ++s2)
                                if (c[s2])
                                    B2[static_cast<std::size_t>(s2) * N + dst] +=
                                        static_cast<long double>(c[s2]) * vin;
                        }
                    }
                }
            }
        }
        B.swap(B2);
    }
    for (std::size_t i = 0; i < N; ++i)
        out[i] = B[i] + B[N + i] + B[2 * N + i] + B[3 * N + i];
}

} // namespace

std::uint64_t StripMatrix::entry(std::size_t row, std::size_t col) const {
    if (kind == StripKind::lower)
        return static_cast<std::uint64_t>(
            kernel_product(right_profile[row], left_profile[col], d));
    if (!dense.empty()) return dense[row * dim + col];
    return upper_entry_chain(static_cast<std::uint64_t>(row), static_cast<std::uint64_t>(col), d);
}

std::vector<std::uint64_t> StripMatrix::row_sums() const {
    std::vector<std::uint64_t> out(dim, 0);
    if (kind == StripKind::lower) {
        // (K * count-by-left-profile) gathered at each strip's right profile.
        const std::size_t n4 = std::size_t{1} << (2 * d);
        std::vector<long double> g(n4, 0.0L);
        for (std::size_t i = 0; i < dim; ++i) g[left_profile[i]] += 1.0L;
        kron_k4_apply(g, d, false);
        for (std::size_t i = 0; i < dim; ++i)
            out[i] = static_cast<std::uint64_t>(g[right_profile[i]] + 0.5L);
        return out;
    }
    const UpperTables& t = upper_tables();
    for (std::size_t x = 0; x < dim; ++x) {
        std::uint64_t state[4] = {};
        int x0 = static_cast<int>(x & 1);
        for (int y0 = 0; y0 < 2; ++y0)
            for (int s2 = 0; s2 < 4; ++s2) state[s2] += t.start[x0][y0][s2];
        for (int k = 1; k < d; ++k) {
            int xk = static_cast<int>((x >> k) & 1);
            std::uint64_t nxt[4] = {};
            for (int s = 0; s < 4; ++s)
                for (int yk = 0; yk < 2; ++yk)
                    for (int s2 = 0; s2 < 4; ++s2) nxt[s2] += state[s] * t.step[s][xk][yk][s2];
            for (int s2 = 0; s2 < 4; ++s2) state[s2] = nxt[s2];
        }
        out[x] = state[0] + state[1] + state[2] + state[3];
    }
    return out;
}

void StripMatrix::apply(const long double* in, long double* out) const {
    if (kind == StripKind::upper) {
        upper_apply_impl(in, out, d, false);
        return;
    }
    const std::size_t n4 = std::size_t{1} << (2 * d);
    std::vector<long double> g(n4, 0.0L);
    for (std::size_t i = 0; i < dim; ++i) g[left_profile[i]] += in[i];
    kron_k4_apply(g, d, false);
    for (std::size_t i = 0; i < dim; ++i) out[i] = g[right_profile[i]];
}

void StripMatrix::apply_transpose(const long double* in, long double* out) const {
    if (kind == StripKind::upper) {
        upper_apply_impl(in, out, d, true);
        return;
    }
    const std::size_t n4 = std::size_t{1} << (2 * d);
    std::vector<long double> g(n4, 0.0L);
    for (std::size_t i = 0; i < dim; ++i) g[right_profile[i]] += in[i];
    kron_k4_apply(g, d, true);
    for (std::size_t i = 0; i < dim; ++i) out[i] = g[left_profile[i]];
}

StripMatrix build_lower_strip_matrix(int d, int max_d) {
    if (d < 1 || d > max_d || 4 * d > 30)
        throw WidthOutOfRange("lower strip width must be in [1, " + std::to_string(max_d) +
                              "]");
    StripMatrix m;
    m.kind = StripKind::lower;
    m.d = d;
    const std::uint32_t codes = std::uint32_t{1} << (4 * d);
    for (std::uint32_t code = 0; code < codes; ++code) {
        if (lower_strip_valid(code, d)) {
            m.strips.push_back(code);
            m.left_profile.push_back(lower_left_profile(code, d));
            m.right_profile.push_back(lower_right_profile(code, d));
        }
    }
    m.dim = m.strips.size();

    // Primitivity: the all-arcs strip is valid, sits on the diagonal, and is
    // adjacent to every strip in both directions, so the square of the
    // matrix is entrywise positive.
    const std::uint32_t all_arcs = codes - 1;
    if (!lower_strip_valid(all_arcs, d))
        throw NotPrimitive("all-arcs strip is not valid");
    std::uint32_t all_l = lower_left_profile(all_arcs, d);
    std::uint32_t all_r = lower_right_profile(all_arcs, d);
    if (!kernel_product(all_r, all_l, d))
        throw NotPrimitive("all-arcs strip lacks its diagonal entry");
    for (std::size_t i = 0; i < m.dim; ++i) {
        if (!kernel_product(m.right_profile[i], all_l, d) ||
            !kernel_product(all_r, m.left_profile[i], d))
            throw NotPrimitive("a strip is incompatible with the all-arcs strip");
    }
    return m;
}

StripMatrix build_upper_strip_matrix(int d, bool force_matrix_free, int max_d) {
    if (d < 1 || d > max_d || d > 20)
        throw WidthOutOfRange("upper strip width must be in [1, " + std::to_string(max_d) +
                              "]");
    StripMatrix m;
    m.kind = StripKind::upper;
    m.d = d;
    m.dim = std::size_t{1} << d;
    if (d <= kMaxUpperDenseWidth && !force_matrix_free) {
        const UpperTables& t = upper_tables();
        m.dense.resize(m.dim * m.dim);
        // Per row, a DP over column-bit prefixes (4 chain states each).
        std::vector<std::uint64_t> B(4 * m.dim), B2(4 * m.dim);
        for (std::size_t x = 0; x < m.dim; ++x) {
            std::fill(B.begin(), B.end(), 0);
            int x0 = static_cast<int>(x & 1);
            for (int y0 = 0; y0 < 2; ++y0)
                for (int s2 = 0; s2 < 4; ++s2)
                    B[static_cast<std::size_t>(s2) * m.dim + static_cast<std::size_t>(y0)] =
                        t.start[x0][y0][s2];
            std::size_t width = 2;
            for (int k = 1; k < d; ++k) {
                std::fill(B2.begin(), B2.end(), 0);
                int xk = static_cast<int>((x >> k) & 1);
                for (std::size_t pre = 0; pre < width; ++pre)
                    for (int s = 0; s < 4; ++s) {
                        std::uint64_t v = B[static_cast<std::size_t>(s) * m.dim + pre];
                        if (!v) continue;
                        for (int yk = 0; yk < 2; ++yk) {
                            std::size_t pre2 = pre | (static_cast<std::size_t>(yk) << k);
                            for (int s2 = 0; s2 < 4; ++s2)
                                B2[static_cast<std::size_t>(s2) * m.dim + pre2] +=
                                    v * t.step[s][xk][yk][s2];
                        }
                    }
                B.swap(B2);
                width <<= 1;
            }
            for (std::size_t y = 0; y < m.dim; ++y)
                m.dense[x * m.dim + y] =
                    B[y] + B[m.dim + y] + B[2 * m.dim + y] + B[3 * m.dim + y];
        }
    }
    return m;
}

PowerResult power_iteration(std::size_t dim,
                            const std::function<void(const long double*, long double*)>& apply,
                            double tol, std::size_t cap) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    std::vector<long double> v(dim), w(dim);
    const long double init = 1.0L / std::sqrt(static_cast<long double>(dim));
    std::fill(v.begin(), v.end(), init);
    long double rayleigh_prev = 0.0L;
    bool have_prev = false;
    for (std::size_t it = 1; it <= cap; ++it) {
        apply(v.data(), w.data());
        long double rayleigh = 0.0L;
        for (std::size_t i = 0; i < dim; ++i) rayleigh += v[i] * w[i];
        long double resid2 = 0.0L;
        for (std::size_t i = 0; i < dim; ++i) {
            long double r = w[i] - rayleigh * v[i];
            resid2 += r * r;
        }
        const long double scale = std::max<long double>(1.0L, std::abs(rayleigh));
        if (have_prev && std::abs(rayleigh - rayleigh_prev) < tol * scale &&
            std::sqrt(resid2) <= 10.0L * tol * scale)
            return PowerResult{static_cast<double>(rayleigh), it};
        rayleigh_prev = rayleigh;
        have_prev = true;
        long double norm = 0.0L;
        for (std::size_t i = 0; i < dim; ++i) norm += w[i] * w[i];
        norm = std::sqrt(norm);
        if (norm == 0.0L) return PowerResult{0.0, it}; // hit the kernel: radius 0
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / norm;
    }
    throw NoConvergence("power iteration did not settle within " + std::to_string(cap) +
                        " steps");
}

double spectral_radius(const StripMatrix& m, double tol, std::size_t cap,
                       std::size_t* iterations) {
    PowerResult r = power_iteration(
        m.dim, [&](const long double* in, long double* out) { m.apply(in, out); }, tol, cap);
    if (iterations) *iterations = r.iterations;
    return r.value;
}

double spectral_norm(const StripMatrix& m, double tol, std::size_t cap,
                     std::size_t* iterations) {
    std::vector<long double> mid(m.dim);
    PowerResult r = power_iteration(
        m.dim,
        [&](const long double* in, long double* out) {
            m.apply(in, mid.data());
            m.apply_transpose(mid.data(), out);
        },
        tol, cap);
    if (iterations) *iterations = r.iterations;
    return std::sqrt(r.value);
}

GrowthEstimate lower_bound_base(int d, double tol, std::size_t cap, int max_d) {
    StripMatrix m = build_lower_strip_matrix(d, max_d);
    GrowthEstimate e;
    e.kind = StripKind::lower;
    e.d = d;
    e.tol = tol;
    e.raw = spectral_radius(m, tol, cap, &e.iterations);
    e.base = std::exp(std::log(e.raw) / (4.0 * d));
    return e;
}

GrowthEstimate upper_bound_base(int d, double tol, bool matrix_free, std::size_t cap,
                                int max_d) {
    StripMatrix m = build_upper_strip_matrix(d, matrix_free, max_d);
    GrowthEstimate e;
    e.kind = StripKind::upper;
    e.d = d;
    e.tol = tol;
    e.raw = spectral_norm(m, tol, cap, &e.iterations);
    e.base = std::exp(std::log(e.raw) / (4.0 * d));
    return e;
}

double log_mpz(const mpz_class& z) {
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::vector<GrowthRow> growth_report(const std::vector<int>& ns, int max_n) {
    std::vector<GrowthRow> rows;
    for (int n : ns) {
        GrowthRow r;
        r.n = n;
        r.count = count_unions_profile_dp(n, max_n);
        r.base = std::exp(log_mpz(r.count) / (2.0 * n * (n + 1)));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace mobpoly
