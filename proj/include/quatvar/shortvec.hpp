#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatvar/numutil.hpp"

namespace qv {

// Positive definite integral Gram matrix of the bilinear form 2*Q, dim <= 4:
// Q(v) = (v^T g v) / 2, g symmetric with even diagonal.
struct GramSmall {
    int n = 0;
    std::array<std::array<std::int64_t, 4>, 4> g{};
};

namespace detail {

// Cholesky-style data for enumeration in doubles; exactness comes from the
// final integer test, the float work only proposes candidate ranges.
struct EnumPlan {
    int n;
    double d[4];      // d_i
    double u[4][4];   // u_{ij}, j > i
    bool ok;
};

inline EnumPlan make_plan(const GramSmall& G) {
    EnumPlan p{};
    p.n = G.n;
    double a[4][4];
    for (int i = 0; i < G.n; ++i)
        for (int j = 0; j < G.n; ++j) a[i][j] = static_cast<double>(G.g[i][j]) / 2.0;
    // LDL^T with elimination order x_0 first (so x_{n-1} is outermost).
    for (int i = 0; i < G.n; ++i) {
        double di = a[i][i];
        for (int k = 0; k < i; ++k) di -= p.d[k] * p.u[k][i] * p.u[k][i];
        if (!(di > 0)) { p.ok = false; return p; }
        p.d[i] = di;
        for (int j = i + 1; j < G.n; ++j) {
            double v = a[i][j];
            for (int k = 0; k < i; ++k) v -= p.d[k] * p.u[k][i] * p.u[k][j];
            p.u[i][j] = v / di;
        }
    }
    p.ok = true;
    return p;
}

}  // namespace detail

// Widest possible value of the outermost coordinate x_{n-1}; used to carve
// deterministic parallel chunks.
inline std::int64_t outermost_bound(const GramSmall& G, std::int64_t bound) {
    if (bound < 0) return -1;
    auto p = detail::make_plan(G);
    if (!p.ok) throw std::domain_error("Gram not positive definite");
    return static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound) / p.d[G.n - 1])) + 2;
}

// Enumerates every v with Q(v) <= bound and x_{n-1} in [lo, hi].
// sink(coords pointer, value Q(v)). Deterministic order; exact membership
// by int64 arithmetic (caller must keep magnitudes within int64, which
// holds for every use in this project: |g| < 2^8, bound < 2^22 ... 2^21).
template <class F>
void enumerate_short_range(const GramSmall& G, std::int64_t bound, std::int64_t lo, std::int64_t hi,
                           F&& sink) {
    if (bound < 0) return;
    const int n = G.n;
    auto p = detail::make_plan(G);
    if (!p.ok) throw std::domain_error("Gram not positive definite");

    std::int64_t x[4] = {0, 0, 0, 0};
    std::int64_t lo_i[4], hi_i[4];
    // range of level i given outer coords: |x_i + c_i| <= sqrt(r_i / d_i)
    auto level_range = [&](int i) {
        double c = 0, used = 0;
        for (int j = i + 1; j < n; ++j) c += p.u[i][j] * static_cast<double>(x[j]);
        for (int k = i + 1; k < n; ++k) {
            double ck = 0;
            for (int j = k + 1; j < n; ++j) ck += p.u[k][j] * static_cast<double>(x[j]);
            double t = static_cast<double>(x[k]) + ck;
            used += p.d[k] * t * t;
        }
        double rem = static_cast<double>(bound) - used;
        if (rem < 0) rem = 0;
        double rad = std::sqrt(rem / p.d[i]) + 2.0;  // slack covers float error
        lo_i[i] = static_cast<std::int64_t>(std::floor(-c - rad));
        hi_i[i] = static_cast<std::int64_t>(std::ceil(-c + rad));
    };

    const std::int64_t two_bound = 2 * bound;
    // exact value of v^T g v for the current full vector
    auto exact_2q = [&]() {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            s += G.g[i][i] * x[i] * x[i];
            for (int j = i + 1; j < n; ++j) s += 2 * G.g[i][j] * x[i] * x[j];
        }
        return s;
    };

    // Nested loops, innermost (level 0) runs the incremental exact filter.
    int level = n - 1;
    level_range(level);
    if (lo > lo_i[level]) lo_i[level] = lo;
    if (hi < hi_i[level]) hi_i[level] = hi;
    x[level] = lo_i[level] - 1;
    for (;;) {
        ++x[level];
        if (x[level] > hi_i[level]) {
            if (level == n - 1) return;
            ++level;
            continue;
        }
        if (level > 0) {
            --level;
            level_range(level);
            x[level] = lo_i[level] - 1;
            continue;
        }
        // level == 0: scan the innermost interval with incremental updates
        std::int64_t z = x[0];
        std::int64_t s = exact_2q();
        std::int64_t lin = 0;
        for (int j = 1; j < n; ++j) lin += G.g[0][j] * x[j];
        // s(z+1) - s(z) = g00 (2z+1) + 2 lin
        for (;;) {
            if (s <= two_bound) sink(x, s / 2);
            if (z >= hi_i[0]) break;
            s += G.g[0][0] * (2 * z + 1) + 2 * lin;
            ++z;
            x[0] = z;
        }
        level = 1;
    }
}

template <class F>
void enumerate_short(const GramSmall& G, std::int64_t bound, F&& sink) {
    if (bound < 0) return;
    std::int64_t b = outermost_bound(G, bound);
    enumerate_short_range(G, bound, -b, b, std::forward<F>(sink));
}

// Materialized, lexicographically sorted list of (coords, Q-value).
std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> short_vectors(const GramSmall& G,
                                                                              std::int64_t bound);

// Exact Gram from a rational matrix entering as 2Q; throws if the scaled
// entries do not fit the small engine.
GramSmall gram_from_rational(const std::vector<std::vector<Rat>>& g2q, Int* scale_out = nullptr);

}  // namespace qv
