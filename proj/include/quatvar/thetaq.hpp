#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quatvar/classset.hpp"
#include "quatvar/report.hpp"

namespace qv {

// Exact q-expansion coefficients, dense over [0, max_exp].
template <class V>
struct CoeffSeries {
    long max_exp = 0;
    std::vector<V> coeffs;  // size max_exp + 1

    explicit CoeffSeries(long maxe = 0) : max_exp(maxe), coeffs(std::size_t(maxe) + 1) {}
    V& operator[](long e) { return coeffs[std::size_t(e)]; }
    const V& operator[](long e) const { return coeffs[std::size_t(e)]; }
};

// sum and Cauchy product, truncated at max_exp explicitly
template <class V>
CoeffSeries<V> series_add(const CoeffSeries<V>& a, const CoeffSeries<V>& b, long max_exp) {
    CoeffSeries<V> out(max_exp);
    for (long e = 0; e <= max_exp; ++e) {
        if (e <= a.max_exp) out[e] = out[e] + a[e];
        if (e <= b.max_exp) out[e] = out[e] + b[e];
    }
    return out;
}

template <class V>
CoeffSeries<V> cauchy_product(const CoeffSeries<V>& a, const CoeffSeries<V>& b, long max_exp) {
    CoeffSeries<V> out(max_exp);
    for (long i = 0; i <= std::min(a.max_exp, max_exp); ++i)
        for (long j = 0; i + j <= max_exp && j <= b.max_exp; ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

// exponent dilation q^e -> q^{s e}
template <class V>
CoeffSeries<V> series_dilate(const CoeffSeries<V>& a, long s, long max_exp) {
    CoeffSeries<V> out(max_exp);
    for (long e = 0; e <= a.max_exp && s * e <= max_exp; ++e) out[s * e] = a[e];
    return out;
}

// theta(z) = y^{1/4} sum_{m odd} q^{m^2}: coefficient 2 at odd squares.
CoeffSeries<long> jacobi_coeffs(long max_exp);

// Per-class tables mu[E][D] = sum_{beta in S_E^0, nrd = D} sum_i chi_i(beta).
struct MuMeasure {
    long dmax = 0;
    std::array<std::vector<std::int64_t>, 3> per_class;

    // mu_D(psi) = sum_E psi(E) mu[E][D] / w_E for an unnormalized psi
    AlgNum combine(const ClassSet& cs, const std::array<AlgNum, 3>& psi, long D) const;
};

MuMeasure mu_measure(const ClassSet& cs, long dmax);

// Exact seesaw coefficient identity: tree/orbital side vs theta-convolution
// side, single scalar s_N across all odd n <= nmax and both k.
Report seesaw_check(const ClassSet& cs, const EigenFns& eig, unsigned N, long nmax);

// Weight-3/2 T(9) eigen-recurrence on D -> mu_D(psi_k), fitted then verified.
Report shimura_t9_check(const ClassSet& cs, const EigenFns& eig, long dmax);

// Partial sums S_kl(x) = (1/x) sum_{0<D<x} mu_D(psi_k) mu_D(psi_l) / sqrt(D)
// with float-normalized psi; trajectory at logarithmic checkpoints.
struct ArithVariance {
    std::vector<long> checkpoints;
    // entry [i][0]=S11, [1]=S12, [2]=S22 at checkpoint i
    std::vector<std::array<double, 3>> sums;
    // resolved pairing: 0 if branch k=0 pairs with L = 0.552, 1 otherwise
    int pairing = -1;
    std::array<double, 2> targets{};  // diagonal limits under that pairing
};

ArithVariance arith_variance(const ClassSet& cs, const EigenFns& eig, long xmax);

Report arith_variance_report(const ClassSet& cs, const EigenFns& eig, long xmax);

}  // namespace qv
