#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "quatvar/algnum.hpp"
#include "quatvar/classset.hpp"
#include "quatvar/report.hpp"

namespace qv {

// Element of Z[zeta_{2^N}], coefficients modulo x^{2^{N-1}} + 1.
struct CycInt {
    std::vector<Int> c;  // length 2^{N-1}

    explicit CycInt(unsigned N = 2) : c(std::size_t(1) << (N - 1), Int(0)) {}
    static CycInt scalar(unsigned N, const Int& v) {
        CycInt z(N);
        z.c[0] = v;
        return z;
    }
    // zeta^e, e arbitrary integer
    static CycInt root_power(unsigned N, long e);

    unsigned order_log2() const;
    bool is_zero() const;
    bool is_scalar() const { return is_scalar_value().first; }
    std::pair<bool, Int> is_scalar_value() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt conj() const;  // zeta -> zeta^{-1}
    bool operator==(const CycInt& o) const { return c == o.c; }
};

// Function on M_2(Z/2^N) with CycInt values, indexed by packed entries
// (m00 + m01*q + m10*q^2 + m11*q^3, q = 2^N).
struct FiniteMatFn {
    unsigned N;
    std::vector<CycInt> values;  // size 2^{4N}

    explicit FiniteMatFn(unsigned N_) : N(N_), values(std::size_t(1) << (4 * N_), CycInt(N_)) {}
    std::size_t domain_size() const { return values.size(); }

    static std::size_t pack(unsigned N, std::uint64_t m00, std::uint64_t m01, std::uint64_t m10,
                            std::uint64_t m11) {
        std::uint64_t q = 1ull << N, mask = q - 1;
        return std::size_t((m00 & mask) + ((m01 & mask) << N) + ((m10 & mask) << (2 * N)) +
                           ((m11 & mask) << (3 * N)));
    }
    static std::array<std::uint64_t, 4> unpack(unsigned N, std::size_t idx) {
        std::uint64_t mask = (1ull << N) - 1;
        return {idx & mask, (idx >> N) & mask, (idx >> (2 * N)) & mask, (idx >> (3 * N)) & mask};
    }
};

// Exact Fourier transform F f(x) = sum_y f(y) zeta^{(x,y)} with
// (x,y) = det(x+y) - det(x) - det(y).
FiniteMatFn ft_m2(const FiniteMatFn& f);

// 4 * Phi^0 (integer values 4, -2, -2, 1 on the eta-sets).
FiniteMatFn phi0_times4(unsigned N);

// Conjugation sum Phi(x) = sum_{g in GL_2(Z/2^N)} Phi0(g^-1 x g), computed
// orbit by orbit; input and output are scaled by 4.
FiniteMatFn conjugation_sum(const FiniteMatFn& f4);

// Conjugation-sum proportionality Phi = c_N * Phi' with one constant on
// the common support; also the sigma-combination identity for F Phi^0 and
// the cross-check against the tree route.
Report verify_fourier_proportionality(const ClassSet& cs, unsigned N);

// ---- 2-adic Schwartz functions on B_2 = M_2(Q_2) ----

// Supported on 2^{-a} M_2(Z_2), constant on cosets of 2^b M_2(Z_2);
// sparse table over M_2(Z/2^{a+b}) of exact rational values. Cell with
// packed index X represents 2^{-a} X + 2^b M_2(Z_2).
struct SchwartzB2 {
    unsigned scale_in = 0, scale_out = 0;
    std::map<std::uint64_t, Rat> table;

    Rat mass() const;         // integral, vol(M_2(Z_2)) = 1
    Rat norm_sq() const;      // <f,f>
};

SchwartzB2 indicator_m2z2();
// kappa_0-normalized phi: phi(m + beta) = 1_{Z2^x}(m) * 2^{-3} sum chi_i(4 beta)
SchwartzB2 phi_hat();

// the same function retabulated at scales (a+1, b+1)
SchwartzB2 refine(const SchwartzB2& f);

// <Ad(a(2^n)) f1, f2> exactly (n may be negative).
Rat schwartz_ip(int n, const SchwartzB2& f1, const SchwartzB2& f2);

// Normalized spherical matrix coefficient Xi(a(2^n)) for the unramified
// PGL_2(Q_2) representation with integral T_2-eigenvalue a2 (Macdonald).
double macdonald_xi(double a2, unsigned n);

// vol(K a(2^n) K) with vol(K) = 1: 1, 3, 6, 12, ...
double cartan_cell_volume(unsigned n);

// Truncated Cartan sums; increments below 1e-12 stop the sum.
double local_integral_unramified(double a2);
double local_integral_correlations(double a2);  // kappa_0-normalized

// closed forms they are tested against
double l2_value_half(double a2);  // L_2(Psi, 1/2) with lambda(2) = a2/sqrt2
double zeta2_of_2();

Report verify_local_integrals(const AlgNum& a2_1, const AlgNum& a2_2);

}  // namespace qv
