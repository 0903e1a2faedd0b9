#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qv {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a, b) does not canonicalize; every two-argument rational in
// this codebase is built through frac().
inline Rat frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// 2-adic valuation; val2(0) is "infinity", reported as a large sentinel.
inline long val2(const Int& x) {
    if (x == 0) return 1L << 30;
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

inline long val2(const Rat& x) {
    if (x == 0) return 1L << 30;
    return val2(Int(x.get_num())) - val2(Int(x.get_den()));
}

// floor(sqrt(x)) for x >= 0
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Rationals serialize as "p/q" (or "p" when q = 1).
inline std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace qv
