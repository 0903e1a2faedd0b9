#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "quatvar/numutil.hpp"

namespace qv {

// Element a + b sqrt(5) of Q(sqrt(5)), exact.
struct AlgNum {
    Rat a{0}, b{0};

    AlgNum() = default;
    AlgNum(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}
    static AlgNum sqrt5() { return {Rat(0), Rat(1)}; }

    AlgNum conj() const { return {a, -b}; }
    Rat norm() const { return a * a - 5 * b * b; }
    Rat trace() const { return 2 * a; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    AlgNum operator+(const AlgNum& o) const { return {a + o.a, b + o.b}; }
    AlgNum operator-(const AlgNum& o) const { return {a - o.a, b - o.b}; }
    AlgNum operator-() const { return {-a, -b}; }
    AlgNum operator*(const AlgNum& o) const {
        return {a * o.a + 5 * b * o.b, a * o.b + b * o.a};
    }
    AlgNum operator*(const Rat& s) const { return {a * s, b * s}; }
    AlgNum operator/(const AlgNum& o) const {
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("AlgNum division by zero");
        return *this * AlgNum{o.a / n, -o.b / n};
    }
    bool operator==(const AlgNum& o) const { return a == o.a && b == o.b; }
    bool operator!=(const AlgNum& o) const { return !(*this == o); }

    // real embedding with sqrt(5) > 0
    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(5.0); }
};

inline std::ostream& operator<<(std::ostream& os, const AlgNum& x) {
    return os << rat_str(x.a) << (sgn(x.b) < 0 ? "" : "+") << rat_str(x.b) << "*sqrt5";
}

}  // namespace qv
