#pragma once

#include <array>
#include <ostream>

#include "quatvar/numutil.hpp"

namespace qv {

// Element of B = (-1,-23) over Q: x0 + x1 i + x2 j + x3 k,
// i^2 = -1, j^2 = -23, k = ij = -ji.
struct Quaternion {
    std::array<Rat, 4> c{};

    Quaternion() = default;
    Quaternion(Rat a, Rat b, Rat cc, Rat d) : c{std::move(a), std::move(b), std::move(cc), std::move(d)} {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    Rat trd() const { return 2 * c[0]; }

    Rat nrd() const { return c[0] * c[0] + c[1] * c[1] + 23 * (c[2] * c[2] + c[3] * c[3]); }

    Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }

    Quaternion operator+(const Quaternion& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    Quaternion operator*(const Quaternion& o) const {
        const Rat &x0 = c[0], &x1 = c[1], &x2 = c[2], &x3 = c[3];
        const Rat &y0 = o.c[0], &y1 = o.c[1], &y2 = o.c[2], &y3 = o.c[3];
        return {
            x0 * y0 - x1 * y1 - 23 * x2 * y2 - 23 * x3 * y3,
            x0 * y1 + x1 * y0 + 23 * (x2 * y3 - x3 * y2),
            x0 * y2 + x2 * y0 - x1 * y3 + x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        };
    }

    Quaternion operator*(const Rat& s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }

    bool operator==(const Quaternion& o) const { return c == o.c; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << rat_str(q.c[0]) << ", " << rat_str(q.c[1]) << ", " << rat_str(q.c[2]) << ", "
              << rat_str(q.c[3]) << ")";
}

// trace pairing <x,y> = trd(x * conj(y)); the Gram matrices of all our
// lattices are built from it.
inline Rat trace_pairing(const Quaternion& x, const Quaternion& y) {
    return (x * y.conj()).trd();
}

}  // namespace qv
