#pragma once

#include <array>
#include <cstdint>

#include "quatvar/qlattice.hpp"
#include "quatvar/quaternion.hpp"

namespace qv {

struct Mat2Q {
    Rat a, b, c, d;  // [[a, b], [c, d]]

    Mat2Q operator*(const Mat2Q& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2Q operator+(const Mat2Q& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2Q operator*(const Rat& s) const { return {a * s, b * s, c * s, d * s}; }
    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }
    static Mat2Q identity() { return {1, 0, 0, 1}; }
    Mat2Q inverse() const {
        Rat dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

// 2x2 matrix over Z/2^level; the action of a quaternion on 2-power torsion.
struct TorsionMat {
    unsigned level = 0;  // entries live mod 2^level
    std::array<std::uint64_t, 4> m{};

    TorsionMat reduced(unsigned lvl) const;
};

// Canonical 2-adic square root of -23 mod 2^M on the branch s = 3 (mod 8).
Int hensel_sqrt_m23(unsigned M);

// Fixed splitting B (x) Q_2 = M_2(Q_2): i -> [[0,-1],[1,0]], j -> diag(s,-s),
// conjugated so that the given maximal order lands in M_2(Z_2).
struct TwoAdicSplitting {
    unsigned precision = 0;
    Int sqrt_m23;
    std::array<Mat2Q, 4> images;  // of 1, i, j, k (post conjugation)

    Mat2Q map(const Quaternion& q) const {
        return images[0] * q.c[0] + images[1] * q.c[1] + images[2] * q.c[2] + images[3] * q.c[3];
    }

    // Reduction mod 2^level; throws if level > precision or if q does not
    // map to a 2-integral matrix.
    TorsionMat reduce(const Quaternion& q, unsigned level) const;
};

// Splitting adapted to `order` (a maximal order in B, given as a lattice).
// Precision is raised internally so reductions at lower levels of distinct
// calls agree.
TwoAdicSplitting two_adic_split(const QLattice& order, unsigned precision);

}  // namespace qv
