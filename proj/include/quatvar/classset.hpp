#pragma once

#include <array>
#include <vector>

#include "quatvar/algnum.hpp"
#include "quatvar/qlattice.hpp"
#include "quatvar/shortvec.hpp"
#include "quatvar/twoadic.hpp"

namespace qv {

// Character data for S_E^0: the mod-4 matrix model and the parity map
// taking ternary coordinates to the exponents (a,b,c) of
// chi = ((-1)^{b+c}, (-1)^{a+c}, (-1)^{a+b}).
struct CharFrame {
    QLattice ternary;                            // basis of S_E^0, 3 x 4
    std::vector<std::vector<Rat>> gram;          // 3x3, <x,y> = trd(x conj y)
    GramSmall ternary_gram;                      // same, packed for enumeration
    std::array<std::array<int, 3>, 3> parity{};  // row i: (a,b,c) mod 2 of basis vector i
};

struct ClassRec {
    QLattice ideal;   // right R-ideal, canonical HNF
    QLattice order;   // left order R_E
    long w = 0;       // #R_E^x / {+-1}
    TwoAdicSplitting split;  // adapted to R_E
    CharFrame frame;
    GramSmall order_gram;  // 2*nrd on R_E
};

struct ClassSet {
    QLattice R;  // the fixed maximal order of discriminant 23
    std::vector<ClassRec> classes;

    Rat mass() const {
        Rat m(0);
        for (const auto& c : classes) m += frac(1, c.w);
        return m;
    }
};

// 2-neighbor walk on right R-ideal classes; stops on Eichler's mass 11/6.
// `precision` is the 2-adic working precision for the class splittings.
ClassSet build_class_set(unsigned precision = 8);

struct BrandtMatrix {
    long n = 0;
    std::array<std::array<Rat, 3>, 3> entries{};

    std::array<Rat, 3> row_sums() const;
    BrandtMatrix operator*(const BrandtMatrix& o) const;
    bool operator==(const BrandtMatrix& o) const { return entries == o.entries; }
};

BrandtMatrix brandt(const ClassSet& cs, long n);

// Unnormalized Galois-conjugate eigenvector pair on the mean-zero plane.
// psi[0] belongs to the branch a_2 = (-1+sqrt5)/2 under sqrt5 > 0.
struct EigenFns {
    std::array<std::array<AlgNum, 3>, 2> psi;
    std::array<AlgNum, 2> norm_sq;
    std::array<AlgNum, 2> a2;
    // monic quadratic x^2 + px + q of B(2) on the mean-zero plane
    Rat quad_p, quad_q;

    // exact Hecke eigenvalue of B(n) on psi[k]; throws if psi[k] is not an
    // exact eigenvector.
    AlgNum eigenvalue(const BrandtMatrix& B, int k) const;
};

EigenFns eigenfunctions(const ClassSet& cs);

// chi_1, chi_2, chi_3 evaluated at beta (must lie in S_E^0).
std::array<int, 3> chi(const CharFrame& frame, const Quaternion& beta);

// Parities (a,b,c) of beta in the frame's coordinates.
std::array<int, 3> chi_exponents(const CharFrame& frame, const Quaternion& beta);

}  // namespace qv
