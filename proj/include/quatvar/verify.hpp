#pragma once

#include <vector>

#include "quatvar/classset.hpp"
#include "quatvar/report.hpp"
#include "quatvar/thetaq.hpp"

namespace qv {

// class count / mass / unit weights, plus the ternary genus invariants
Report classset_report(const ClassSet& cs);

// row sums, commutativity, weighted self-adjointness, sigma_1 eigenvalue
Report brandt_report(const ClassSet& cs);

// |L_{N1,N2}| closed forms and Fix# of the identity, per class
Report fix_report(const ClassSet& cs, unsigned N);

struct VerifyOptions {
    unsigned fix_N_min = 2, fix_N_max = 4;
    unsigned fourier_N_max = 3;
    unsigned seesaw_N_max = 3;
    long seesaw_nmax = 99;
    long t9_dmax = 450;
    long arith_xmax = 100'000;
    bool slow = false;  // raises arith_xmax to 1e6
};

// The full acceptance sweep in a fixed order; deterministic byte-for-byte
// for a fixed build, any thread count.
std::vector<Report> verify_all(const ClassSet& cs, const EigenFns& eig, VerifyOptions opt);

}  // namespace qv
