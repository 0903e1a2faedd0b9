#pragma once

#include <string>

#include "quatvar/algnum.hpp"
#include "quatvar/report.hpp"

namespace qv {

// Closed-form constants of the variance identity, with factor lists kept
// symbolic so every float is reproducible from them.
struct ConstantsTable {
    double kappa1;        // 1 / ((4 pi)^2 zeta^(S)(2) zeta_2(1) zeta_23(1))
    double kappa0;        // kappa_1 = kappa_0^{-2} 2^{-2}
    double theta_norm_sq; // 1/2
    double f_phi_00;      // 1/4
    double I_inf;         // 1/4
    double I_23;          // 2/23
    double lmfdb_L[2];    // {0.552, 0.450}, 3-decimal registry values
    // lambda_psi(2) = a2 / sqrt(2) for the two branches a2 = (-1 +- sqrt5)/2
    double lambda2[2];

    nlohmann::json to_json() const;
};

ConstantsTable constants_table();

// P(x) = pi^2 (15 - 4 sqrt(2) x) / 69
double P_poly(double x);

// Diagonal entries of V_infinity = P(lambda(2)) * L(Psi, 1/2) under a
// resolved eigenvalue <-> L-value pairing (0 or 1); off-diagonal zero.
// pairing < 0 throws: the ambiguity must be resolved first.
double v_infinity(int k, int pairing);

// Constant-product chain: registry constants reproduce P(x) as an affine
// identity; checked coefficient-wise and on sampled x.
Report rallis_constant_check();

}  // namespace qv
