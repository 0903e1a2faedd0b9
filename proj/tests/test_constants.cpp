#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "quatvar/constants.hpp"

using namespace qv;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("P polynomial") {
    CHECK(std::abs(P_poly(0.0) - 15.0 * kPi * kPi / 69.0) < 1e-15);
    // affine: P(x) - P(0) is linear
    double d1 = P_poly(1.0) - P_poly(0.0);
    for (double x : {-2.0, -0.5, 0.25, 1.75})
        CHECK(std::abs(P_poly(x) - (P_poly(0.0) + x * d1)) < 1e-12);
    CHECK(d1 < 0);  // decreasing in the eigenvalue
}

TEST_CASE("constants table identities") {
    ConstantsTable t = constants_table();
    CHECK(t.theta_norm_sq == 0.5);
    CHECK(t.f_phi_00 == 0.25);
    CHECK(t.I_inf == 0.25);
    CHECK(std::abs(t.I_23 - 2.0 / 23.0) < 1e-15);
    // 4 kappa_1 kappa_0^2 = zeta_2(1) zeta_2(2) = 8/3 (the normalization
    // both the constant-product identity and the measured variance confirm)
    CHECK(std::abs(4.0 * t.kappa1 * t.kappa0 * t.kappa0 - 8.0 / 3.0) < 1e-14);
    CHECK(t.kappa0 > 0);
    // lambda2 branches satisfy x^2 + x - 1 = 0 after multiplying by sqrt2
    for (double l : t.lambda2) {
        double a2 = l * std::sqrt(2.0);
        CHECK(std::abs(a2 * a2 + a2 - 1.0) < 1e-12);
    }
    CHECK(t.lmfdb_L[0] == 0.552);
    CHECK(t.lmfdb_L[1] == 0.450);
}

TEST_CASE("v_infinity") {
    CHECK_THROWS(v_infinity(0, -1));  // unresolved pairing must be loud
    for (int pairing : {0, 1}) {
        CHECK(v_infinity(0, pairing) > 0);
        CHECK(v_infinity(1, pairing) > 0);
    }
    // the two pairings differ (otherwise resolution would be moot)
    CHECK(v_infinity(0, 0) != v_infinity(0, 1));
}

TEST_CASE("rallis constant check") {
    Report r = rallis_constant_check();
    CHECK(r.passed());
    CHECK(r.cases_failed == 0);
    // the affine product reproduces P at the two eigenvalue branches
    auto pl = r.data["P_at_lambda"];
    CHECK(pl[0].get<double>() > 0);
    CHECK(pl[1].get<double>() > pl[0].get<double>());  // P decreasing, lambda_2 < lambda_1
}

TEST_CASE("constants json dump") {
    nlohmann::json j = constants_table().to_json();
    CHECK(j["theta_norm_sq"] == 0.5);
    CHECK(j.contains("kappa1_factors"));
    CHECK(j["L_registry"][0] == 0.552);
}
