#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "quatvar/classset.hpp"
#include "quatvar/shortvec.hpp"

using namespace qv;

namespace {

const ClassSet& CS() {
    static ClassSet cs = build_class_set();
    return cs;
}

// Hurwitz class number H(D) (D > 0, -D = 0,1 mod 4) by counting reduced
// binary quadratic forms; the (a,0,a)/(a,a,a) orbits get weights 1/2, 1/3.
Rat hurwitz(long D) {
    if (D == 0) return frac(-1, 12);
    if (D % 4 == 1 || D % 4 == 2) return Rat(0);
    Rat h(0);
    for (long a = 1; a * a * 4 <= D * 4; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b + D) % (4 * a) != 0) continue;
            long c = (b * b + D) / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;  // reduced: b >= 0 when a = c
            if (a == b && b == c)
                h += frac(1, 3);
            else if (a == c && b == 0)
                h += frac(1, 2);
            else
                h += 1;
        }
    }
    return h;
}

int legendre23(long a) {
    long r = a % 23;
    if (r < 0) r += 23;
    if (r == 0) return 0;
    long p = 1, base = r, e = 11;  // r^((23-1)/2) mod 23
    while (e) {
        if (e & 1) p = p * base % 23;
        base = base * base % 23;
        e >>= 1;
    }
    return p == 1 ? 1 : -1;
}

// Eichler trace of the full Brandt matrix B(m) for the algebra ramified at
// {inf, 23}: sum over s^2 <= 4m of the 23-modified Hurwitz numbers. Only
// valid here for m with no s^2 - 4m divisible by 23 (m in {1, 2, 4}).
Rat eichler_trace(long m) {
    Rat t(0);
    for (long s = -(long)std::sqrt((double)(4 * m)); s * s <= 4 * m; ++s) {
        long D = 4 * m - s * s;
        if (D == 0) {
            t += frac(23 - 1, 24);  // H_23(0)
            continue;
        }
        REQUIRE(D % 23 != 0);
        if (legendre23(-D) == 1) continue;  // 23 split: weight 0
        t += hurwitz(D);
    }
    return t;
}

Rat sigma1(long n) {
    Rat s(0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

}  // namespace

TEST_CASE("class set: cardinality, mass, weights") {
    const ClassSet& cs = CS();
    REQUIRE(cs.classes.size() == 3);
    CHECK(cs.mass() == frac(11, 6));
    std::multiset<long> ws;
    for (const auto& c : cs.classes) ws.insert(c.w);
    CHECK(ws == std::multiset<long>{1, 2, 3});
    // classes sorted by weight
    CHECK(cs.classes[0].w == 1);
    CHECK(cs.classes[2].w == 3);
}

TEST_CASE("brandt: B(1) identity, B(2) row sums") {
    const ClassSet& cs = CS();
    BrandtMatrix B1 = brandt(cs, 1);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(B1.entries[r][c] == (r == c ? Rat(1) : Rat(0)));

    BrandtMatrix B2 = brandt(cs, 2);
    for (auto& s : B2.row_sums()) CHECK(s == Rat(3));

    CHECK_THROWS(brandt(cs, 0));
    CHECK_THROWS(brandt(cs, -3));
}

TEST_CASE("brandt: commutativity, self-adjointness, constant eigenvalue") {
    const ClassSet& cs = CS();
    std::vector<long> ns = {1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25};
    std::vector<BrandtMatrix> Bs;
    for (long n : ns) Bs.push_back(brandt(cs, n));

    for (std::size_t i = 0; i < Bs.size(); ++i)
        for (std::size_t j = i + 1; j < Bs.size(); ++j)
            CHECK(Bs[i] * Bs[j] == Bs[j] * Bs[i]);

    // D B(n) symmetric, D = diag(1/w)
    for (const auto& B : Bs)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(B.entries[r][c] * frac(1, cs.classes[r].w) ==
                      B.entries[c][r] * frac(1, cs.classes[c].w));

    // row sums = sigma_1(n) for gcd(n, 46) = 1
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (std::gcd(ns[i], 46L) != 1) continue;
        for (auto& s : Bs[i].row_sums()) CHECK(s == sigma1(ns[i]));
    }

    // multiplicativity for coprime odd n
    CHECK(brandt(cs, 3) * brandt(cs, 5) == brandt(cs, 15));
    CHECK(brandt(cs, 3) * brandt(cs, 7) == brandt(cs, 21));
}

TEST_CASE("eigenfunctions over Q(sqrt5)") {
    const ClassSet& cs = CS();
    EigenFns eig = eigenfunctions(cs);

    // quadratic factor pinned by the Eichler trace oracle:
    // tr B(2) = H-sum = 2, so cuspidal trace = 2 - 3 = -1;
    // tr B(4) = 6 and B(2)^2 = B(4) + 2 B(1) give sum of squares = 3.
    CHECK(eichler_trace(1) == Rat(3));
    Rat t2 = eichler_trace(2), t4 = eichler_trace(4);
    Rat cusp_sum = t2 - 3;
    Rat cusp_sq_sum = (t4 + 2 * Rat(3)) - 9;
    Rat oracle_p = -cusp_sum;
    Rat oracle_q = (cusp_sum * cusp_sum - cusp_sq_sum) / 2;
    CHECK(eig.quad_p == oracle_p);
    CHECK(eig.quad_q == oracle_q);
    CHECK(eig.quad_p == Rat(1));
    CHECK(eig.quad_q == Rat(-1));  // x^2 + x - 1

    // branch labeling: psi_1 carries a_2 = (-1+sqrt5)/2
    CHECK(eig.a2[0] == AlgNum(frac(-1, 2), frac(1, 2)));
    CHECK(eig.a2[1] == AlgNum(frac(-1, 2), frac(-1, 2)));

    for (int k = 0; k < 2; ++k) {
        AlgNum mean;
        for (int e = 0; e < 3; ++e) mean = mean + eig.psi[k][e] * frac(1, cs.classes[e].w);
        CHECK(mean.is_zero());
    }

    // weighted orthogonality
    AlgNum ip;
    for (int e = 0; e < 3; ++e)
        ip = ip + eig.psi[0][e] * eig.psi[1][e] * frac(1, cs.classes[e].w);
    CHECK(ip.is_zero());

    // exact eigenvector for every computed B(n)
    for (long n : {2L, 3L, 5L, 7L, 9L, 15L, 25L}) {
        BrandtMatrix B = brandt(cs, n);
        AlgNum l0 = eig.eigenvalue(B, 0), l1 = eig.eigenvalue(B, 1);
        CHECK(l0.conj() == l1);
    }
}

TEST_CASE("hecke recursion and ramanujan bound") {
    const ClassSet& cs = CS();
    EigenFns eig = eigenfunctions(cs);
    for (long p : {3L, 5L, 7L}) {
        BrandtMatrix Bp = brandt(cs, p), Bp2 = brandt(cs, p * p), Bp3 = brandt(cs, p * p * p);
        for (int k = 0; k < 2; ++k) {
            AlgNum ap = eig.eigenvalue(Bp, k), ap2 = eig.eigenvalue(Bp2, k),
                   ap3 = eig.eigenvalue(Bp3, k);
            CHECK(ap * ap == ap2 + AlgNum(Rat(p)));          // k = 1 case
            CHECK(ap * ap2 == ap3 + AlgNum(Rat(p)) * ap);    // k = 2 case
        }
    }
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        BrandtMatrix Bp = brandt(cs, p);
        for (int k = 0; k < 2; ++k) {
            double ap = eig.eigenvalue(Bp, k).to_double();
            CHECK(std::abs(ap) <= 2.0 * std::sqrt((double)p) + 1e-12);
        }
    }
}

TEST_CASE("ternary lattices and genus invariants") {
    const ClassSet& cs = CS();
    Rat det_first(0);
    for (const auto& c : cs.classes) {
        const auto& g = c.frame.gram;
        REQUIRE(g.size() == 3);
        Rat det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                  g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                  g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        if (det_first == 0)
            det_first = det;
        else
            CHECK(det == det_first);  // genus invariance across classes
        // positive definiteness comes along for free in gram_from_rational
        // (the enumeration plan would reject otherwise)
        CHECK(g[0][0] > 0);
    }
    // golden value: det(trace-pairing gram of S_E^0) = 8 * (2*23)^2
    CHECK(det_first == Rat(8 * 46 * 46));

    // minimal nonzero value for the w = 3 class is < 23
    const auto& c3 = cs.classes[2];
    REQUIRE(c3.w == 3);
    std::int64_t minval = 1'000'000;
    enumerate_short(c3.frame.ternary_gram, 23, [&](const std::int64_t* x, std::int64_t q) {
        if (q != 0 && q < minval) {
            (void)x;
            minval = q;
        }
    });
    CHECK(minval < 23);

    // Q_E(0) = 0 and Q_E = -a^2 mod 4 in adapted coordinates
    for (const auto& c : cs.classes) {
        CHECK(Quaternion::zero().nrd() == Rat(0));
        for (int r = 0; r < 3; ++r) {
            Quaternion b = c.frame.ternary.vec(r);
            long a_par = c.frame.parity[r][0];
            Rat q = b.nrd();
            Int qm = mod_reduce(Int(q.get_num()), Int(4));
            CHECK(qm == mod_reduce(Int(3 * a_par * a_par), Int(4)));
        }
    }
}

TEST_CASE("chi characters") {
    const ClassSet& cs = CS();
    for (const auto& c : cs.classes) {
        // beta = 0
        auto x0 = chi(c.frame, Quaternion::zero());
        CHECK(x0 == std::array<int, 3>{1, 1, 1});

        // multiplicativity on S^0/2S^0 and value-sum pattern
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> coef(-5, 5);
        for (int t = 0; t < 200; ++t) {
            Quaternion u = c.frame.ternary.vec(0) * Rat(coef(rng)) +
                           c.frame.ternary.vec(1) * Rat(coef(rng)) +
                           c.frame.ternary.vec(2) * Rat(coef(rng));
            Quaternion v = c.frame.ternary.vec(0) * Rat(coef(rng)) +
                           c.frame.ternary.vec(1) * Rat(coef(rng)) +
                           c.frame.ternary.vec(2) * Rat(coef(rng));
            auto xu = chi(c.frame, u), xv = chi(c.frame, v), xs = chi(c.frame, u + v);
            for (int i = 0; i < 3; ++i) CHECK(xu[i] * xv[i] == xs[i]);
        }

        // sum of chi_i over each residue class is 3 or -1
        for (int mask = 0; mask < 8; ++mask) {
            Quaternion b = Quaternion::zero();
            for (int r = 0; r < 3; ++r)
                if (mask & (1 << r)) b = b + c.frame.ternary.vec(r);
            auto x = chi(c.frame, b);
            int s = x[0] + x[1] + x[2];
            CHECK((s == 3 || s == -1));
        }

        CHECK_THROWS(chi(c.frame, Quaternion::one()));  // not trace zero
    }
}

TEST_CASE("AlgNum field axioms and conjugation") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 5);
    auto rnd = [&] { return AlgNum(frac(num(rng), den(rng)), frac(num(rng), den(rng))); };
    for (int t = 0; t < 60; ++t) {
        AlgNum a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(AlgNum(a.norm()) == a * a.conj());
        CHECK(AlgNum(a.trace()) == a + a.conj());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    AlgNum s5 = AlgNum::sqrt5();
    CHECK(s5 * s5 == AlgNum(Rat(5)));
    CHECK(s5.to_double() > 0);
}
