#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quatvar/fourier.hpp"
#include "quatvar/treefix.hpp"

using namespace qv;

namespace {

const ClassSet& CS() {
    static ClassSet cs = build_class_set();
    return cs;
}

}  // namespace

TEST_CASE("cyclotomic integers") {
    unsigned N = 3;  // Z[zeta_8]
    CycInt z = CycInt::root_power(N, 1);
    CycInt z8 = CycInt::root_power(N, 8);
    CHECK(z8 == CycInt::scalar(N, 1));
    CHECK(CycInt::root_power(N, 4) == CycInt::scalar(N, -1));

    // ring axioms, spot checks
    std::mt19937_64 rng(2);
    auto rnd = [&] {
        CycInt a(N);
        for (auto& c : a.c) c = long(rng() % 7) - 3;
        return a;
    };
    for (int t = 0; t < 30; ++t) {
        CycInt a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
    // zeta * zeta^{-1} = 1
    CHECK(z * CycInt::root_power(N, -1) == CycInt::scalar(N, 1));
}

TEST_CASE("fourier transform on M2(Z/2^N)") {
    unsigned N = 2;
    // delta at 0 -> constant 1
    FiniteMatFn delta(N);
    delta.values[0] = CycInt::scalar(N, 1);
    FiniteMatFn Fd = ft_m2(delta);
    for (const auto& v : Fd.values) CHECK(v == CycInt::scalar(N, 1));

    // FF f = 2^{4N} f(-x) on random sparse f
    std::mt19937_64 rng(5);
    FiniteMatFn f(N);
    for (int t = 0; t < 12; ++t)
        f.values[rng() % f.domain_size()] = CycInt::scalar(N, long(rng() % 9) - 4);
    FiniteMatFn FF = ft_m2(ft_m2(f));
    Int scale = pow2(4 * N);
    const std::uint64_t q = 1ull << N;
    for (std::size_t idx = 0; idx < f.domain_size(); ++idx) {
        auto m = FiniteMatFn::unpack(N, idx);
        std::size_t neg = FiniteMatFn::pack(N, (q - m[0]) % q, (q - m[1]) % q, (q - m[2]) % q,
                                            (q - m[3]) % q);
        CycInt want = f.values[neg];
        for (auto& c : want.c) c *= scale;
        CHECK(FF.values[idx] == want);
    }

    // exact Parseval: sum |Ff|^2 = 2^{4N} sum |f|^2
    FiniteMatFn Ff = ft_m2(f);
    CycInt lhs(N), rhs(N);
    for (const auto& v : Ff.values) lhs = lhs + v * v.conj();
    for (const auto& v : f.values) rhs = rhs + v * v.conj();
    for (auto& c : rhs.c) c *= scale;
    CHECK(lhs == rhs);
}

TEST_CASE("conjugation-sum proportionality at N = 2 and 3") {
    for (unsigned N : {2u, 3u}) {
        Report r = verify_fourier_proportionality(CS(), N);
        INFO("N = ", N);
        CHECK(r.passed());
        CHECK(r.data["c_N"] == r.data["c_pinned"]);
    }
}

TEST_CASE("schwartz inner products") {
    SchwartzB2 one = indicator_m2z2();
    CHECK(one.mass() == Rat(1));
    CHECK(one.norm_sq() == Rat(1));
    for (int n = 0; n <= 4; ++n)
        CHECK(schwartz_ip(n, one, one) == frac(1, pow2(std::size_t(n))));

    SchwartzB2 ph = phi_hat();
    CHECK(schwartz_ip(0, ph, ph) == frac(3, 16));
    CHECK(schwartz_ip(2, ph, ph) == frac(1, 64));
    CHECK(schwartz_ip(1, ph, ph) == frac(1, 32));
    CHECK(schwartz_ip(3, ph, ph) == frac(1, 128));

    // conjugation symmetry for real-valued f
    CHECK(schwartz_ip(2, ph, ph) == schwartz_ip(-2, ph, ph));
    CHECK(schwartz_ip(1, one, ph) == schwartz_ip(-1, one, ph));
}

// Minimal exact Fourier transform on trace-zero Schwartz tables, used only
// to pin the B_2^0 Plancherel normalization. Coordinates (a, b, c) stand
// for [[a, b], [c, -a]]; the pairing is <x, y> = -(2 a a' + b c' + c b').
namespace b20 {

struct Fn {
    unsigned A, B;  // supported on 2^{-A} Z^3, constant on 2^{B} Z^3 cells
    std::vector<Rat> tab;  // size 2^{3(A+B)}

    Fn(unsigned A_, unsigned B_) : A(A_), B(B_), tab(std::size_t(1) << (3 * (A_ + B_))) {}
    std::size_t width() const { return A + B; }
};

Rat norm_sq(const Fn& f) {
    Rat cell = frac(1, pow2(3 * f.B));
    Rat s(0);
    for (const auto& v : f.tab) s += v * v;
    return s * cell;
}

// exact transform; requires all output values to be rational (true for the
// lattice indicators used here), enforced via the CycInt scalar check
Fn ft(const Fn& f) {
    unsigned W = unsigned(f.width());
    Fn out(f.B, f.A);
    std::uint64_t q = 1ull << W;
    Rat cellvol = frac(1, pow2(3 * f.B));
    std::vector<Int> nums(f.tab.size());
    for (std::size_t i = 0; i < f.tab.size(); ++i) {
        REQUIRE(f.tab[i].get_den() == 1);
        nums[i] = Int(f.tab[i].get_num());
    }
    for (std::uint64_t xi = 0; xi < (1ull << (3 * W)); ++xi) {
        std::uint64_t x0 = xi & (q - 1), x1 = (xi >> W) & (q - 1), x2 = (xi >> (2 * W)) & (q - 1);
        CycInt acc(W);
        for (std::uint64_t yi = 0; yi < (1ull << (3 * W)); ++yi) {
            if (f.tab[yi] == 0) continue;
            std::uint64_t y0 = yi & (q - 1), y1 = (yi >> W) & (q - 1),
                          y2 = (yi >> (2 * W)) & (q - 1);
            // psi(<x, y>) = zeta_{2^W}^{-(2 x0 y0 + x1 y2 + x2 y1)}
            long e = -long((2 * x0 * y0 + x1 * y2 + x2 * y1) % q);
            CycInt term = CycInt::root_power(W, e);
            for (auto& cc : term.c) cc *= nums[yi];
            acc = acc + term;
        }
        auto sv = acc.is_scalar_value();
        REQUIRE(sv.first);
        out.tab[xi] = Rat(sv.second) * cellvol;
    }
    return out;
}

}  // namespace b20

TEST_CASE("plancherel constant on B_2^0") {
    // f = indicator of R_2^0 = Z_2^3 at scales (A, B) = (0, 1)
    b20::Fn f(0, 1);
    for (auto& v : f.tab) v = 1;
    CHECK(b20::norm_sq(f) == Rat(1));

    b20::Fn F = b20::ft(f);
    // expect the indicator of 2^{-1} S_2^0 = {(a,b,c): 2a, b, c integral}:
    // on the (Z/2)^3 grid of 2^{-1}-cells that is {x1 = x2 = 0}
    Rat nsq = b20::norm_sq(F);
    CHECK(nsq == Rat(2));
    // ||f||^2 = 2^{-1} ||F'' f||^2
    CHECK(b20::norm_sq(f) == frac(1, 2) * nsq);

    for (std::uint64_t xi = 0; xi < 8; ++xi) {
        std::uint64_t x1 = (xi >> 1) & 1, x2 = (xi >> 2) & 1;
        CHECK(F.tab[xi] == ((x1 == 0 && x2 == 0) ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("macdonald spherical function") {
    CHECK(macdonald_xi(0.7, 0) == 1.0);
    // trivial representation: a2 = 3 gives Xi = 1 identically
    for (unsigned n = 0; n <= 6; ++n) CHECK(std::abs(macdonald_xi(3.0, n) - 1.0) < 1e-12);

    // Hecke consistency: 3 Xi(a(2)) = a2
    for (double a2 : {(-1.0 + std::sqrt(5.0)) / 2.0, (-1.0 - std::sqrt(5.0)) / 2.0, 0.3}) {
        CHECK(std::abs(3.0 * macdonald_xi(a2, 1) - a2) < 1e-12);
    }

    // cell volumes against the tree-sphere oracle |T_n| = 3 * 2^{n-1}
    CHECK(cartan_cell_volume(0) == 1.0);
    for (unsigned n = 1; n <= 5; ++n) {
        long sphere = pair_space_size(0, n);  // vertices at distance n
        CHECK(cartan_cell_volume(n) == double(sphere));
    }
}

TEST_CASE("local integrals against closed forms") {
    const ClassSet& cs = CS();
    EigenFns eig = eigenfunctions(cs);
    Report r = verify_local_integrals(eig.a2[0], eig.a2[1]);
    CHECK(r.passed());
    CHECK(r.cases_failed == 0);
}

TEST_CASE("conjugation sum is a class function") {
    unsigned N = 3;
    FiniteMatFn Phi4 = conjugation_sum(phi0_times4(N));
    std::mt19937_64 rng(31);
    const std::uint64_t q = 1ull << N;
    auto rnd = [&] { return rng() % q; };
    for (int t = 0; t < 40; ++t) {
        std::uint64_t g0, g1, g2, g3;
        do {
            g0 = rnd(); g1 = rnd(); g2 = rnd(); g3 = rnd();
        } while ((g0 * g3 - g1 * g2) % 2 == 0);
        std::uint64_t det = (g0 * g3 - g1 * g2) % q, dinv = 1;
        for (unsigned e = 0; e < N; ++e) dinv = dinv * (2 - det * dinv);
        dinv %= q;
        std::uint64_t x0 = rnd(), x1 = rnd(), x2 = rnd(), x3 = rnd();
        // g^{-1} x g
        std::uint64_t gi[4] = {g3 * dinv % q, (q - g1) * dinv % q, (q - g2) * dinv % q,
                               g0 * dinv % q};
        std::uint64_t t0 = gi[0] * x0 + gi[1] * x2, t1 = gi[0] * x1 + gi[1] * x3;
        std::uint64_t t2 = gi[2] * x0 + gi[3] * x2, t3 = gi[2] * x1 + gi[3] * x3;
        std::uint64_t c0 = t0 * g0 + t1 * g2, c1 = t0 * g1 + t1 * g3;
        std::uint64_t c2 = t2 * g0 + t3 * g2, c3 = t2 * g1 + t3 * g3;
        CHECK(Phi4.values[FiniteMatFn::pack(N, x0, x1, x2, x3)] ==
              Phi4.values[FiniteMatFn::pack(N, c0, c1, c2, c3)]);
    }
}

TEST_CASE("schwartz refinement invariance") {
    SchwartzB2 ph = phi_hat();
    SchwartzB2 ph2 = refine(ph);
    CHECK(ph2.norm_sq() == ph.norm_sq());
    CHECK(ph2.mass() == ph.mass());
    for (int n = 0; n <= 2; ++n) {
        CHECK(schwartz_ip(n, ph2, ph2) == schwartz_ip(n, ph, ph));
        CHECK(schwartz_ip(n, ph2, ph) == schwartz_ip(n, ph, ph));
    }
    SchwartzB2 one2 = refine(indicator_m2z2());
    CHECK(schwartz_ip(3, one2, one2) == frac(1, 8));
    CHECK(one2.norm_sq() == Rat(1));
}

TEST_CASE("transform of the character-sum schwartz function") {
    // 8 * phi-hat'' on the trace-zero grid at scales (2, 2): value
    // sum_i chi_i(4 beta) on the support {b, c in (1/2) Z_2}, where the
    // parities read (a', b', c') = (X0, X1/2, X2/2). Its transform must be
    // 16 * sum_i 1_{e_i + 2 R_2^0} exactly.
    b20::Fn f(2, 2);
    const std::uint64_t W = 4, q = 1ull << W;
    for (std::uint64_t xi = 0; xi < (1ull << (3 * W)); ++xi) {
        std::uint64_t X0 = xi & (q - 1), X1 = (xi >> W) & (q - 1), X2 = (xi >> (2 * W)) & (q - 1);
        if (X1 % 2 || X2 % 2) continue;
        int ap = int(X0 % 2), bp = int((X1 / 2) % 2), cp = int((X2 / 2) % 2);
        auto pm = [](int e) { return e % 2 ? -1 : 1; };
        f.tab[xi] = pm(bp + cp) + pm(ap + cp) + pm(ap + bp);
    }

    b20::Fn F = b20::ft(f);  // scales (2, 2) again
    long on_support = 0;
    for (std::uint64_t xi = 0; xi < (1ull << (3 * W)); ++xi) {
        std::uint64_t X0 = xi & (q - 1), X1 = (xi >> W) & (q - 1), X2 = (xi >> (2 * W)) & (q - 1);
        // a = X0/4, b = X1/4, c = X2/4 against the three shifted lattices:
        // (even, odd, odd), (odd, odd, even), (odd, even, odd) in units of Z_2
        auto cls = [&](std::uint64_t X, int parity) {
            return X % 4 == 0 && (X / 4) % 2 == std::uint64_t(parity);
        };
        long expect = 0;
        if (cls(X0, 0) && cls(X1, 1) && cls(X2, 1)) expect = 16;
        if (cls(X0, 1) && cls(X1, 1) && cls(X2, 0)) expect = 16;
        if (cls(X0, 1) && cls(X1, 0) && cls(X2, 1)) expect = 16;
        if (expect) ++on_support;
        CHECK(F.tab[xi] == Rat(expect));
    }
    CHECK(on_support == 3 * 8);  // three disjoint cosets of 2 R_2^0, 8 cells each

    // norms close the loop: ||8 phi''||^2 = 64 * 3/4 = 48 (the n = 0 inner
    // product) and the B_2^0 Plancherel constant ||f||^2 = 2^{-1} ||F f||^2
    CHECK(b20::norm_sq(f) == Rat(48));
    CHECK(b20::norm_sq(F) == Rat(2) * b20::norm_sq(f));
}
