#include "quatvar/thetaq.hpp"

#include <cmath>
#include <map>
#include <thread>

#include "quatvar/constants.hpp"
#include "quatvar/parallel.hpp"
#include "quatvar/treefix.hpp"

namespace qv {

CoeffSeries<long> jacobi_coeffs(long max_exp) {
    CoeffSeries<long> s(max_exp);
    for (long m = 1; m * m <= max_exp; m += 2) s[m * m] = 2;
    return s;
}

AlgNum MuMeasure::combine(const ClassSet& cs, const std::array<AlgNum, 3>& psi, long D) const {
    AlgNum out;
    for (int e = 0; e < 3; ++e)
        out = out + psi[std::size_t(e)] * frac(per_class[std::size_t(e)][std::size_t(D)],
                                               cs.classes[std::size_t(e)].w);
    return out;
}

MuMeasure mu_measure(const ClassSet& cs, long dmax) {
    MuMeasure mu;
    mu.dmax = dmax;
    for (int e = 0; e < 3; ++e) {
        const auto& cls = cs.classes[std::size_t(e)];
        const auto& G = cls.frame.ternary_gram;
        // parity bit masks: p[j] = 1 iff coordinate j flips exponent parity
        int pm[3][3];
        for (int r = 0; r < 3; ++r)
            for (int j = 0; j < 3; ++j) pm[r][j] = cls.frame.parity[r][j];

        std::int64_t ob = outermost_bound(G, dmax);
        unsigned workers = thread_cap();
        std::vector<std::vector<std::int64_t>> partial(
            workers, std::vector<std::int64_t>(std::size_t(dmax) + 1, 0));
        // split the outermost coordinate range; integer sums merge exactly,
        // so the result is byte-identical for any worker count
        std::vector<std::thread> pool;
        std::int64_t span = 2 * ob + 1;
        for (unsigned wkr = 0; wkr < workers; ++wkr) {
            std::int64_t lo = -ob + std::int64_t(wkr) * span / workers;
            std::int64_t hi = -ob + std::int64_t(wkr + 1) * span / workers - 1;
            auto body = [&, lo, hi, wkr] {
                auto& tab = partial[wkr];
                enumerate_short_range(G, dmax, lo, hi,
                                      [&](const std::int64_t* x, std::int64_t q) {
                                          int a = 0, b = 0, c = 0;
                                          for (int r = 0; r < 3; ++r) {
                                              int bit = int(x[r] & 1);
                                              a ^= bit & pm[r][0];
                                              b ^= bit & pm[r][1];
                                              c ^= bit & pm[r][2];
                                          }
                                          int val = (a == b && b == c) ? 3 : -1;
                                          tab[std::size_t(q)] += val;
                                      });
            };
            if (workers > 1)
                pool.emplace_back(body);
            else
                body();
        }
        for (auto& th : pool) th.join();
        auto& out = mu.per_class[std::size_t(e)];
        out.assign(std::size_t(dmax) + 1, 0);
        for (auto& tab : partial)
            for (std::size_t d = 0; d <= std::size_t(dmax); ++d) out[d] += tab[d];
    }
    return mu;
}

namespace {

// fix_sharp(alpha, N) memoized on the matrix mod 2^N
struct FixSharpCache {
    unsigned N;
    std::map<std::uint64_t, long> cache;

    long get(const TorsionMat& m) {
        TorsionMat r = m.reduced(N);
        std::uint64_t key = r.m[0] | (r.m[1] << 16) | (r.m[2] << 32) | (r.m[3] << 48);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        long v = fix_sharp(r, N);
        cache.emplace(key, v);
        return v;
    }
};

}  // namespace

Report seesaw_check(const ClassSet& cs, const EigenFns& eig, unsigned N, long nmax) {
    if (N < 2 || N > 4) throw std::invalid_argument("seesaw: N in {2,3,4}");
    Report rep;
    rep.check = "seesaw";
    rep.params = {{"N", N}, {"nmax", nmax}};

    const unsigned level = N + 2;  // torsion slack 2
    const long dil = 1L << (2 * N - 4);
    MuMeasure mu = mu_measure(cs, nmax / dil);

    // tree/orbital side: acc[e][n] = sum_{alpha in R_E, nrd = n} Fix#(alpha)
    std::array<std::vector<long>, 3> acc;
    for (int e = 0; e < 3; ++e) {
        acc[std::size_t(e)].assign(std::size_t(nmax) + 1, 0);
        const auto& cls = cs.classes[std::size_t(e)];
        FixSharpCache fc{N, {}};
        enumerate_short(cls.order_gram, nmax, [&](const std::int64_t* x, std::int64_t q) {
            if (q < 1 || q % 2 == 0) return;
            Quaternion alpha = Quaternion::zero();
            for (std::size_t r = 0; r < 4; ++r) alpha = alpha + cls.order.vec(r) * Rat(x[r]);
            acc[std::size_t(e)][std::size_t(q)] += fc.get(cls.split.reduce(alpha, level));
        });
    }

    bool have_scalar = false;
    Rat s_scalar;
    long informative = 0;
    for (int k = 0; k < 2; ++k) {
        for (long n = 1; n <= nmax; n += 2) {
            ++rep.cases_total;
            AlgNum lhs;
            for (int e = 0; e < 3; ++e)
                lhs = lhs + eig.psi[std::size_t(k)][std::size_t(e)] *
                                frac(acc[std::size_t(e)][std::size_t(n)],
                                     cs.classes[std::size_t(e)].w);
            // theta-side convolution over all m (each +-m pair contributes 2,
            // m = 0 once). For N >= 3 only odd m survive, recovering the
            // factored form theta(z) h(2^{2N} z); at N = 2 the odd-norm cut
            // m^2 + D = n keeps even-m cells with D = 3 mod 4 as well.
            AlgNum rhs;
            for (long m = 0; m * m <= n; ++m) {
                long rem = n - m * m;
                if (rem % dil != 0) continue;
                AlgNum term = mu.combine(cs, eig.psi[std::size_t(k)], rem / dil);
                rhs = rhs + term * Rat(m == 0 ? 1 : 2);
            }
            if (rhs.is_zero()) {
                if (!lhs.is_zero())
                    rep.fail_case({{"k", k + 1}, {"n", n}, {"why", "rhs zero, lhs nonzero"}});
                continue;
            }
            AlgNum ratio = lhs / rhs;
            if (!ratio.is_rational()) {
                rep.fail_case({{"k", k + 1}, {"n", n}, {"why", "irrational ratio"}});
                continue;
            }
            ++informative;
            if (!have_scalar) {
                s_scalar = ratio.a;
                have_scalar = true;
            } else if (ratio.a != s_scalar) {
                rep.fail_case({{"k", k + 1},
                               {"n", n},
                               {"ratio", rat_str(ratio.a)},
                               {"expected", rat_str(s_scalar)}});
            }
        }
    }
    if (!have_scalar) {
        rep.status = "inconclusive";
        return rep;
    }
    rep.data["s_N"] = rat_str(s_scalar);
    rep.data["informative_n"] = informative;
    // bookkeeping comparison with the pinned closed form 2^{2N}; a constant
    // power-of-two offset is reported, not absorbed
    Rat pinned = Rat(pow2(2 * N));
    rep.data["s_pinned_2^2N"] = rat_str(pinned);
    rep.data["bookkeeping_offset"] = rat_str(s_scalar / pinned);
    rep.data["s_matches_pinned"] = (s_scalar == pinned);
    return rep;
}

Report shimura_t9_check(const ClassSet& cs, const EigenFns& eig, long dmax) {
    Report rep;
    rep.check = "shimura-t9";
    rep.params = {{"dmax", dmax}};
    MuMeasure mu = mu_measure(cs, 9 * dmax);

    auto legendre3 = [](long a) {
        long r = ((a % 3) + 3) % 3;
        if (r == 0) return 0L;
        return (r == 1) ? 1L : -1L;  // squares mod 3 are {1}
    };

    std::array<AlgNum, 2> cval;
    std::array<long, 2> sval{};
    for (int k = 0; k < 2; ++k) {
        std::vector<AlgNum> a(std::size_t(dmax) * 9 + 1);
        for (long D = 0; D <= 9 * dmax; ++D)
            a[std::size_t(D)] = mu.combine(cs, eig.psi[std::size_t(k)], D);

        auto lhs_at = [&](long D, long s) {
            AlgNum v = a[std::size_t(9 * D)] + a[std::size_t(D)] * Rat(s * legendre3(-D));
            if (D % 9 == 0) v = v + a[std::size_t(D / 9)] * Rat(3);
            return v;
        };

        bool fitted = false;
        std::array<long, 2> first_bad{0, 0};
        for (int si = 0; si < 2; ++si) {
            long s = si == 0 ? 1 : -1;
            // fit c on the first usable D, then verify everywhere
            AlgNum c;
            bool have_c = false;
            bool ok = true;
            for (long D = 1; D <= dmax && ok; ++D) {
                AlgNum lhs = lhs_at(D, s);
                if (!have_c) {
                    if (a[std::size_t(D)].is_zero()) {
                        if (!lhs.is_zero()) {
                            ok = false;
                            first_bad[std::size_t(si)] = D;
                        }
                        continue;
                    }
                    c = lhs / a[std::size_t(D)];
                    have_c = true;
                    continue;
                }
                if (lhs != c * a[std::size_t(D)]) {
                    ok = false;
                    first_bad[std::size_t(si)] = D;
                }
            }
            if (ok && have_c) {
                fitted = true;
                cval[std::size_t(k)] = c;
                sval[std::size_t(k)] = s;
                break;
            }
        }
        ++rep.cases_total;
        if (!fitted) {
            rep.fail_case({{"k", k + 1},
                           {"why", "no (sign, eigenvalue) fit verifies"},
                           {"first_violated_D", {first_bad[0], first_bad[1]}}});
            continue;
        }
        rep.cases_total += dmax - 1;
    }

    if (rep.status == "pass") {
        BrandtMatrix B3 = brandt(cs, 3);
        AlgNum r0 = cval[0] / eig.eigenvalue(B3, 0);
        AlgNum r1 = cval[1] / eig.eigenvalue(B3, 1);
        ++rep.cases_total;
        if (r0 != r1 || !r0.is_rational())
            rep.fail_case({{"why", "eigenvalue not k-independently proportional to a_3"}});
        rep.data["c_over_a3"] = rat_str(r0.a);
        rep.data["twist_sign"] = {sval[0], sval[1]};
    }
    return rep;
}

ArithVariance arith_variance(const ClassSet& cs, const EigenFns& eig, long xmax) {
    if (xmax > 10'000'000) throw std::invalid_argument("arith_variance: xmax too large");
    ArithVariance av;
    MuMeasure mu = mu_measure(cs, xmax - 1);

    double psn[2][3];
    for (int k = 0; k < 2; ++k) {
        double ns = eig.norm_sq[std::size_t(k)].to_double();
        for (int e = 0; e < 3; ++e)
            psn[k][e] = eig.psi[std::size_t(k)][std::size_t(e)].to_double() / std::sqrt(ns) /
                        double(cs.classes[std::size_t(e)].w);
    }

    for (long c : {1000L, 10'000L, 100'000L, 1'000'000L, 10'000'000L})
        if (c <= xmax) av.checkpoints.push_back(c);
    if (av.checkpoints.empty() || av.checkpoints.back() != xmax) av.checkpoints.push_back(xmax);

    av.sums.assign(av.checkpoints.size(), {0.0, 0.0, 0.0});
    double s11 = 0, s12 = 0, s22 = 0;
    std::size_t ci = 0;
    for (long D = 1; D < xmax; ++D) {
        double m1 = 0, m2 = 0;
        for (int e = 0; e < 3; ++e) {
            double cnt = double(mu.per_class[std::size_t(e)][std::size_t(D)]);
            m1 += psn[0][e] * cnt;
            m2 += psn[1][e] * cnt;
        }
        double invsqrt = 1.0 / std::sqrt(double(D));
        s11 += m1 * m1 * invsqrt;
        s12 += m1 * m2 * invsqrt;
        s22 += m2 * m2 * invsqrt;
        while (ci < av.checkpoints.size() && D + 1 >= av.checkpoints[ci]) {
            double x = double(av.checkpoints[ci]);
            av.sums[ci] = {s11 / x, s12 / x, s22 / x};
            ++ci;
        }
    }

    // resolve the eigenvalue <-> L-value pairing against the two candidates
    ConstantsTable t = constants_table();
    double denom = t.kappa0 * t.kappa0 * std::pow(4.0 * 3.14159265358979323846, -1.5) *
                   (std::sqrt(3.14159265358979323846) / 2.0);
    auto target = [&](int k, int pairing) {
        double L = (pairing == 0) ? t.lmfdb_L[k] : t.lmfdb_L[1 - k];
        return 2.0 * P_poly(t.lambda2[k]) * L / denom;
    };
    const auto& last = av.sums.back();
    double err0 = std::abs(last[0] - target(0, 0)) / target(0, 0) +
                  std::abs(last[2] - target(1, 0)) / target(1, 0);
    double err1 = std::abs(last[0] - target(0, 1)) / target(0, 1) +
                  std::abs(last[2] - target(1, 1)) / target(1, 1);
    av.pairing = err0 <= err1 ? 0 : 1;
    av.targets = {target(0, av.pairing), target(1, av.pairing)};
    return av;
}

Report arith_variance_report(const ClassSet& cs, const EigenFns& eig, long xmax) {
    Report rep;
    rep.check = "arith-variance";
    rep.params = {{"xmax", xmax}};
    ArithVariance av = arith_variance(cs, eig, xmax);

    nlohmann::json traj = nlohmann::json::array();
    for (std::size_t i = 0; i < av.checkpoints.size(); ++i)
        traj.push_back({{"x", av.checkpoints[i]},
                        {"S11", av.sums[i][0]},
                        {"S12", av.sums[i][1]},
                        {"S22", av.sums[i][2]}});
    rep.data["trajectory"] = traj;
    rep.data["pairing"] = av.pairing;
    rep.data["targets"] = {av.targets[0], av.targets[1]};

    const auto& last = av.sums.back();
    ++rep.cases_total;
    if (!(last[0] > 0 && last[2] > 0)) rep.fail_case({{"why", "diagonal not positive"}});
    // off-diagonal smallness (the qualitative content of the off-diagonal
    // vanishing at desk scale)
    ++rep.cases_total;
    if (!(std::abs(last[1]) <= 0.15 * std::sqrt(last[0] * last[2])))
        rep.fail_case({{"why", "off-diagonal too large"},
                       {"S12", last[1]},
                       {"bound", 0.15 * std::sqrt(last[0] * last[2])}});
    if (xmax >= 1'000'000) {
        for (int k = 0; k < 2; ++k) {
            ++rep.cases_total;
            double s = (k == 0) ? last[0] : last[2];
            if (std::abs(s - av.targets[std::size_t(k)]) > 0.30 * av.targets[std::size_t(k)])
                rep.fail_case(
                    {{"k", k + 1}, {"S", s}, {"target", av.targets[std::size_t(k)]}});
        }
        // pairing stability between 1e5 and the final checkpoint
        ArithVariance small = arith_variance(cs, eig, 100'000);
        ++rep.cases_total;
        if (small.pairing != av.pairing) rep.fail_case({{"why", "pairing unstable"}});
    }
    return rep;
}

}  // namespace qv
