#include "quatvar/treefix.hpp"

#include <random>

namespace qv {

namespace {

struct GenInfo {
    std::uint64_t g0, g1;
    int mod2_class;  // 0: (1,0), 1: (0,1), 2: (1,1)
};

// Canonical generators of the order-2^N cyclic subgroups of (Z/2^N)^2.
std::vector<GenInfo> subgroup_generators(unsigned N) {
    std::vector<GenInfo> out;
    std::uint64_t q = 1ull << N;
    for (std::uint64_t t = 0; t < q; ++t)
        out.push_back({1, t, t % 2 ? 2 : 0});
    for (std::uint64_t t = 0; t < q / 2; ++t)
        out.push_back({2 * t, 1, 1});
    return out;
}

bool stabilizes(const TorsionMat& a, unsigned N, const GenInfo& g) {
    std::uint64_t mask = (1ull << N) - 1;
    std::uint64_t u0 = (a.m[0] * g.g0 + a.m[1] * g.g1) & mask;
    std::uint64_t u1 = (a.m[2] * g.g0 + a.m[3] * g.g1) & mask;
    if (g.g0 == 1) return u1 == (u0 * g.g1 & mask);
    return u0 == (u1 * g.g0 & mask);
}

// counts of stabilized order-2^N subgroups per mod-2 class
std::array<long, 3> stab_counts(const TorsionMat& alpha, unsigned N) {
    std::array<long, 3> cnt{0, 0, 0};
    TorsionMat a = alpha.reduced(N);
    for (const auto& g : subgroup_generators(N))
        if (stabilizes(a, N, g)) ++cnt[std::size_t(g.mod2_class)];
    return cnt;
}

}  // namespace

long fix_count(const TorsionMat& alpha, unsigned N1, unsigned N2) {
    if (alpha.level < std::max(N1, N2))
        throw std::domain_error("fix_count: torsion level too low");
    if (N1 == 0 && N2 == 0) return 1;
    if (N1 == 0 || N2 == 0) {
        auto c = stab_counts(alpha, std::max(N1, N2));
        return c[0] + c[1] + c[2];
    }
    auto c1 = stab_counts(alpha, N1);
    auto c2 = stab_counts(alpha, N2);
    long total = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) total += c1[std::size_t(i)] * c2[std::size_t(j)];
    return total;
}

long fix_sharp(const TorsionMat& alpha, unsigned N) {
    if (N < 1) throw std::invalid_argument("fix_sharp: N >= 1");
    return fix_count(alpha, N, N) - fix_count(alpha, N - 1, N) - fix_count(alpha, N, N - 1) +
           fix_count(alpha, N - 1, N - 1);
}

long pair_space_size(unsigned N1, unsigned N2) {
    TorsionMat id;
    id.level = std::max({N1, N2, 1u});
    std::uint64_t mask = (1ull << id.level) - 1;
    id.m = {1 & mask, 0, 0, 1 & mask};
    return fix_count(id, N1, N2);
}

std::array<int, 3> eta(const ClassRec& cls, const Quaternion& beta) {
    if (!cls.frame.ternary.contains(beta)) throw std::domain_error("beta is not in S_E^0");
    // auxiliary odd-norm lift alpha = beta + t, t in {0, 1}
    Rat nr = beta.nrd();
    long t = (mod_reduce(Int(nr.get_num()), Int(2)) == 0) ? 1 : 0;
    Quaternion alpha = beta + Quaternion{Rat(t), 0, 0, 0};
    TorsionMat m = cls.split.reduce(alpha, 2);

    static constexpr std::uint64_t kids[3][2] = {{1, 1}, {1, 0}, {0, 1}};
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        std::uint64_t u0 = (m.m[0] * kids[i][0] + m.m[1] * kids[i][1]) % 4;
        std::uint64_t u1 = (m.m[2] * kids[i][0] + m.m[3] * kids[i][1]) % 4;
        // alpha is a scalar mod 2, so it fixes every child of the origin
        if (u0 % 2 != kids[i][0] || u1 % 2 != kids[i][1])
            throw std::logic_error("auxiliary lift does not act trivially on E[2]");
        bool plus = (u0 == kids[i][0] && u1 == kids[i][1]);
        bool minus = (u0 == (4 - kids[i][0]) % 4 && u1 == (4 - kids[i][1]) % 4);
        out[i] = (plus || minus) ? 1 : -1;
    }
    return out;
}

std::vector<Quaternion> residue_reps(const CharFrame& frame) {
    std::vector<Quaternion> reps;
    for (int mask = 0; mask < 8; ++mask) {
        Quaternion b = Quaternion::zero();
        for (int r = 0; r < 3; ++r)
            if (mask & (1 << r)) b = b + frame.ternary.vec(std::size_t(r));
        reps.push_back(b);
    }
    return reps;
}

Report verify_triples_agree(const ClassSet& cs) {
    Report rep;
    rep.check = "triples-agree";
    for (std::size_t e = 0; e < cs.classes.size(); ++e) {
        const auto& cls = cs.classes[e];
        for (const auto& beta : residue_reps(cls.frame)) {
            ++rep.cases_total;
            auto x = chi(cls.frame, beta);
            auto h = eta(cls, beta);
            bool ok = (x[0] == h[1] * h[2]) && (x[1] == h[0] * h[2]) && (x[2] == h[0] * h[1]);

            // a second lift (t + 2) must give the same eta
            Rat nr = beta.nrd();
            long t = (mod_reduce(Int(nr.get_num()), Int(2)) == 0) ? 3 : 2;
            Quaternion alpha2 = beta + Quaternion{Rat(t), 0, 0, 0};
            if (mod_reduce(Int(alpha2.nrd().get_num()), Int(2)) == 1) {
                // recompute eta from this lift directly
                TorsionMat m = cls.split.reduce(alpha2, 2);
                static constexpr std::uint64_t kids[3][2] = {{1, 1}, {1, 0}, {0, 1}};
                for (int i = 0; i < 3; ++i) {
                    std::uint64_t u0 = (m.m[0] * kids[i][0] + m.m[1] * kids[i][1]) % 4;
                    std::uint64_t u1 = (m.m[2] * kids[i][0] + m.m[3] * kids[i][1]) % 4;
                    bool plus = (u0 == kids[i][0] && u1 == kids[i][1]);
                    bool minus = (u0 == (4 - kids[i][0]) % 4 && u1 == (4 - kids[i][1]) % 4);
                    if (((plus || minus) ? 1 : -1) != h[i]) ok = false;
                }
            }
            if (!ok)
                rep.fail_case({{"class", e},
                               {"chi", {x[0], x[1], x[2]}},
                               {"eta", {h[0], h[1], h[2]}}});
        }
    }
    return rep;
}

Report verify_local_pushforward(const ClassSet& cs, unsigned N, int samples) {
    if (N < 2) throw std::invalid_argument("local pushforward needs N >= 2");
    Report rep;
    rep.check = "fix-prop";
    rep.params = {{"N", N}};
    unsigned level = N + 2;  // torsion slack fixed at 2

    for (std::size_t e = 0; e < cs.classes.size(); ++e) {
        const auto& cls = cs.classes[e];
        for (const auto& beta : residue_reps(cls.frame)) {
            auto x = chi(cls.frame, beta);
            long rhs = (1L << (2 * N - 3)) * (x[0] + x[1] + x[2]);
            for (long m = 0; m <= 3; ++m) {
                ++rep.cases_total;
                Quaternion alpha =
                    Quaternion{Rat(m), 0, 0, 0} + beta * Rat(pow2(N - 2));
                long lhs = fix_sharp(cls.split.reduce(alpha, level), N);
                if (lhs != rhs)
                    rep.fail_case({{"class", e}, {"m", m}, {"lhs", lhs}, {"rhs", rhs}});
            }
        }

        // vanishing off the support Z + 2^{N-2} S^0
        std::vector<Quaternion> supp_gens = {Quaternion::one()};
        for (int r = 0; r < 3; ++r)
            supp_gens.push_back(cls.frame.ternary.vec(std::size_t(r)) * Rat(pow2(N - 2)));
        QLattice supp = lattice_from_vectors(supp_gens);

        std::mt19937_64 rng(1000 * N + e);
        std::uniform_int_distribution<int> coef(-6, 6);
        int done = 0;
        while (done < samples) {
            Quaternion alpha = Quaternion::zero();
            for (std::size_t r = 0; r < 4; ++r)
                alpha = alpha + cls.order.vec(r) * Rat(coef(rng));
            if (supp.contains(alpha)) continue;
            ++done;
            ++rep.cases_total;
            long lhs = fix_sharp(cls.split.reduce(alpha, level), N);
            if (lhs != 0) rep.fail_case({{"class", e}, {"support", false}, {"lhs", lhs}});
        }
    }
    rep.data["classes"] = cs.classes.size();
    rep.data["proposition_cases"] = 96;  // 8 residues x 4 m-values x 3 classes
    rep.data["support_samples"] = rep.cases_total - 96;
    return rep;
}

Report mean_statistics(const ClassSet& cs, unsigned N) {
    if (N < 2) throw std::invalid_argument("mean statistics needs N >= 2");
    Report rep;
    rep.check = "mean-stats";
    rep.params = {{"N", N}};
    unsigned level = N + 2;

    const long per_class_target = 3L << (2 * N - 3);  // 2^{2N} (1+1/2)(1-1/2)^2
    for (std::size_t e = 0; e < cs.classes.size(); ++e) {
        const auto& cls = cs.classes[e];
        long acc = 0;
        long units = 0;
        enumerate_short(cls.order_gram, 1, [&](const std::int64_t* x, std::int64_t q) {
            if (q != 1) return;
            ++units;
            Quaternion u = Quaternion::zero();
            for (std::size_t r = 0; r < 4; ++r) u = u + cls.order.vec(r) * Rat(x[r]);
            TorsionMat m = cls.split.reduce(u, level);
            long fs = fix_sharp(m, N);
            acc += fs;
            // units other than +-1 contribute 0 cell by cell
            bool is_pm1 = (u == Quaternion::one() || u == -Quaternion::one());
            if (!is_pm1) {
                for (unsigned n1 = N - 1; n1 <= N; ++n1)
                    for (unsigned n2 = N - 1; n2 <= N; ++n2)
                        if (fix_count(m, n1, n2) != 0)
                            rep.fail_case({{"class", e}, {"unit-cell", true}});
            }
        });
        ++rep.cases_total;
        if (units != 2 * cls.w) rep.fail_case({{"class", e}, {"units", units}});
        ++rep.cases_total;
        if (acc % 2 != 0 || acc / 2 != per_class_target)
            rep.fail_case({{"class", e}, {"sum", acc}, {"target", 2 * per_class_target}});
    }

    // |F_N| = per-class value * mass; must be an integer
    Rat fN = Rat(per_class_target) * cs.mass();
    ++rep.cases_total;
    if (fN.get_den() != 1) rep.fail_case({{"family", rat_str(fN)}});
    rep.data["family_size"] = rat_str(fN);
    rep.data["per_class"] = per_class_target;
    return rep;
}

}  // namespace qv
