#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "quatvar/treefix.hpp"

using namespace qv;

namespace {

const ClassSet& CS() {
    static ClassSet cs = build_class_set();
    return cs;
}

using Vec = std::pair<std::uint64_t, std::uint64_t>;
using Grp = std::set<Vec>;

// literal oracle: all cyclic subgroups of (Z/2^L)^2 of order 2^N as element sets
std::vector<Grp> all_cyclic_subgroups(unsigned L, unsigned N) {
    std::uint64_t q = 1ull << L;
    std::set<Grp> seen;
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) {
            // order of (a,b) in (Z/2^L)^2
            std::uint64_t g = std::min(a ? (a & -a) : q, b ? (b & -b) : q);
            std::uint64_t order = q / std::min(g, q);
            if (order != (1ull << N)) continue;
            Grp grp;
            for (std::uint64_t k = 0; k < order; ++k) grp.insert({k * a % q, k * b % q});
            seen.insert(grp);
        }
    return {seen.begin(), seen.end()};
}

long fix_oracle(const TorsionMat& alpha, unsigned L, unsigned N1, unsigned N2) {
    TorsionMat a = alpha.reduced(L);
    std::uint64_t q = 1ull << L;
    auto stable = [&](const Grp& grp) {
        for (const auto& [x, y] : grp) {
            Vec im{(a.m[0] * x + a.m[1] * y) % q, (a.m[2] * x + a.m[3] * y) % q};
            if (!grp.count(im)) return false;
        }
        return true;
    };
    auto g1 = all_cyclic_subgroups(L, N1), g2 = all_cyclic_subgroups(L, N2);
    long cnt = 0;
    for (const auto& s1 : g1) {
        if (!stable(s1)) continue;
        for (const auto& s2 : g2) {
            if (!stable(s2)) continue;
            Grp inter;
            for (const auto& v : s1)
                if (s2.count(v)) inter.insert(v);
            if (inter.size() == 1) ++cnt;  // only {0}
        }
    }
    return cnt;
}

TorsionMat make_mat(unsigned level, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                    std::uint64_t d) {
    std::uint64_t mask = (1ull << level) - 1;
    return TorsionMat{level, {a & mask, b & mask, c & mask, d & mask}};
}

TorsionMat identity_mat(unsigned level) { return make_mat(level, 1, 0, 0, 1); }

}  // namespace

TEST_CASE("pair space sizes and identity counts") {
    CHECK(fix_count(identity_mat(4), 1, 1) == 6);
    CHECK(fix_count(identity_mat(4), 2, 2) == 24);
    for (unsigned N = 1; N <= 5; ++N)
        CHECK(pair_space_size(N, N) == 3L << (2 * N - 1));
    for (unsigned N1 = 1; N1 <= 3; ++N1)
        for (unsigned N2 = 1; N2 <= 3; ++N2)
            CHECK(pair_space_size(N1, N2) == 3L << (N1 + N2 - 1));
    CHECK(pair_space_size(0, 3) == 3L << 2);
    CHECK(pair_space_size(0, 0) == 1);

    // -1 fixes everything too
    TorsionMat minus1 = make_mat(5, ~0ull, 0, 0, ~0ull);
    CHECK(fix_count(minus1, 2, 3) == pair_space_size(2, 3));

    CHECK(fix_sharp(identity_mat(4), 2) == 24 - 12 - 12 + 6);
}

TEST_CASE("fix_count matches the literal subgroup oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        unsigned L = 3;
        TorsionMat a = make_mat(L, rng(), rng(), rng(), rng());
        for (unsigned N1 = 0; N1 <= 3; ++N1)
            for (unsigned N2 = 0; N2 <= 3; ++N2)
                CHECK(fix_count(a, N1, N2) == fix_oracle(a, L, N1, N2));
    }
}

TEST_CASE("level too low is an error, never a truncation") {
    TorsionMat a = identity_mat(2);
    CHECK_THROWS(fix_count(a, 3, 1));
    CHECK_THROWS(fix_count(a, 1, 3));
    CHECK(fix_count(a, 2, 2) == 24);
}

TEST_CASE("conjugation and translation invariance") {
    std::mt19937_64 rng(5);
    unsigned L = 5;
    std::uint64_t q = 1ull << L;
    auto rnd = [&] { return rng() % q; };
    for (int t = 0; t < 30; ++t) {
        TorsionMat a = make_mat(L, rnd(), rnd(), rnd(), rnd());
        // random conjugator with odd determinant
        std::uint64_t g0, g1, g2, g3;
        do {
            g0 = rnd(); g1 = rnd(); g2 = rnd(); g3 = rnd();
        } while ((g0 * g3 - g1 * g2) % 2 == 0);
        // inverse mod 2^L via adjugate / det
        std::uint64_t det = (g0 * g3 - g1 * g2) % q;
        std::uint64_t dinv = 1;
        for (std::uint64_t e = 0; e < L; ++e) dinv = dinv * (2 - det * dinv) % q;  // Newton
        dinv %= q;
        auto mul = [&](std::array<std::uint64_t, 4> A, std::array<std::uint64_t, 4> B) {
            return std::array<std::uint64_t, 4>{(A[0] * B[0] + A[1] * B[2]) % q,
                                                (A[0] * B[1] + A[1] * B[3]) % q,
                                                (A[2] * B[0] + A[3] * B[2]) % q,
                                                (A[2] * B[1] + A[3] * B[3]) % q};
        };
        std::array<std::uint64_t, 4> G{g0 % q, g1 % q, g2 % q, g3 % q};
        std::array<std::uint64_t, 4> Ginv{g3 * dinv % q, (q - g1 % q) * dinv % q,
                                          (q - g2 % q) * dinv % q, g0 * dinv % q};
        auto conj = mul(mul(G, a.m), Ginv);
        TorsionMat ac = make_mat(L, conj[0], conj[1], conj[2], conj[3]);
        for (unsigned N = 1; N <= 3; ++N) {
            CHECK(fix_count(a, N, N) == fix_count(ac, N, N));
            CHECK(fix_count(a, N - 1, N) == fix_count(ac, N - 1, N));
        }
        // translation by integers
        std::uint64_t s = rnd();
        TorsionMat at = make_mat(L, a.m[0] + s, a.m[1], a.m[2], a.m[3] + s);
        for (unsigned N = 1; N <= 3; ++N) CHECK(fix_count(a, N, N) == fix_count(at, N, N));
    }
}

TEST_CASE("scaling law and rank-one vanishing") {
    const ClassSet& cs = CS();
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coef(-5, 5);
    const auto& cls = cs.classes[0];
    int rank1_seen = 0;
    for (int t = 0; t < 400; ++t) {
        Quaternion alpha = Quaternion::zero();
        for (std::size_t r = 0; r < 4; ++r) alpha = alpha + cls.order.vec(r) * Rat(coef(rng));
        TorsionMat m = cls.split.reduce(alpha, 8);
        TorsionMat m2 = make_mat(8, 2 * m.m[0], 2 * m.m[1], 2 * m.m[2], 2 * m.m[3]);
        for (unsigned N = 3; N <= 4; ++N)
            CHECK(fix_sharp(m2, N) == 4 * fix_sharp(m, N - 1));

        // rank 1 mod 2: nonzero, non-invertible, and then Fix# = 0
        std::uint64_t det2 = (m.m[0] * m.m[3] - m.m[1] * m.m[2]) % 2;
        bool nonzero_mod2 = (m.m[0] | m.m[1] | m.m[2] | m.m[3]) & 1;
        if (det2 == 0 && nonzero_mod2) {
            ++rank1_seen;
            for (unsigned N = 2; N <= 4; ++N) CHECK(fix_sharp(m, N) == 0);
        }
    }
    CHECK(rank1_seen > 10);
}

TEST_CASE("eta: zero element and lift independence") {
    const ClassSet& cs = CS();
    for (const auto& cls : cs.classes) {
        auto h0 = eta(cls, Quaternion::zero());
        CHECK(h0 == std::array<int, 3>{1, 1, 1});
    }
    CHECK_THROWS(eta(cs.classes[0], Quaternion::one()));
}

TEST_CASE("triples agree on all residue classes of all classes") {
    Report r = verify_triples_agree(CS());
    CHECK(r.passed());
    CHECK(r.cases_total == 24);
}

TEST_CASE("local pushforward proposition") {
    const ClassSet& cs = CS();
    for (unsigned N : {2u, 3u, 4u}) {
        Report r = verify_local_pushforward(cs, N, 100);
        CHECK(r.passed());
        CHECK(r.cases_total >= 96);
    }

    // anchor cases at N = 2: beta = 0, m = 1 gives 6; a residue with
    // sum chi = -1 gives -2 on both sides
    const auto& cls = cs.classes[0];
    Quaternion alpha = Quaternion::one();
    CHECK(fix_sharp(cls.split.reduce(alpha, 4), 2) == 6);
    bool found_minus = false;
    for (const auto& beta : residue_reps(cls.frame)) {
        auto x = chi(cls.frame, beta);
        if (x[0] + x[1] + x[2] == -1) {
            Quaternion a2 = Quaternion{Rat(1), 0, 0, 0} + beta;
            CHECK(fix_sharp(cls.split.reduce(a2, 4), 2) == -2);
            found_minus = true;
            break;
        }
    }
    CHECK(found_minus);
}

TEST_CASE("mean statistics") {
    const ClassSet& cs = CS();
    Report r2 = mean_statistics(cs, 2);
    CHECK(r2.passed());
    CHECK(r2.data["per_class"] == 6);
    CHECK(r2.data["family_size"] == "11");

    Report r3 = mean_statistics(cs, 3);
    CHECK(r3.passed());
    CHECK(r3.data["per_class"] == 24);
    CHECK(r3.data["family_size"] == "44");

    Report r4 = mean_statistics(cs, 4);
    CHECK(r4.passed());
    CHECK(r4.data["family_size"] == "176");
}
