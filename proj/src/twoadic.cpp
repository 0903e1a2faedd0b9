#include "quatvar/twoadic.hpp"

#include <stdexcept>

namespace qv {

namespace {

constexpr unsigned kMinInternalPrecision = 16;

// rational with odd denominator -> residue mod 2^level
std::uint64_t reduce_rat(const Rat& x, unsigned level) {
    Int mod = pow2(level);
    Int den(x.get_den());
    if (den % 2 == 0) throw std::domain_error("2-adic reduction of a non-integral value");
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible mod 2^level");
    Int r = mod_reduce(Int(x.get_num()) * den_inv, mod);
    return r.get_ui();
}

// 2x2 rational lattices (column spans) for the stabilization step.
struct Lat2 {
    // basis as columns of [[a,b],[c,d]] over a common denominator
    Int a, b, c, d, den;

    static Lat2 standard() { return {1, 0, 0, 1, 1}; }

    bool operator==(const Lat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && den == o.den;
    }
};

// HNF canonicalization of the column span of a list of rational columns.
Lat2 lat2_from_columns(const std::vector<std::array<Rat, 2>>& cols) {
    Int den(1);
    for (const auto& col : cols) {
        den = lcm(den, Int(col[0].get_den()));
        den = lcm(den, Int(col[1].get_den()));
    }
    IntMat rows(cols.size(), 2);
    for (std::size_t r = 0; r < cols.size(); ++r)
        for (int j = 0; j < 2; ++j) {
            Rat scaled = cols[r][j] * Rat(den);
            rows.at(r, j) = Int(scaled.get_num());
        }
    IntMat h = hnf(rows);
    if (h.rows != 2) throw std::logic_error("stable-lattice iteration lost rank");
    // reduce common factor
    Int g = den;
    for (const auto& e : h.a) g = gcd(g, e);
    // HNF rows are the basis vectors; Lat2 keeps them as matrix columns.
    Lat2 out{h.at(0, 0) / g, h.at(1, 0) / g, h.at(0, 1) / g, h.at(1, 1) / g, den / g};
    return out;
}

std::array<Rat, 2> mat_apply(const Mat2Q& m, const std::array<Rat, 2>& v) {
    return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

}  // namespace

Int hensel_sqrt_m23(unsigned M) {
    if (M < 3) throw std::invalid_argument("hensel_sqrt_m23: precision must be >= 3");
    // -23 = 1 mod 8; lift the branch s = 3 (mod 8). If s^2 = a (mod 2^k)
    // then the lift mod 2^{k+1} is s or s + 2^{k-1}.
    Int s = 3;
    for (unsigned k = 3; k < M; ++k) {
        Int mod_next = pow2(k + 1);
        if (mod_reduce(s * s + 23, mod_next) != 0) s += pow2(k - 1);
        if (mod_reduce(s * s + 23, mod_next) != 0)
            throw std::logic_error("hensel lift step failed");
    }
    return mod_reduce(s, pow2(M));
}

TorsionMat TorsionMat::reduced(unsigned lvl) const {
    if (lvl > level) throw std::domain_error("torsion level too low; refuse to extrapolate");
    TorsionMat out;
    out.level = lvl;
    std::uint64_t mask = (lvl >= 64) ? ~0ull : ((1ull << lvl) - 1);
    for (int i = 0; i < 4; ++i) out.m[i] = m[i] & mask;
    return out;
}

TorsionMat TwoAdicSplitting::reduce(const Quaternion& q, unsigned level) const {
    if (level > precision) throw std::domain_error("requested level exceeds splitting precision");
    Mat2Q im = map(q);
    TorsionMat t;
    t.level = level;
    t.m = {reduce_rat(im.a, level), reduce_rat(im.b, level), reduce_rat(im.c, level),
           reduce_rat(im.d, level)};
    return t;
}

TwoAdicSplitting two_adic_split(const QLattice& order, unsigned precision) {
    if (precision < 3) throw std::invalid_argument("two_adic_split: precision must be >= 3");
    unsigned M = std::max(precision, kMinInternalPrecision);
    Int s = hensel_sqrt_m23(M);

    std::array<Mat2Q, 4> img = {
        Mat2Q::identity(),
        Mat2Q{0, -1, 1, 0},
        Mat2Q{Rat(s), 0, 0, Rat(-s)},
        Mat2Q{0, Rat(s), Rat(s), 0},  // k = i j
    };
    auto map0 = [&](const Quaternion& q) {
        return img[0] * q.c[0] + img[1] * q.c[1] + img[2] * q.c[2] + img[3] * q.c[3];
    };

    // Stable lattice: iterate L <- L + sum_b image(b) L over the order
    // basis until stationary, then base-change. A maximal order fixes a
    // lattice, so this terminates; a cap turns non-termination into a
    // loud failure.
    std::vector<Mat2Q> gens;
    for (std::size_t r = 0; r < order.rank(); ++r) gens.push_back(map0(order.vec(r)));

    Lat2 L = Lat2::standard();
    bool stable = false;
    for (int iter = 0; iter < 64 && !stable; ++iter) {
        std::vector<std::array<Rat, 2>> cols;
        std::array<Rat, 2> b0{frac(L.a, L.den), frac(L.c, L.den)};
        std::array<Rat, 2> b1{frac(L.b, L.den), frac(L.d, L.den)};
        cols.push_back(b0);
        cols.push_back(b1);
        for (const auto& g : gens) {
            cols.push_back(mat_apply(g, b0));
            cols.push_back(mat_apply(g, b1));
        }
        Lat2 next = lat2_from_columns(cols);
        stable = (next == L);
        L = next;
    }
    if (!stable) throw std::logic_error("two_adic_split: stable lattice iteration did not converge");

    Mat2Q T{frac(L.a, L.den), frac(L.b, L.den), frac(L.c, L.den), frac(L.d, L.den)};
    Mat2Q Tinv = T.inverse();

    TwoAdicSplitting out;
    out.precision = M;
    out.sqrt_m23 = s;
    for (int i = 0; i < 4; ++i) out.images[i] = Tinv * img[i] * T;

    // Integrality of the order's image mod 2^M.
    for (std::size_t r = 0; r < order.rank(); ++r) (void)out.reduce(order.vec(r), M);
    return out;
}

}  // namespace qv
