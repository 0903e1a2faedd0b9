#include "quatvar/classset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qv {

namespace {

// #{x in L : nrd(x)/content = target}
long count_norm(const QLattice& L, const Rat& content, long target) {
    Int scale;
    GramSmall G = gram_from_rational(L.gram(), &scale);
    // values from the engine are scale * nrd(v); we want nrd = target*content
    Rat want = Rat(scale) * Rat(target) * content;
    if (want.get_den() != 1 || !Int(want.get_num()).fits_slong_p())
        throw std::overflow_error("count_norm: target out of range");
    std::int64_t w = Int(want.get_num()).get_si();
    long cnt = 0;
    enumerate_short(G, w, [&](const std::int64_t*, std::int64_t q) {
        if (q == w) ++cnt;
    });
    return cnt;
}

bool ideals_equivalent(const QLattice& I, const QLattice& J) {
    QLattice M = lattice_product_conj(I, J);
    // principal iff some element has nrd equal to the lattice norm
    return count_norm(M, M.norm_content(), 1) > 0;
}

long unit_weight(const QLattice& order) {
    long units = count_norm(order, Rat(1), 1);
    if (units % 2 != 0) throw std::logic_error("unit count must be even");
    return units / 2;
}

std::string hnf_key(const QLattice& L) {
    std::ostringstream os;
    os << lattice_to_json(L);
    return os.str();
}

// The three 2-neighbors of a right R-ideal: preimages of the rank-one
// right R/2R-submodules of I/2I.
std::vector<QLattice> two_neighbors(const QLattice& I, const QLattice& R) {
    // right action of the R-basis on I/2I in I-coordinates
    std::array<std::array<std::uint8_t, 4>, 4> act{};  // act[s][r] = bitmask row
    for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) {
            auto coords = I.coordinates(I.vec(r) * R.vec(s));
            if (!coords) throw std::logic_error("not a right ideal");
            std::uint8_t mask = 0;
            for (int c = 0; c < 4; ++c)
                if (mod_reduce((*coords)[c], 2) == 1) mask |= std::uint8_t(1u << c);
            act[s][r] = mask;
        }
    auto apply = [&](int s, std::uint8_t x) {
        std::uint8_t y = 0;
        for (int r = 0; r < 4; ++r)
            if (x & (1u << r)) y ^= act[s][r];
        return y;
    };

    // enumerate 2-dimensional subspaces of F_2^4 stable under all four maps
    std::set<std::array<std::uint8_t, 3>> seen;
    std::vector<QLattice> out;
    for (std::uint8_t v1 = 1; v1 < 16; ++v1)
        for (std::uint8_t v2 = std::uint8_t(v1 + 1); v2 < 16; ++v2) {
            if (v2 == (v1 ^ v2) || v1 == (v1 ^ v2)) continue;  // dependent
            std::array<std::uint8_t, 3> key{v1, v2, std::uint8_t(v1 ^ v2)};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            auto in_space = [&](std::uint8_t x) {
                return x == 0 || x == key[0] || x == key[1] || x == key[2];
            };
            bool stable = true;
            for (int s = 0; s < 4 && stable; ++s)
                for (int b = 0; b < 2 && stable; ++b)
                    if (!in_space(apply(s, b == 0 ? v1 : v2))) stable = false;
            if (!stable) continue;
            std::vector<Quaternion> gens;
            for (std::size_t r = 0; r < 4; ++r) gens.push_back(I.vec(r) * Rat(2));
            for (std::uint8_t v : {v1, v2}) {
                Quaternion lift = Quaternion::zero();
                for (int r = 0; r < 4; ++r)
                    if (v & (1u << r)) lift = lift + I.vec(r);
                gens.push_back(lift);
            }
            out.push_back(lattice_from_vectors(gens));
        }
    if (out.size() != 3) throw std::logic_error("expected exactly 3 two-neighbors");
    return out;
}

CharFrame build_frame(const QLattice& order, const TwoAdicSplitting& split) {
    // S_E = Z + 2 R_E, then its trace-zero sublattice
    std::vector<Quaternion> sgens = {Quaternion::one()};
    for (std::size_t r = 0; r < order.rank(); ++r) sgens.push_back(order.vec(r) * Rat(2));
    QLattice S = lattice_from_vectors(sgens);

    IntMat tr_col(S.rank(), 1);
    for (std::size_t r = 0; r < S.rank(); ++r) {
        Rat t = S.vec(r).trd() * Rat(S.denom);
        tr_col.at(r, 0) = Int(t.get_num());
    }
    IntMat kern = left_kernel(tr_col);
    if (kern.rows != 3) throw std::logic_error("S_E^0 must have rank 3");

    std::vector<Quaternion> tgens;
    for (std::size_t r = 0; r < 3; ++r) {
        Quaternion v = Quaternion::zero();
        for (std::size_t c = 0; c < S.rank(); ++c) {
            Rat coef(kern.at(r, c));
            v = v + S.vec(c) * coef;
        }
        tgens.push_back(v);
    }
    CharFrame f;
    f.ternary = lattice_from_vectors(tgens);
    f.gram = f.ternary.gram();
    f.ternary_gram = gram_from_rational(f.gram);

    // mod-4 matrix model: images must have shape [[a, 2b],[2c, -a]]
    for (int r = 0; r < 3; ++r) {
        TorsionMat m = split.reduce(f.ternary.vec(r), 2);
        if (m.m[1] % 2 != 0 || m.m[2] % 2 != 0)
            throw std::logic_error("S_E^0 image violates the mod-4 shape");
        if ((m.m[0] + m.m[3]) % 4 != 0)
            throw std::logic_error("S_E^0 image has nonzero trace mod 4");
        f.parity[r] = {int(m.m[0] % 2), int((m.m[1] / 2) % 2), int((m.m[2] / 2) % 2)};
    }
    // (a,b,c) parities of a basis must span F_2^3 (l_E is an isomorphism)
    {
        const auto& p = f.parity;
        int d = p[0][0] * (p[1][1] * p[2][2] ^ p[1][2] * p[2][1]) ^
                p[0][1] * (p[1][0] * p[2][2] ^ p[1][2] * p[2][0]) ^
                p[0][2] * (p[1][0] * p[2][1] ^ p[1][1] * p[2][0]);
        if ((d & 1) == 0) throw std::logic_error("parity frame is singular over F_2");
    }
    return f;
}

}  // namespace

ClassSet build_class_set(unsigned precision) {
    ClassSet cs;
    cs.R = maximal_order();
    const Rat target_mass(11, 6);  // (23-1)/12

    struct Found {
        QLattice ideal, order;
        long w;
    };
    std::vector<Found> found;
    std::deque<QLattice> queue;
    queue.push_back(cs.R.canonical());
    {
        QLattice ord = left_order(queue.front());
        found.push_back({queue.front(), ord, unit_weight(ord)});
    }

    Rat mass(1, found[0].w);
    int safety = 0;
    while (mass != target_mass && !queue.empty()) {
        if (++safety > 64) throw std::logic_error("class walk failed to reach the mass");
        QLattice I = queue.front();
        queue.pop_front();
        for (const auto& J : two_neighbors(I, cs.R)) {
            bool known = false;
            for (const auto& f : found)
                if (ideals_equivalent(J, f.ideal)) { known = true; break; }
            if (known) continue;
            QLattice ord = left_order(J);
            found.push_back({J.canonical(), ord, unit_weight(ord)});
            queue.push_back(J.canonical());
            mass += frac(1, found.back().w);
            if (mass == target_mass) break;
        }
    }
    if (mass != target_mass) throw std::logic_error("mass accounting failed");

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        if (a.w != b.w) return a.w < b.w;
        return hnf_key(a.ideal) < hnf_key(b.ideal);
    });

    for (auto& f : found) {
        ClassRec rec;
        rec.ideal = f.ideal;
        rec.order = f.order;
        rec.w = f.w;
        rec.split = two_adic_split(f.order, precision);
        rec.frame = build_frame(f.order, rec.split);
        rec.order_gram = gram_from_rational(f.order.gram());
        cs.classes.push_back(std::move(rec));
    }
    return cs;
}

std::array<Rat, 3> BrandtMatrix::row_sums() const {
    std::array<Rat, 3> s{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) s[r] += entries[r][c];
    return s;
}

BrandtMatrix BrandtMatrix::operator*(const BrandtMatrix& o) const {
    BrandtMatrix out;
    out.n = n * o.n;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) out.entries[r][c] += entries[r][k] * o.entries[k][c];
    return out;
}

BrandtMatrix brandt(const ClassSet& cs, long n) {
    if (n <= 0) throw std::invalid_argument("brandt: n must be positive");
    if (cs.classes.size() != 3) throw std::logic_error("class set not built");
    BrandtMatrix B;
    B.n = n;
    for (int e = 0; e < 3; ++e)
        for (int f = 0; f < 3; ++f) {
            QLattice M = lattice_product_conj(cs.classes[e].ideal, cs.classes[f].ideal);
            long r = count_norm(M, M.norm_content(), n);
            B.entries[e][f] = frac(r, 2 * cs.classes[f].w);
        }
    return B;
}

AlgNum EigenFns::eigenvalue(const BrandtMatrix& B, int k) const {
    AlgNum lambda;
    bool have = false;
    for (int e = 0; e < 3; ++e) {
        AlgNum dot;
        for (int f = 0; f < 3; ++f) dot = dot + AlgNum(B.entries[e][f]) * psi[k][f];
        if (!have && !psi[k][e].is_zero()) {
            lambda = dot / psi[k][e];
            have = true;
        }
    }
    if (!have) throw std::logic_error("zero eigenvector");
    for (int e = 0; e < 3; ++e) {
        AlgNum dot;
        for (int f = 0; f < 3; ++f) dot = dot + AlgNum(B.entries[e][f]) * psi[k][f];
        if (dot != lambda * psi[k][e]) throw std::logic_error("not an exact eigenvector");
    }
    return lambda;
}

EigenFns eigenfunctions(const ClassSet& cs) {
    BrandtMatrix B = brandt(cs, 2);
    const auto& m = B.entries;

    // characteristic polynomial x^3 + c2 x^2 + c1 x + c0, exactly
    Rat tr = m[0][0] + m[1][1] + m[2][2];
    Rat minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                 m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Rat c2 = -tr, c1 = minors, c0 = -det;

    // divide by (x - 3): the constant function has eigenvalue sigma_1(2) = 3
    Rat q2 = Rat(1);
    Rat q1 = c2 + 3;
    Rat q0 = c1 + 3 * q1;
    Rat rem = c0 + 3 * q0;
    if (rem != 0) throw std::logic_error("3 is not an eigenvalue of B(2)");
    // mean-zero quadratic: x^2 + p x + q
    Rat p = q1 / q2, q = q0 / q2;

    EigenFns out;
    out.quad_p = p;
    out.quad_q = q;
    Rat disc = p * p - 4 * q;
    if (disc <= 0) throw std::logic_error("B(2) spectrum must be real");
    // disc = (fn/den)^2 * dn with dn squarefree; eigenvalues live in Q(sqrt dn)
    Int num(disc.get_num()), den(disc.get_den());
    Int t = num * den;  // disc = t / den^2
    Int fn(1);
    for (Int p2(2); p2 * p2 <= t; ++p2)
        while (t % (p2 * p2) == 0) { t /= p2 * p2; fn *= p2; }
    Int dn = t;
    Rat froot = frac(fn, den);
    AlgNum a2_plus, a2_minus;
    if (dn == 1) {
        a2_plus = AlgNum((-p + froot) / 2);
        a2_minus = AlgNum((-p - froot) / 2);
    } else if (dn == 5) {
        a2_plus = AlgNum(-p / 2, froot / 2);
        a2_minus = AlgNum(-p / 2, -froot / 2);
    } else {
        throw std::logic_error("eigenvalue field is not Q(sqrt 5)");
    }

    // exact kernel vector of (B - a2) over Q(sqrt5)
    auto eigvec = [&](const AlgNum& a2) {
        std::array<std::array<AlgNum, 3>, 3> A;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                A[r][c] = AlgNum(m[r][c]);
                if (r == c) A[r][c] = A[r][c] - a2;
            }
        // eliminate to find a kernel vector
        std::array<AlgNum, 3> v{AlgNum(Rat(0)), AlgNum(Rat(0)), AlgNum(Rat(0))};
        // try cross products of two rows: kernel of a rank-2 matrix
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = r1 + 1; r2 < 3; ++r2) {
                std::array<AlgNum, 3> w{
                    A[r1][1] * A[r2][2] - A[r1][2] * A[r2][1],
                    A[r1][2] * A[r2][0] - A[r1][0] * A[r2][2],
                    A[r1][0] * A[r2][1] - A[r1][1] * A[r2][0],
                };
                if (!w[0].is_zero() || !w[1].is_zero() || !w[2].is_zero()) { v = w; goto done; }
            }
    done:
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
            throw std::logic_error("eigenvector computation failed");
        // canonical scale: clear denominators, divide by content, positive lead
        Int den_all(1);
        for (auto& e : v) {
            den_all = lcm(den_all, Int(e.a.get_den()));
            den_all = lcm(den_all, Int(e.b.get_den()));
        }
        Int content(0);
        for (auto& e : v) {
            e = e * Rat(den_all);
            content = gcd(content, Int(e.a.get_num()));
            content = gcd(content, Int(e.b.get_num()));
        }
        for (auto& e : v) e = e * Rat(Int(1), content);
        for (auto& e : v) {
            if (e.is_zero()) continue;
            if (e.to_double() < 0)
                for (auto& f : v) f = -f;
            break;
        }
        return v;
    };

    out.a2[0] = (a2_plus.b >= 0) ? a2_plus : a2_minus;  // branch with +sqrt5
    out.a2[1] = (a2_plus.b >= 0) ? a2_minus : a2_plus;
    out.psi[0] = eigvec(out.a2[0]);
    for (int e = 0; e < 3; ++e) out.psi[1][e] = out.psi[0][e].conj();
    if (out.a2[1] != out.a2[0].conj()) throw std::logic_error("eigenvalues not conjugate");

    for (int k = 0; k < 2; ++k) {
        AlgNum ns, mean;
        for (int e = 0; e < 3; ++e) {
            ns = ns + out.psi[k][e] * out.psi[k][e] * frac(1, cs.classes[e].w);
            mean = mean + out.psi[k][e] * frac(1, cs.classes[e].w);
        }
        if (!mean.is_zero()) throw std::logic_error("eigenfunction is not mean zero");
        out.norm_sq[k] = ns;
    }
    return out;
}

std::array<int, 3> chi_exponents(const CharFrame& frame, const Quaternion& beta) {
    auto coords = frame.ternary.coordinates(beta);
    if (!coords) throw std::domain_error("beta is not in S_E^0");
    std::array<int, 3> abc{0, 0, 0};
    for (int r = 0; r < 3; ++r) {
        int vr = int(mod_reduce((*coords)[r], 2).get_ui());
        for (int j = 0; j < 3; ++j) abc[j] ^= vr & frame.parity[r][j];
    }
    return abc;
}

std::array<int, 3> chi(const CharFrame& frame, const Quaternion& beta) {
    auto abc = chi_exponents(frame, beta);
    auto sgn_of = [](int e) { return e ? -1 : 1; };
    return {sgn_of(abc[1] ^ abc[2]), sgn_of(abc[0] ^ abc[2]), sgn_of(abc[0] ^ abc[1])};
}

}  // namespace qv
