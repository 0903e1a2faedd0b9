#include "quatvar/qlattice.hpp"

#include <sstream>

namespace qv {

std::vector<std::vector<Rat>> QLattice::gram() const {
    std::size_t n = rank();
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
    std::vector<Quaternion> b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = vec(r);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            g[r][c] = trace_pairing(b[r], b[c]);
            g[c][r] = g[r][c];
        }
    return g;
}

QLattice QLattice::canonical() const {
    IntMat h = hnf(basis);
    // Reduce the denominator by the gcd of all entries and the denominator.
    Int g = denom;
    for (const auto& e : h.a) g = gcd(g, e);
    if (g > 1) {
        for (auto& e : h.a) e /= g;
        return QLattice(std::move(h), denom / g);
    }
    return QLattice(std::move(h), denom);
}

bool QLattice::contains(const Quaternion& x) const { return coordinates(x).has_value(); }

std::optional<std::vector<Int>> QLattice::coordinates(const Quaternion& x) const {
    std::vector<Rat> v(4);
    for (int c = 0; c < 4; ++c) v[c] = x.c[c] * Rat(denom);
    std::vector<Rat> sol;
    if (!solve_left(basis, v, sol)) return std::nullopt;
    std::vector<Int> out(sol.size());
    for (std::size_t r = 0; r < sol.size(); ++r) {
        if (sol[r].get_den() != 1) return std::nullopt;
        out[r] = Int(sol[r].get_num());
    }
    return out;
}

Rat QLattice::norm_content() const {
    // content of the quadratic form nrd restricted to the lattice:
    // gcd of { nrd(b_r) } and { <b_r, b_c> } for r < c.
    auto g = gram();
    Rat content(0);
    auto gcd_rat = [](const Rat& a, const Rat& b) {
        Int num = gcd(Int(a.get_num()), Int(b.get_num()));
        Int den = lcm(Int(a.get_den()), Int(b.get_den()));
        return frac(num, den);
    };
    for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = r; c < g.size(); ++c) {
            Rat v = (r == c) ? g[r][c] / 2 : g[r][c];
            content = (content == 0) ? abs(v) : gcd_rat(content, abs(v));
        }
    return content;
}

bool QLattice::operator==(const QLattice& o) const {
    QLattice a = canonical(), b = o.canonical();
    return a.denom == b.denom && a.basis == b.basis;
}

QLattice lattice_from_vectors(const std::vector<Quaternion>& gens) {
    Int den(1);
    for (const auto& q : gens)
        for (const auto& c : q.c) den = lcm(den, Int(c.get_den()));
    IntMat m(gens.size(), 4);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (int c = 0; c < 4; ++c) {
            Rat scaled = gens[r].c[c] * Rat(den);
            m.at(r, c) = Int(scaled.get_num());
        }
    return QLattice(hnf(m), den).canonical();
}

QLattice lattice_product_conj(const QLattice& I, const QLattice& J) {
    std::vector<Quaternion> prods;
    prods.reserve(I.rank() * J.rank());
    for (std::size_t r = 0; r < I.rank(); ++r)
        for (std::size_t c = 0; c < J.rank(); ++c) prods.push_back(I.vec(r) * J.vec(c).conj());
    return lattice_from_vectors(prods);
}

QLattice left_order(const QLattice& I) {
    QLattice prod = lattice_product_conj(I, I);
    Rat n = I.norm_content();
    std::vector<Quaternion> scaled;
    for (std::size_t r = 0; r < prod.rank(); ++r) scaled.push_back(prod.vec(r) * (1 / n));
    return lattice_from_vectors(scaled);
}

QLattice maximal_order() {
    std::vector<Quaternion> gens = {
        Quaternion::one(),
        Quaternion::unit_i(),
        {0, frac(1, 2), frac(1, 2), 0},  // (i+j)/2
        {frac(1, 2), 0, 0, frac(1, 2)},  // (1+k)/2
    };
    return lattice_from_vectors(gens);
}

std::string lattice_to_json(const QLattice& L) {
    QLattice c = L.canonical();
    std::ostringstream os;
    os << "{\"denominator\":" << c.denom.get_str() << ",\"basis\":[";
    for (std::size_t r = 0; r < c.rank(); ++r) {
        os << (r ? ",[" : "[");
        for (int j = 0; j < 4; ++j) os << (j ? "," : "") << c.basis.at(r, j).get_str();
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace qv
