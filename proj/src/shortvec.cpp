#include "quatvar/shortvec.hpp"

#include <algorithm>

namespace qv {

std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> short_vectors(const GramSmall& G,
                                                                              std::int64_t bound) {
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
    if (bound < 0) return out;
    if (G.n == 1) {
        // closed form; keeps the generic engine free of the 1-dim corner
        for (std::int64_t x = -bound; x <= bound; ++x) {
            std::int64_t q = G.g[0][0] * x * x / 2;
            if (q <= bound) out.push_back({{x}, q});
        }
    } else {
        enumerate_short(G, bound, [&](const std::int64_t* x, std::int64_t q) {
            out.push_back({std::vector<std::int64_t>(x, x + G.n), q});
        });
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

GramSmall gram_from_rational(const std::vector<std::vector<Rat>>& g2q, Int* scale_out) {
    std::size_t n = g2q.size();
    if (n == 0 || n > 4) throw std::invalid_argument("gram_from_rational: dim must be 1..4");
    Int den(1);
    for (const auto& row : g2q)
        for (const auto& e : row) den = lcm(den, Int(e.get_den()));
    GramSmall G;
    G.n = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = g2q[i][j] * Rat(den);
            Int e(scaled.get_num());
            if (!e.fits_slong_p()) throw std::overflow_error("gram entry too large for enumeration");
            G.g[i][j] = e.get_si();
        }
    if (scale_out) *scale_out = den;
    return G;
}

}  // namespace qv
