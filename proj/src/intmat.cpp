#include "quatvar/intmat.hpp"

#include <algorithm>

namespace qv {

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

// row_i -= q * row_j
void row_axpy(IntMat& m, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

}  // namespace

IntMat hnf(const IntMat& input) {
    IntMat m = input;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        // Euclidean elimination below the pivot.
        for (;;) {
            std::size_t best = m.rows;
            for (std::size_t r = pivot_row; r < m.rows; ++r) {
                if (m.at(r, col) != 0 &&
                    (best == m.rows || cmp(abs(m.at(r, col)), abs(m.at(best, col))) < 0))
                    best = r;
            }
            if (best == m.rows) break;  // column is zero below pivot_row
            swap_rows(m, pivot_row, best);
            bool clean = true;
            for (std::size_t r = pivot_row + 1; r < m.rows; ++r) {
                if (m.at(r, col) == 0) continue;
                Int q = m.at(r, col) / m.at(pivot_row, col);  // truncated division is fine here
                row_axpy(m, r, pivot_row, q);
                if (m.at(r, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(pivot_row, col) == 0) continue;
        if (m.at(pivot_row, col) < 0)
            for (std::size_t c = 0; c < m.cols; ++c) m.at(pivot_row, c) = -m.at(pivot_row, c);
        // Reduce rows above into [0, pivot).
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(r, col).get_mpz_t(), m.at(pivot_row, col).get_mpz_t());
            row_axpy(m, r, pivot_row, q);
        }
        ++pivot_row;
    }
    IntMat out(pivot_row, m.cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

std::size_t int_rank(const IntMat& m) { return hnf(m).rows; }

bool solve_left(const IntMat& basis, const std::vector<Rat>& v, std::vector<Rat>& x) {
    // Gaussian elimination over Q on the transposed system.
    std::size_t n = basis.rows, d = basis.cols;
    if (v.size() != d) throw std::invalid_argument("solve_left: dimension mismatch");
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rat(basis.at(c, r));
        aug[r][n] = v[r];
    }
    std::vector<std::size_t> pivot_col(d, n);
    std::size_t prow = 0;
    for (std::size_t c = 0; c < n && prow < d; ++c) {
        std::size_t sel = d;
        for (std::size_t r = prow; r < d; ++r)
            if (aug[r][c] != 0) { sel = r; break; }
        if (sel == d) continue;
        std::swap(aug[prow], aug[sel]);
        Rat inv = 1 / aug[prow][c];
        for (auto& e : aug[prow]) e *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == prow || aug[r][c] == 0) continue;
            Rat f = aug[r][c];
            for (std::size_t cc = 0; cc <= n; ++cc) aug[r][cc] -= f * aug[prow][cc];
        }
        pivot_col[prow] = c;
        ++prow;
    }
    for (std::size_t r = prow; r < d; ++r)
        if (aug[r][n] != 0) return false;  // inconsistent: v outside the span
    x.assign(n, Rat(0));
    for (std::size_t r = 0; r < prow; ++r) x[pivot_col[r]] = aug[r][n];
    return true;
}

IntMat left_kernel(const IntMat& mt) {
    // HNF of [mt | I]: rows with vanishing left block carry an exact basis
    // of {v in Z^rows : v * mt = 0} in their right block.
    std::size_t n = mt.rows, d = mt.cols;
    IntMat aug(n, d + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug.at(r, c) = mt.at(r, c);
        aug.at(r, d + r) = 1;
    }
    IntMat h = hnf(aug);
    std::vector<std::size_t> kernel_rows;
    for (std::size_t r = 0; r < h.rows; ++r) {
        bool zero_left = true;
        for (std::size_t c = 0; c < d; ++c)
            if (h.at(r, c) != 0) { zero_left = false; break; }
        if (zero_left) kernel_rows.push_back(r);
    }
    IntMat out(kernel_rows.size(), n);
    for (std::size_t i = 0; i < kernel_rows.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) out.at(i, c) = h.at(kernel_rows[i], d + c);
    return hnf(out);
}

}  // namespace qv
