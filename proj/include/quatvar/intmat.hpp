#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quatvar/numutil.hpp"

namespace qv {

// Dense matrix over Z (rows of lattice bases, small dimensions).
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Row-style Hermite normal form: returns the canonical basis (zero rows
// dropped) of the row span. Pivots positive, entries above pivots reduced
// into [0, pivot).
IntMat hnf(const IntMat& m);

// Rank of the row span.
std::size_t int_rank(const IntMat& m);

// Solve x * basis = v over Q for a full-row-rank basis; returns false if v
// is not in the Q-span. x has size basis.rows.
bool solve_left(const IntMat& basis, const std::vector<Rat>& v, std::vector<Rat>& x);

// Kernel of the linear map v -> v * mt (right multiplication), restricted
// to integer vectors: returns a basis of {v in Z^rows : v * mt = 0}.
IntMat left_kernel(const IntMat& mt);

}  // namespace qv
