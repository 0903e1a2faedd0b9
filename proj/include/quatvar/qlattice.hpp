#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatvar/intmat.hpp"
#include "quatvar/quaternion.hpp"

namespace qv {

// Full-rank Z-lattice in B, basis rows as integer coordinates over the
// fixed basis {1, i, j, k} with a common positive denominator.
struct QLattice {
    IntMat basis;  // rank x 4
    Int denom{1};

    QLattice() = default;
    QLattice(IntMat b, Int d) : basis(std::move(b)), denom(std::move(d)) {}

    std::size_t rank() const { return basis.rows; }

    Quaternion vec(std::size_t r) const {
        return {frac(basis.at(r, 0), denom), frac(basis.at(r, 1), denom), frac(basis.at(r, 2), denom),
                frac(basis.at(r, 3), denom)};
    }

    // Gram of the trace pairing <x,y> = trd(x conj(y)); diag = 2 nrd.
    std::vector<std::vector<Rat>> gram() const;

    // Canonical form: HNF basis, denominator reduced to the minimal one.
    QLattice canonical() const;

    bool contains(const Quaternion& x) const;

    // Exact coordinates of x in this basis; nullopt if x is not in the
    // lattice (rational but non-integral coordinates included).
    std::optional<std::vector<Int>> coordinates(const Quaternion& x) const;

    // gcd of the values of nrd on the lattice (the reduced norm for ideals).
    Rat norm_content() const;

    bool operator==(const QLattice& o) const;
};

QLattice lattice_from_vectors(const std::vector<Quaternion>& gens);

// Z-span of {x * conj(y)} over basis pairs: the product lattice I * conj(J).
QLattice lattice_product_conj(const QLattice& I, const QLattice& J);

// Left order O_l(I) = (I * conj(I)) / nrd(I) for an ideal of a maximal order.
QLattice left_order(const QLattice& I);

// The maximal order R with Z-basis {1, i, (i+j)/2, (1+k)/2}.
QLattice maximal_order();

std::string lattice_to_json(const QLattice& L);

}  // namespace qv
