#pragma once

#include <cstdint>
#include <vector>

#include "quatvar/classset.hpp"
#include "quatvar/report.hpp"

namespace qv {

// Number of ordered pairs of independent cyclic subgroups of orders
// 2^N1, 2^N2 preserved by the action matrix. Level of `alpha` must cover
// max(N1, N2); lower levels are an error, never a silent truncation.
long fix_count(const TorsionMat& alpha, unsigned N1, unsigned N2);

// Fix_{N,N} - Fix_{N-1,N} - Fix_{N,N-1} + Fix_{N-1,N-1}
long fix_sharp(const TorsionMat& alpha, unsigned N);

// |L_{N1,N2}|: fix_count of the identity.
long pair_space_size(unsigned N1, unsigned N2);

// eta_i(beta): +1 iff an auxiliary odd-norm lift of beta fixes the children
// of the i-th child of the origin (i = 1,2,3 ordered by generators
// (1,1), (1,0), (0,1) of E[2]).
std::array<int, 3> eta(const ClassRec& cls, const Quaternion& beta);

// chi_i == eta_j * eta_k on all of S^0/2S^0, all classes; also checks
// independence of the auxiliary lift.
Report verify_triples_agree(const ClassSet& cs);

// Local pushforward: Fix#_{N,N}(m + 2^{N-2} beta) =
// 2^{2N-3} * sum_i chi_i(beta) exactly, plus support vanishing on
// `samples` random alpha outside Z + 2^{N-2} S^0.
Report verify_local_pushforward(const ClassSet& cs, unsigned N, int samples = 500);

// Mean statistics: the per-class unit sums are class-independent and equal
// 3*2^(2N-3), giving |F_N| = 3*2^(2N-3) * 11/6.
Report mean_statistics(const ClassSet& cs, unsigned N);

// Representatives of S_E^0 / 2 S_E^0 (coefficients 0/1 in the frame basis).
std::vector<Quaternion> residue_reps(const CharFrame& frame);

}  // namespace qv
