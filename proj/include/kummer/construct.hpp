#ifndef KUMMER_CONSTRUCT_HPP
#define KUMMER_CONSTRUCT_HPP

#include <utility>
#include <vector>

#include "kummer/core.hpp"

namespace kummer {

// The dn+1 monomial basis of the recursive construction
// V_k = F[x_k] y_k + V_{k-1} x_k, V_0 = F.
std::vector<ExponentVector> standard_basis(const AlgebraShape& shape);

// Generator pairs of the tensor decomposition of an arrow chain of even
// length 2m: (v_1, v_2), (v_1 v_2^{-1} v_3, v_1 v_2^{-1} v_4), ...
// Each returned pair has internal phase 1 and commutes with every other
// pair; the postcondition is verified before returning.
std::vector<std::pair<ExponentVector, ExponentVector>> decompose_even_chain(
    const AlgebraShape& shape, const std::vector<ExponentVector>& chain);

// Generator pairs (mu_j, eta_j) for an arrow chain v_1..v_{2n+1} with a
// partner w anti-commuting with v_r (r odd) and arrow-connected to the rest.
// Pairs 1..n have internal phase 1, the last pair phase 2, all cross phases
// vanish; d=4 only.  Postconditions are verified before returning.
std::vector<std::pair<ExponentVector, ExponentVector>> decompose_chain_with_partner(
    const AlgebraShape& shape, const std::vector<ExponentVector>& chain,
    const ExponentVector& partner, int r);

}  // namespace kummer

#endif
