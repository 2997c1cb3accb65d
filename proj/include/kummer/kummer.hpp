#ifndef KUMMER_KUMMER_HPP
#define KUMMER_KUMMER_HPP

#include <optional>
#include <vector>

#include "kummer/core.hpp"
#include "kummer/cyclotomic.hpp"

namespace kummer {

// A multiset v_1^{d_1} ... v_m^{d_m} with distinct elements, positive
// multiplicities and total degree d.
struct MultisetSpec {
    std::vector<ExponentVector> elements;
    std::vector<int> multiplicities;
};

void validate_spec(const AlgebraShape& shape, const MultisetSpec& spec);

// Self-verifying certificate that a set is not Kummer: the symmetric-product
// coefficient c of the listed multiset is nonzero and so is its exponent.
struct KummerViolation {
    std::vector<ExponentVector> subset;
    std::vector<int> multiplicities;
    CyclotomicInteger coefficient;
    ExponentVector exponent;
};

// All tuples of m positive integers summing to d, lexicographic.
// Count = C(d-1, m-1); empty when m > d.
std::vector<std::vector<int>> compositions(int d, int m);

// The coefficient c with v_1^{d_1} * ... * v_m^{d_m} = c * v_1^{d_1}...v_m^{d_m}:
// sum over all distinct arrangements w of rho^{phi(w)}, where phi(w) counts
// phase contributions of out-of-order letter pairs relative to the listing
// order of spec.elements.
CyclotomicInteger symmetric_coefficient(const AlgebraShape& shape,
                                        const MultisetSpec& spec);

// True iff c = 0 or the product exponent vanishes mod d.
bool multiset_condition_holds(const AlgebraShape& shape, const MultisetSpec& spec);

// Checks every subset of size 2..d of B against every positive composition of
// d.  Returns the lexicographically first violation, or nullopt when B spans a
// Kummer space.  B must consist of distinct nonzero vectors.
std::optional<KummerViolation> is_kummer_set(const AlgebraShape& shape,
                                             const std::vector<ExponentVector>& basis);

// Incremental variant: given S already Kummer, only multisets containing z
// are enumerated.  Sound by heredity of the Kummer property.
std::optional<KummerViolation> extension_violation(
    const AlgebraShape& shape, const std::vector<ExponentVector>& kummer_set,
    const ExponentVector& z);

// Entry (i,j): the pair {candidates[i], candidates[j]} is a Kummer set.
// Diagonal entries are true.  Rows are built in parallel.
std::vector<std::vector<char>> pair_compatibility_table(
    const AlgebraShape& shape, const std::vector<ExponentVector>& candidates);

// Gaussian binomial [n choose k]_q via the recurrence
// [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q, with q = zeta_d^{q_power}.
// Independent route for the pair case of symmetric_coefficient.
CyclotomicInteger gaussian_binomial(int d, int n, int k, int q_power);

}  // namespace kummer

#endif
