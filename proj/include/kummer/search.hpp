#ifndef KUMMER_SEARCH_HPP
#define KUMMER_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kummer/core.hpp"

namespace kummer {

struct SearchConfig {
    bool use_symmetry = true;
    bool deterministic = false;   // single-threaded, bit-identical runs
    std::optional<double> time_budget_seconds;
    std::optional<int> target;    // stop early once a set of this size is found
    int threads = 0;              // 0 = OpenMP default
};

struct SearchResult {
    int max_size = 0;
    std::vector<ExponentVector> witness;
    std::uint64_t explored_nodes = 0;
    double elapsed_seconds = 0.0;
    bool complete = false;
};

// All nonzero exponent vectors for the shape, lexicographically sorted.
std::vector<ExponentVector> all_nonzero_vectors(const AlgebraShape& shape);

// Depth-first enumeration over all subsets with only the hereditary prune.
// Exact but slow; serves as the independent oracle for the pruned search.
// Requires d^{2n} - 1 <= 255.
SearchResult brute_force_oracle(const AlgebraShape& shape);

// Branch-and-bound maximal Kummer set search.  Starts from the standard
// basis as incumbent, prunes on pairwise compatibility counts, optionally
// restricts the first element to symplectic orbit representatives, and
// re-certifies the witness before returning.
SearchResult max_kummer_dimension(const AlgebraShape& shape,
                                  const SearchConfig& config = {});

// One representative (the lexicographically least element) per orbit of
// nonzero vectors under the group generated by symplectic transvections,
// computed by exact orbit closure.
std::vector<ExponentVector> symmetry_representatives(const AlgebraShape& shape);

// Orbit partition behind symmetry_representatives; each orbit is sorted and
// orbits are ordered by their least element.
std::vector<std::vector<ExponentVector>> symplectic_orbits(const AlgebraShape& shape);

// All inclusion-maximal Kummer sets, each certified by is_kummer_set.
// n=1 only.
std::vector<std::vector<ExponentVector>> enumerate_maximal_sets(
    const AlgebraShape& shape);

}  // namespace kummer

#endif
