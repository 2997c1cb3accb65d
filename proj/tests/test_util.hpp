#ifndef KUMMER_TEST_UTIL_HPP
#define KUMMER_TEST_UTIL_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "kummer/core.hpp"
#include "kummer/search.hpp"

namespace kummer::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline ExponentVector random_nonzero(const AlgebraShape& shape) {
    std::uniform_int_distribution<int> dist(0, shape.degree - 1);
    while (true) {
        ExponentVector v(std::vector<int>(shape.vector_length(), 0));
        for (auto& e : v.entries) e = dist(rng());
        if (!v.is_zero()) return v;
    }
}

// Product of k random transvections, applied elementwise; phase-preserving.
inline std::vector<ExponentVector> random_symplectic_image(
    const AlgebraShape& shape, std::vector<ExponentVector> vectors, int k = 6) {
    for (int i = 0; i < k; ++i) {
        const auto center = random_nonzero(shape);
        for (auto& v : vectors) v = transvect(shape, v, center);
    }
    return vectors;
}

// Random chain v_1..v_len with phase(v_k, v_j) = 1 for all k < j, built by
// filtering the full candidate list at each step.  Throws after too many
// restarts (should not happen for the lengths used in tests).
inline std::vector<ExponentVector> random_arrow_chain(const AlgebraShape& shape,
                                                      int len) {
    const auto cands = all_nonzero_vectors(shape);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<ExponentVector> chain;
        while (static_cast<int>(chain.size()) < len) {
            std::vector<const ExponentVector*> options;
            for (const auto& c : cands) {
                if (std::find(chain.begin(), chain.end(), c) != chain.end())
                    continue;
                bool ok = true;
                for (const auto& prev : chain)
                    if (symplectic_phase(shape, prev, c) != 1) {
                        ok = false;
                        break;
                    }
                if (ok) options.push_back(&c);
            }
            if (options.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
            chain.push_back(*options[pick(rng())]);
        }
        if (static_cast<int>(chain.size()) == len) return chain;
    }
    throw std::runtime_error("random_arrow_chain: no chain found");
}

struct PartnerHypothesis {
    std::vector<ExponentVector> chain;  // length 2m+1
    ExponentVector partner;
    int r;  // odd
};

// Random valid hypothesis for the chain-with-partner decomposition:
// odd chain, partner anti-commuting with v_r and arrow-connected elsewhere.
inline PartnerHypothesis random_partner_hypothesis(const AlgebraShape& shape,
                                                   int chain_len) {
    const auto cands = all_nonzero_vectors(shape);
    for (int attempt = 0; attempt < 500; ++attempt) {
        auto chain = random_arrow_chain(shape, chain_len);
        std::vector<int> odd_positions;
        for (int r = 1; r <= chain_len; r += 2) odd_positions.push_back(r);
        std::shuffle(odd_positions.begin(), odd_positions.end(), rng());
        for (int r : odd_positions) {
            std::vector<const ExponentVector*> options;
            for (const auto& c : cands) {
                if (std::find(chain.begin(), chain.end(), c) != chain.end())
                    continue;
                bool ok = true;
                for (int k = 1; k <= chain_len && ok; ++k) {
                    const int p = symplectic_phase(shape, chain[k - 1], c);
                    const int expected = k < r ? 1 : (k == r ? 2 : 3);
                    ok = p == expected;
                }
                if (ok) options.push_back(&c);
            }
            if (options.empty()) continue;
            std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
            return PartnerHypothesis{chain, *options[pick(rng())], r};
        }
    }
    throw std::runtime_error("random_partner_hypothesis: none found");
}

}  // namespace kummer::testutil

#endif
