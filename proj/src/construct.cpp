#include "kummer/construct.hpp"

#include <stdexcept>

namespace kummer {

std::vector<ExponentVector> standard_basis(const AlgebraShape& shape) {
    std::vector<ExponentVector> basis{zero_vector(shape)};
    for (int k = 0; k < shape.factors; ++k) {
        std::vector<ExponentVector> next;
        for (int j = 0; j < shape.degree; ++j) {
            ExponentVector v = zero_vector(shape);
            v.entries[2 * k] = j;
            v.entries[2 * k + 1] = 1;
            next.push_back(std::move(v));
        }
        for (ExponentVector v : basis) {
            v.entries[2 * k] = (v.entries[2 * k] + 1) % shape.degree;
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return basis;
}

namespace {

void require_arrow_chain(const AlgebraShape& shape,
                         const std::vector<ExponentVector>& chain,
                         const char* what) {
    for (size_t k = 0; k < chain.size(); ++k) check_vector(shape, chain[k]);
    for (size_t k = 0; k < chain.size(); ++k)
        for (size_t j = k + 1; j < chain.size(); ++j)
            if (symplectic_phase(shape, chain[k], chain[j]) != 1)
                throw std::invalid_argument(what);
}

void verify_pair_phases(const AlgebraShape& shape,
                        const std::vector<std::pair<ExponentVector, ExponentVector>>& pairs,
                        int last_pair_phase) {
    const int m = static_cast<int>(pairs.size());
    auto at = [&](int i) -> const ExponentVector& {
        return i % 2 == 0 ? pairs[i / 2].first : pairs[i / 2].second;
    };
    for (int i = 0; i < 2 * m; ++i)
        for (int j = i + 1; j < 2 * m; ++j) {
            const int p = symplectic_phase(shape, at(i), at(j));
            int expected = 0;
            if (j == i + 1 && i % 2 == 0)
                expected = (i / 2 == m - 1) ? last_pair_phase : 1;
            if (p != expected)
                throw std::logic_error("decomposition postcondition failed");
        }
}

}  // namespace

std::vector<std::pair<ExponentVector, ExponentVector>> decompose_even_chain(
    const AlgebraShape& shape, const std::vector<ExponentVector>& chain) {
    if (chain.empty() || chain.size() % 2 != 0)
        throw std::invalid_argument("invalid chain: length must be even and positive");
    require_arrow_chain(shape, chain, "invalid chain: all edges must be arrows");

    const int m = static_cast<int>(chain.size()) / 2;
    std::vector<std::pair<ExponentVector, ExponentVector>> pairs;
    std::vector<std::pair<int, ExponentVector>> prefix;  // v_1 v_2^{-1} v_3 v_4^{-1} ...
    for (int j = 1; j <= m; ++j) {
        auto p = prefix, q = prefix;
        p.emplace_back(1, chain[2 * j - 2]);
        q.emplace_back(1, chain[2 * j - 1]);
        pairs.emplace_back(combine(shape, p), combine(shape, q));
        prefix.emplace_back(1, chain[2 * j - 2]);
        prefix.emplace_back(-1, chain[2 * j - 1]);
    }
    verify_pair_phases(shape, pairs, 1);
    return pairs;
}

std::vector<std::pair<ExponentVector, ExponentVector>> decompose_chain_with_partner(
    const AlgebraShape& shape, const std::vector<ExponentVector>& chain,
    const ExponentVector& partner, int r) {
    if (shape.degree != 4)
        throw std::invalid_argument("invalid hypothesis: requires d=4");
    if (chain.empty() || chain.size() % 2 != 1)
        throw std::invalid_argument("invalid hypothesis: chain length must be odd");
    if (r < 1 || r > static_cast<int>(chain.size()) || r % 2 != 1)
        throw std::invalid_argument("invalid hypothesis: r must be odd and in range");
    require_arrow_chain(shape, chain, "invalid hypothesis: chain edges must be arrows");
    check_vector(shape, partner);
    for (int k = 1; k <= static_cast<int>(chain.size()); ++k) {
        const int p = symplectic_phase(shape, chain[k - 1], partner);
        const int expected = k < r ? 1 : (k == r ? 2 : 3);
        if (p != expected)
            throw std::invalid_argument(
                "invalid hypothesis: partner phase " + std::to_string(p) +
                " at chain position " + std::to_string(k));
    }

    const int n = (static_cast<int>(chain.size()) - 1) / 2;
    const int ell = (r - 1) / 2;
    auto v = [&](int k) -> const ExponentVector& { return chain[k - 1]; };

    std::vector<std::pair<ExponentVector, ExponentVector>> pairs;
    for (int j = 1; j <= n + 1; ++j) {
        std::vector<std::pair<int, ExponentVector>> base;
        if (j <= ell) {
            for (int k = 1; k <= j - 1; ++k) {
                base.emplace_back(1, v(2 * k - 1));
                base.emplace_back(-1, v(2 * k));
            }
            auto mu = base, eta = base;
            mu.emplace_back(1, v(2 * j - 1));
            eta.emplace_back(1, v(2 * j));
            pairs.emplace_back(combine(shape, mu), combine(shape, eta));
        } else if (j <= n) {
            for (int k = 1; k <= ell; ++k) {
                base.emplace_back(1, v(2 * k - 1));
                base.emplace_back(-1, v(2 * k));
            }
            for (int k = ell + 1; k <= j - 1; ++k) {
                base.emplace_back(1, v(2 * k));
                base.emplace_back(-1, v(2 * k + 1));
            }
            auto mu = base, eta = base;
            mu.emplace_back(1, v(2 * j));
            eta.emplace_back(1, v(2 * j + 1));
            pairs.emplace_back(combine(shape, mu), combine(shape, eta));
        } else {
            for (int k = 1; k <= ell; ++k) {
                base.emplace_back(1, v(2 * k - 1));
                base.emplace_back(-1, v(2 * k));
            }
            for (int k = ell + 1; k <= n; ++k) {
                base.emplace_back(-1, v(2 * k));
                base.emplace_back(1, v(2 * k + 1));
            }
            auto mu = base, eta = base;
            mu.emplace_back(1, v(r));
            eta.emplace_back(1, partner);
            pairs.emplace_back(combine(shape, mu), combine(shape, eta));
        }
    }
    verify_pair_phases(shape, pairs, 2);
    return pairs;
}

}  // namespace kummer
