#include "kummer/kummer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kummer {

void validate_spec(const AlgebraShape& shape, const MultisetSpec& spec) {
    const size_t m = spec.elements.size();
    if (m == 0) throw std::invalid_argument("multiset spec: no elements");
    if (spec.multiplicities.size() != m)
        throw std::invalid_argument("multiset spec: multiplicity count mismatch");
    int total = 0;
    for (int mult : spec.multiplicities) {
        if (mult < 1) throw std::invalid_argument("multiset spec: multiplicity < 1");
        total += mult;
    }
    if (total != shape.degree)
        throw std::invalid_argument("multiset spec: multiplicities must sum to d");
    for (const auto& v : spec.elements) check_vector(shape, v);
    std::set<ExponentVector> seen(spec.elements.begin(), spec.elements.end());
    if (seen.size() != m)
        throw std::invalid_argument("multiset spec: duplicate elements");
}

std::vector<std::vector<int>> compositions(int d, int m) {
    std::vector<std::vector<int>> out;
    if (m < 1 || m > d) return out;
    std::vector<int> cur(m);
    // lexicographic enumeration of positive parts summing to d
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        const int max_here = remaining - (m - 1 - pos);
        for (int v = 1; v <= max_here; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

namespace {

// counts[t] += number of arrangements carrying phase t; returns the counts.
std::vector<long long> arrangement_phase_counts(const AlgebraShape& shape,
                                                const MultisetSpec& spec) {
    const int d = shape.degree;
    const size_t m = spec.elements.size();
    std::vector<std::vector<int>> phase(m, std::vector<int>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j)
                phase[i][j] =
                    symplectic_phase(shape, spec.elements[i], spec.elements[j]);

    std::vector<int> word;
    for (size_t i = 0; i < m; ++i)
        word.insert(word.end(), spec.multiplicities[i], static_cast<int>(i));

    std::vector<long long> counts(d, 0);
    do {
        long long t = 0;
        for (size_t p = 0; p < word.size(); ++p)
            for (size_t q = p + 1; q < word.size(); ++q)
                if (word[p] > word[q]) t += phase[word[p]][word[q]];
        counts[static_cast<size_t>(t % d)] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

}  // namespace

CyclotomicInteger symmetric_coefficient(const AlgebraShape& shape,
                                        const MultisetSpec& spec) {
    validate_spec(shape, spec);
    return CyclotomicInteger::from_root_counts(
        shape.degree, arrangement_phase_counts(shape, spec));
}

bool multiset_condition_holds(const AlgebraShape& shape, const MultisetSpec& spec) {
    validate_spec(shape, spec);
    std::vector<std::pair<ExponentVector, int>> items;
    for (size_t i = 0; i < spec.elements.size(); ++i)
        items.emplace_back(spec.elements[i], spec.multiplicities[i]);
    if (product_exponent(shape, items).is_zero()) return true;
    return symmetric_coefficient(shape, spec).is_zero();
}

namespace {

void validate_basis(const AlgebraShape& shape,
                    const std::vector<ExponentVector>& basis) {
    if (basis.empty()) throw std::invalid_argument("basis must be nonempty");
    for (const auto& v : basis) {
        check_vector(shape, v);
        if (v.is_zero())
            throw std::invalid_argument("scalar monomial (zero vector) in basis");
    }
    std::set<ExponentVector> seen(basis.begin(), basis.end());
    if (seen.size() != basis.size())
        throw std::invalid_argument("duplicate vectors in basis");
}

KummerViolation make_violation(const AlgebraShape& shape, const MultisetSpec& spec) {
    std::vector<std::pair<ExponentVector, int>> items;
    for (size_t i = 0; i < spec.elements.size(); ++i)
        items.emplace_back(spec.elements[i], spec.multiplicities[i]);
    return KummerViolation{spec.elements, spec.multiplicities,
                           symmetric_coefficient(shape, spec),
                           product_exponent(shape, items)};
}

// Enumerates index subsets of {0..n-1} of the given size in lexicographic
// order, calling fn on each; fn returns true to stop.
bool for_each_subset(int n, int size, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    if (size > n) return false;
    while (true) {
        if (fn(idx)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<KummerViolation> is_kummer_set(
    const AlgebraShape& shape, const std::vector<ExponentVector>& basis) {
    validate_basis(shape, basis);
    std::vector<ExponentVector> sorted = basis;
    std::sort(sorted.begin(), sorted.end());

    const int n = static_cast<int>(sorted.size());
    std::optional<KummerViolation> result;
    for (int m = 2; m <= std::min(shape.degree, n); ++m) {
        const auto comps = compositions(shape.degree, m);
        const bool stopped = for_each_subset(n, m, [&](const std::vector<int>& idx) {
            MultisetSpec spec;
            for (int i : idx) spec.elements.push_back(sorted[i]);
            for (const auto& comp : comps) {
                spec.multiplicities = comp;
                if (!multiset_condition_holds(shape, spec)) {
                    result = make_violation(shape, spec);
                    return true;
                }
            }
            return false;
        });
        if (stopped) break;
    }
    return result;
}

std::optional<KummerViolation> extension_violation(
    const AlgebraShape& shape, const std::vector<ExponentVector>& kummer_set,
    const ExponentVector& z) {
    check_vector(shape, z);
    if (z.is_zero()) throw std::invalid_argument("scalar monomial (zero vector)");
    std::vector<ExponentVector> sorted = kummer_set;
    std::sort(sorted.begin(), sorted.end());

    const int n = static_cast<int>(sorted.size());
    std::optional<KummerViolation> result;
    const int max_extra = std::min(shape.degree - 1, n);
    for (int t = 1; t <= max_extra && !result; ++t) {
        const auto comps = compositions(shape.degree, t + 1);
        for_each_subset(n, t, [&](const std::vector<int>& idx) {
            MultisetSpec spec;
            for (int i : idx) spec.elements.push_back(sorted[i]);
            const auto at = std::lower_bound(spec.elements.begin(),
                                             spec.elements.end(), z);
            spec.elements.insert(at, z);
            for (const auto& comp : comps) {
                spec.multiplicities = comp;
                if (!multiset_condition_holds(shape, spec)) {
                    result = make_violation(shape, spec);
                    return true;
                }
            }
            return false;
        });
    }
    return result;
}

std::vector<std::vector<char>> pair_compatibility_table(
    const AlgebraShape& shape, const std::vector<ExponentVector>& candidates) {
    validate_basis(shape, candidates);
    const int n = static_cast<int>(candidates.size());
    std::vector<std::vector<char>> table(n, std::vector<char>(n, 0));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        table[i][i] = 1;
        for (int j = i + 1; j < n; ++j) {
            const bool ok =
                !is_kummer_set(shape, {candidates[i], candidates[j]}).has_value();
            table[i][j] = ok;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) table[i][j] = table[j][i];
    return table;
}

CyclotomicInteger gaussian_binomial(int d, int n, int k, int q_power) {
    if (k < 0 || k > n) return CyclotomicInteger::zero(d);
    const auto q = CyclotomicInteger::root_power(d, q_power);
    // row-by-row Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<CyclotomicInteger> row(1, CyclotomicInteger::from_integer(d, 1));
    for (int r = 1; r <= n; ++r) {
        std::vector<CyclotomicInteger> next;
        next.reserve(r + 1);
        auto qk = CyclotomicInteger::from_integer(d, 1);
        for (int c = 0; c <= r; ++c) {
            auto val = CyclotomicInteger::zero(d);
            if (c > 0) val = val + row[c - 1];
            if (c < r) val = val + qk * row[c];
            next.push_back(val);
            qk = qk * q;
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace kummer
