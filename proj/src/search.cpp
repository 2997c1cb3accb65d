#include "kummer/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kummer/construct.hpp"
#include "kummer/cyclotomic.hpp"
#include "kummer/kummer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kummer {

namespace {

using Clock = std::chrono::steady_clock;

struct Bitset {
    std::vector<std::uint64_t> w;

    explicit Bitset(int n) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void and_with(const Bitset& o) {
        for (size_t b = 0; b < w.size(); ++b) w[b] &= o.w[b];
    }
    int count_from(int from) const {
        int total = 0;
        size_t b = static_cast<size_t>(from) >> 6;
        if (b >= w.size()) return 0;
        std::uint64_t first = w[b] & (~std::uint64_t{0} << (from & 63));
        total += std::popcount(first);
        for (++b; b < w.size(); ++b) total += std::popcount(w[b]);
        return total;
    }
    int next(int from) const {  // first set bit >= from, or -1
        size_t b = static_cast<size_t>(from) >> 6;
        if (b >= w.size()) return -1;
        std::uint64_t cur = w[b] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(b * 64 + std::countr_zero(cur));
            if (++b >= w.size()) return -1;
            cur = w[b];
        }
    }
};

// Index-based incremental Kummer checking over a fixed candidate table.
// Phases and root-of-unity reductions are precomputed once; the per-node
// check allocates nothing.
struct SearchContext {
    AlgebraShape shape;
    int d, vlen, count;
    std::vector<ExponentVector> cands;
    std::vector<signed char> phase;                    // count x count
    std::vector<std::vector<std::vector<int>>> comps;  // comps[m], m parts
    std::vector<std::vector<long long>> root_red;      // d rows of deg(Phi) coeffs
    int phi_deg;

    explicit SearchContext(const AlgebraShape& s)
        : shape(s), d(s.degree), vlen(s.vector_length()) {
        cands = all_nonzero_vectors(shape);
        count = static_cast<int>(cands.size());
        phase.assign(static_cast<size_t>(count) * count, 0);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                phase[static_cast<size_t>(i) * count + j] = static_cast<signed char>(
                    symplectic_phase(shape, cands[i], cands[j]));
        comps.resize(d + 1);
        for (int m = 1; m <= d; ++m) comps[m] = compositions(d, m);
        phi_deg = static_cast<int>(cyclotomic_polynomial(d).size()) - 1;
        for (int t = 0; t < d; ++t)
            root_red.push_back(CyclotomicInteger::root_power(d, t).coeffs());
    }

    int ph(int i, int j) const { return phase[static_cast<size_t>(i) * count + j]; }

    // c != 0 for the multiset over candidate indices idx with the given
    // multiplicities (zero-ness is independent of listing order).
    bool coefficient_nonzero(const int* idx, const int* mult, int m) const {
        signed char word[16];
        int len = 0;
        for (int j = 0; j < m; ++j)
            for (int r = 0; r < mult[j]; ++r) word[len++] = static_cast<signed char>(j);
        long long counts[16] = {0};
        do {
            int t = 0;
            for (int p = 0; p < len; ++p)
                for (int q = p + 1; q < len; ++q)
                    if (word[p] > word[q]) t += ph(idx[word[p]], idx[word[q]]);
            counts[t % d] += 1;
        } while (std::next_permutation(word, word + len));
        for (int c = 0; c < phi_deg; ++c) {
            long long acc = 0;
            for (int t = 0; t < d; ++t) acc += counts[t] * root_red[t][c];
            if (acc != 0) return true;
        }
        return false;
    }

    bool multiset_ok(const int* idx, const int* mult, int m) const {
        bool exp_zero = true;
        for (int c = 0; c < vlen && exp_zero; ++c) {
            int acc = 0;
            for (int j = 0; j < m; ++j) acc += mult[j] * cands[idx[j]].entries[c];
            if (acc % d != 0) exp_zero = false;
        }
        if (exp_zero) return true;
        return !coefficient_nonzero(idx, mult, m);
    }

    // S already Kummer (as sorted candidate indices); checks S + {z} by
    // enumerating only multisets containing z.
    bool extension_ok(const std::vector<int>& s, int z) const {
        const int n = static_cast<int>(s.size());
        const int max_extra = std::min(d - 1, n);
        int pick[16], merged[16];
        for (int t = 1; t <= max_extra; ++t) {
            for (int i = 0; i < t; ++i) pick[i] = i;
            while (true) {
                int m = 0;
                bool placed = false;
                for (int i = 0; i < t; ++i) {
                    if (!placed && z < s[pick[i]]) {
                        merged[m++] = z;
                        placed = true;
                    }
                    merged[m++] = s[pick[i]];
                }
                if (!placed) merged[m++] = z;
                for (const auto& comp : comps[t + 1])
                    if (!multiset_ok(merged, comp.data(), t + 1)) return false;
                int i = t - 1;
                while (i >= 0 && pick[i] == n - t + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }
};

struct SharedState {
    std::atomic<int> best{0};
    std::vector<int> witness;
    std::mutex witness_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::optional<Clock::time_point> deadline;
    std::optional<int> target;
    bool timed_out = false;

    void offer(const std::vector<int>& s) {
        const int size = static_cast<int>(s.size());
        int cur = best.load();
        while (size > cur) {
            if (best.compare_exchange_weak(cur, size)) {
                std::lock_guard<std::mutex> lock(witness_mutex);
                if (size > static_cast<int>(witness.size())) witness = s;
                break;
            }
        }
        if (target && best.load() >= *target) stop.store(true);
    }
};

struct Worker {
    const SearchContext& ctx;
    const std::vector<Bitset>& compat;
    SharedState& shared;
    std::uint64_t local_nodes = 0;

    bool should_stop() {
        if ((local_nodes & 1023) == 0) {
            if (shared.stop.load(std::memory_order_relaxed)) return true;
            if (shared.deadline && Clock::now() > *shared.deadline) {
                shared.timed_out = true;
                shared.stop.store(true);
                return true;
            }
        }
        return shared.stop.load(std::memory_order_relaxed);
    }

    void dfs(std::vector<int>& s, const Bitset& allowed, int next_min) {
        ++local_nodes;
        if (should_stop()) return;
        if (static_cast<int>(s.size()) + allowed.count_from(next_min) <=
            shared.best.load(std::memory_order_relaxed))
            return;
        for (int z = allowed.next(next_min); z >= 0; z = allowed.next(z + 1)) {
            if (should_stop()) return;
            if (!ctx.extension_ok(s, z)) continue;
            auto pos = std::lower_bound(s.begin(), s.end(), z);
            s.insert(pos, z);
            if (static_cast<int>(s.size()) > shared.best.load()) shared.offer(s);
            Bitset sub = allowed;
            sub.and_with(compat[z]);
            sub.clear(z);
            dfs(s, sub, z + 1);
            s.erase(std::find(s.begin(), s.end(), z));
        }
    }
};

SearchResult finish(const SearchContext& ctx, SharedState& shared,
                    Clock::time_point start, bool stopped_early) {
    SearchResult result;
    result.max_size = shared.best.load();
    for (int i : shared.witness) result.witness.push_back(ctx.cands[i]);
    std::sort(result.witness.begin(), result.witness.end());
    result.explored_nodes = shared.nodes.load();
    result.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    result.complete = !stopped_early;
    if (is_kummer_set(ctx.shape, result.witness).has_value())
        throw std::logic_error("search produced an invalid witness");
    if (static_cast<int>(result.witness.size()) != result.max_size)
        throw std::logic_error("witness size disagrees with max_size");
    return result;
}

}  // namespace

std::vector<ExponentVector> all_nonzero_vectors(const AlgebraShape& shape) {
    std::vector<ExponentVector> out;
    ExponentVector cur = zero_vector(shape);
    const int len = shape.vector_length();
    while (true) {
        if (!cur.is_zero()) out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur.entries[i] == shape.degree - 1) cur.entries[i--] = 0;
        if (i < 0) break;
        ++cur.entries[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

SearchResult brute_force_oracle(const AlgebraShape& shape) {
    const auto cands = all_nonzero_vectors(shape);
    if (cands.size() > 255)
        throw std::runtime_error("brute_force_oracle: shape too large (capacity)");

    const auto start = Clock::now();
    SearchResult result;
    result.max_size = 0;
    std::uint64_t nodes = 0;
    std::vector<ExponentVector> current;

    // hereditary prune only: extend any set that is still Kummer
    auto rec = [&](auto&& self, size_t from) -> void {
        ++nodes;
        if (static_cast<int>(current.size()) > result.max_size) {
            result.max_size = static_cast<int>(current.size());
            result.witness = current;
        }
        for (size_t i = from; i < cands.size(); ++i) {
            if (extension_violation(shape, current, cands[i]).has_value()) continue;
            current.push_back(cands[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(result.witness.begin(), result.witness.end());
    result.explored_nodes = nodes;
    result.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    result.complete = true;
    return result;
}

std::vector<std::vector<ExponentVector>> symplectic_orbits(const AlgebraShape& shape) {
    const auto cands = all_nonzero_vectors(shape);
    std::map<ExponentVector, int> index;
    for (size_t i = 0; i < cands.size(); ++i) index[cands[i]] = static_cast<int>(i);

    std::vector<char> seen(cands.size(), 0);
    std::vector<std::vector<ExponentVector>> orbits;
    for (size_t i = 0; i < cands.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> frontier{static_cast<int>(i)};
        std::vector<int> members;
        seen[i] = 1;
        while (!frontier.empty()) {
            const int u = frontier.back();
            frontier.pop_back();
            members.push_back(u);
            for (const auto& center : cands) {
                const int v = index.at(transvect(shape, cands[u], center));
                if (!seen[v]) {
                    seen[v] = 1;
                    frontier.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<ExponentVector> orbit;
        for (int m : members) orbit.push_back(cands[m]);
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

std::vector<ExponentVector> symmetry_representatives(const AlgebraShape& shape) {
    std::vector<ExponentVector> reps;
    for (const auto& orbit : symplectic_orbits(shape)) reps.push_back(orbit.front());
    return reps;
}

SearchResult max_kummer_dimension(const AlgebraShape& shape,
                                  const SearchConfig& config) {
    const auto start = Clock::now();
    SearchContext ctx(shape);
    if (ctx.count > 4096)
        throw std::runtime_error("max_kummer_dimension: shape too large (capacity)");

    std::map<ExponentVector, int> index;
    for (int i = 0; i < ctx.count; ++i) index[ctx.cands[i]] = i;

    // pairwise compatibility as bitset rows, diagonal cleared
    const auto table = pair_compatibility_table(shape, ctx.cands);
    std::vector<Bitset> compat(ctx.count, Bitset(ctx.count));
    for (int i = 0; i < ctx.count; ++i) {
        for (int j = 0; j < ctx.count; ++j)
            if (j != i && table[i][j]) compat[i].set(j);
    }

    SharedState shared;
    shared.target = config.target;
    if (config.time_budget_seconds)
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(
                                          *config.time_budget_seconds));

    // initial incumbent: the standard dn+1 construction
    {
        std::vector<int> incumbent;
        for (const auto& v : standard_basis(shape)) incumbent.push_back(index.at(v));
        std::sort(incumbent.begin(), incumbent.end());
        shared.offer(incumbent);
    }

    std::vector<int> roots;
    const bool symmetric = config.use_symmetry;
    if (symmetric) {
        for (const auto& rep : symmetry_representatives(shape))
            roots.push_back(index.at(rep));
    } else {
        roots.resize(ctx.count);
        for (int i = 0; i < ctx.count; ++i) roots[i] = i;
    }

    const bool serial = config.deterministic;
    if (serial) {
        Worker worker{ctx, compat, shared};
        for (int r : roots) {
            if (worker.should_stop()) break;
            std::vector<int> s{r};
            Bitset allowed = compat[r];
            worker.dfs(s, allowed, symmetric ? 0 : r + 1);
        }
        shared.nodes += worker.local_nodes;
    } else {
        // split on depth-2 branches; the incumbent size is a shared
        // monotone cell, everything else is worker-local
        std::vector<std::pair<int, int>> tasks;
        for (int r : roots) {
            const int from = symmetric ? 0 : r + 1;
            for (int z = compat[r].next(from); z >= 0; z = compat[r].next(z + 1))
                tasks.emplace_back(r, z);
        }
#ifdef _OPENMP
        const int nthreads =
            config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
        {
            Worker worker{ctx, compat, shared};
#pragma omp for schedule(dynamic, 1)
            for (size_t t = 0; t < tasks.size(); ++t) {
                if (worker.should_stop()) continue;
                const auto [r, z] = tasks[t];
                std::vector<int> s{std::min(r, z), std::max(r, z)};
                if (static_cast<int>(s.size()) > shared.best.load()) shared.offer(s);
                Bitset allowed = compat[r];
                allowed.and_with(compat[z]);
                allowed.clear(r);
                allowed.clear(z);
                worker.dfs(s, allowed, z + 1);
            }
#pragma omp critical
            shared.nodes += worker.local_nodes;
        }
#else
        Worker worker{ctx, compat, shared};
        for (const auto& [r, z] : tasks) {
            if (worker.should_stop()) break;
            std::vector<int> s{std::min(r, z), std::max(r, z)};
            Bitset allowed = compat[r];
            allowed.and_with(compat[z]);
            allowed.clear(r);
            allowed.clear(z);
            worker.dfs(s, allowed, z + 1);
        }
        shared.nodes += worker.local_nodes;
#endif
    }

    const bool stopped_early = shared.stop.load();
    return finish(ctx, shared, start, stopped_early);
}

std::vector<std::vector<ExponentVector>> enumerate_maximal_sets(
    const AlgebraShape& shape) {
    if (shape.factors != 1)
        throw std::runtime_error("enumerate_maximal_sets: n=1 only (capacity)");
    const auto cands = all_nonzero_vectors(shape);
    std::vector<std::vector<ExponentVector>> maximal;
    std::vector<ExponentVector> current;

    auto rec = [&](auto&& self, size_t from) -> void {
        std::vector<size_t> extensions;
        bool extendable = false;
        for (size_t i = 0; i < cands.size(); ++i) {
            if (std::find(current.begin(), current.end(), cands[i]) != current.end())
                continue;
            if (extension_violation(shape, current, cands[i]).has_value()) continue;
            extendable = true;
            if (i >= from) extensions.push_back(i);
        }
        if (!extendable && !current.empty()) {
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            maximal.push_back(std::move(sorted));
            return;
        }
        for (size_t i : extensions) {
            current.push_back(cands[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);

    for (const auto& s : maximal)
        if (is_kummer_set(shape, s).has_value())
            throw std::logic_error("enumerate_maximal_sets produced a non-Kummer set");
    return maximal;
}

}  // namespace kummer
