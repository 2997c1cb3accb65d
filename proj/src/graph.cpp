#include "kummer/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kummer {

EdgeLabel KummerGraph::label(int i, int j) const {
    switch (phases[i][j]) {
        case 1: return EdgeLabel::ArrowTo;
        case 3: return EdgeLabel::ArrowFrom;
        case 2: return EdgeLabel::Dashed;
        default: return EdgeLabel::Commute;
    }
}

KummerGraph KummerGraph::from_phases(std::vector<std::vector<int>> phases) {
    const int n = static_cast<int>(phases.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(phases[i].size()) != n)
            throw std::invalid_argument("phase matrix must be square");
        for (int j = 0; j < n; ++j) {
            if (phases[i][j] < 0 || phases[i][j] > 3)
                throw std::invalid_argument("phase entries must be residues mod 4");
            if ((phases[i][j] + phases[j][i]) % 4 != 0)
                throw std::invalid_argument("phase matrix must be antisymmetric mod 4");
        }
    }
    KummerGraph g;
    g.phases = std::move(phases);
    return g;
}

KummerGraph build_graph(const AlgebraShape& shape,
                        const std::vector<ExponentVector>& basis) {
    if (shape.degree != 4)
        throw std::runtime_error("graphs require d=4");
    for (const auto& v : basis) {
        check_vector(shape, v);
        if (v.is_zero())
            throw std::invalid_argument("scalar monomial (zero vector) in basis");
    }
    const int n = static_cast<int>(basis.size());
    KummerGraph g;
    g.vertices = basis;
    g.phases.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.phases[i][j] = symplectic_phase(shape, basis[i], basis[j]);
    return g;
}

std::optional<std::array<int, 2>> check_no_commuting(const KummerGraph& g) {
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.phase(i, j) == 0) return std::array<int, 2>{i, j};
    return std::nullopt;
}

std::optional<std::array<int, 3>> check_anticommute_matching(const KummerGraph& g) {
    for (int i = 0; i < g.size(); ++i) {
        int first = -1;
        for (int j = 0; j < g.size(); ++j) {
            if (j == i || g.phase(i, j) != 2) continue;
            if (first < 0)
                first = j;
            else
                return std::array<int, 3>{i, first, j};
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> check_no_directed_triangle(const KummerGraph& g) {
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            for (int k = 0; k < g.size(); ++k)
                if (g.arrow(i, j) && g.arrow(j, k) && g.arrow(k, i))
                    return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

namespace {

// Simple directed cycles in the arrow subgraph; each cycle is reported once,
// rooted at its smallest vertex.  Graphs here have at most a few dozen
// vertices, so plain DFS is enough.
bool find_bad_cycle(const KummerGraph& g, std::vector<int>& path,
                    std::vector<char>& on_path, int root,
                    std::vector<int>& bad) {
    const int last = path.back();
    for (int next = root; next < g.size(); ++next) {
        if (!g.arrow(last, next)) continue;
        if (next == root && path.size() >= 2) {
            const bool ok = path.size() == 4 && g.phase(path[0], path[2]) == 2 &&
                            g.phase(path[1], path[3]) == 2;
            if (!ok) {
                bad = path;
                return true;
            }
            continue;
        }
        if (on_path[next]) continue;
        path.push_back(next);
        on_path[next] = 1;
        if (find_bad_cycle(g, path, on_path, root, bad)) return true;
        on_path[next] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> directed_cycles_ok(const KummerGraph& g) {
    std::vector<char> on_path(g.size(), 0);
    for (int root = 0; root < g.size(); ++root) {
        std::vector<int> path{root};
        on_path.assign(g.size(), 0);
        on_path[root] = 1;
        std::vector<int> bad;
        if (find_bad_cycle(g, path, on_path, root, bad)) return bad;
    }
    return std::nullopt;
}

namespace {

// Required phases of the ordered quadruple (v, w, z, t) for the two
// impossible 4-vertex configurations.
struct QuadConfig {
    // entries: {i, j, phase}
    std::array<std::array<int, 3>, 6> req;
};

constexpr QuadConfig kForbiddenA{{{{0, 1, 1},
                                   {1, 3, 1},
                                   {2, 0, 1},
                                   {2, 3, 1},
                                   {0, 3, 2},
                                   {1, 2, 2}}}};

constexpr QuadConfig kForbiddenB{{{{0, 1, 1},
                                   {0, 2, 1},
                                   {0, 3, 2},
                                   {1, 3, 1},
                                   {1, 2, 1},
                                   {2, 3, 1}}}};

// Lemma configurations under which every outside vertex must orient
// uniformly: the directed 4-cycle with dashed diagonals, and its variant
// with the bottom arrow reversed.
constexpr QuadConfig kCycleAllArrows{{{{0, 1, 1},
                                       {2, 0, 1},
                                       {0, 3, 2},
                                       {1, 3, 1},
                                       {1, 2, 2},
                                       {3, 2, 1}}}};

constexpr QuadConfig kBlockTwo{{{{0, 1, 1},
                                 {0, 2, 1},
                                 {0, 3, 2},
                                 {1, 3, 1},
                                 {1, 2, 2},
                                 {2, 3, 1}}}};

bool matches(const KummerGraph& g, const std::array<int, 4>& quad,
             const QuadConfig& cfg) {
    for (const auto& [i, j, p] : cfg.req)
        if (g.phase(quad[i], quad[j]) != p) return false;
    return true;
}

template <typename Fn>
bool for_each_ordered_quad(const KummerGraph& g, Fn&& fn) {
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::array<int, 4> quad{a, b, c, d};
                    std::sort(quad.begin(), quad.end());
                    do {
                        if (fn(quad)) return true;
                    } while (std::next_permutation(quad.begin(), quad.end()));
                }
    return false;
}

}  // namespace

std::optional<std::array<int, 4>> check_forbidden_quads(const KummerGraph& g) {
    std::optional<std::array<int, 4>> witness;
    for_each_ordered_quad(g, [&](const std::array<int, 4>& quad) {
        if (matches(g, quad, kForbiddenA) || matches(g, quad, kForbiddenB)) {
            witness = quad;
            return true;
        }
        return false;
    });
    return witness;
}

std::optional<OrientationWitness> check_universal_orientation(const KummerGraph& g) {
    std::optional<OrientationWitness> witness;
    for_each_ordered_quad(g, [&](const std::array<int, 4>& quad) {
        if (!matches(g, quad, kCycleAllArrows) && !matches(g, quad, kBlockTwo))
            return false;
        for (int w = 0; w < g.size(); ++w) {
            if (w == quad[0] || w == quad[1] || w == quad[2] || w == quad[3])
                continue;
            bool all_in = true, all_out = true;
            for (int v : quad) {
                if (!g.arrow(w, v)) all_in = false;
                if (!g.arrow(v, w)) all_out = false;
            }
            if (!all_in && !all_out) {
                witness = OrientationWitness{quad, w};
                return true;
            }
        }
        return false;
    });
    return witness;
}

BlockType classify_block(const std::array<std::array<int, 4>, 4>& p) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((p[i][j] + p[j][i]) % 4 != 0 || (i == j && p[i][j] != 0))
                throw std::invalid_argument("block phases must be antisymmetric mod 4");
    if (p[0][1] != 2 || p[2][3] != 2 || p[0][2] != 1)
        throw std::invalid_argument(
            "block requires dashed partner pairs and the chain arrow v_k -> v_{k+1}");
    for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}, std::pair{1, 3}})
        if (p[i][j] != 1 && p[i][j] != 3)
            throw std::invalid_argument("block diagonals must be arrows");
    const bool d1 = p[0][3] == 1;  // v_k -> v_{k+1}'
    const bool d2 = p[1][2] == 1;  // v_k' -> v_{k+1}
    const bool d3 = p[1][3] == 1;  // v_k' -> v_{k+1}'
    if (d1 && d2 && d3) return BlockType::TypeI;
    if (d1 && !d2 && !d3) return BlockType::TypeII;
    if (!d1 && d2 && !d3) return BlockType::TypeIII;
    if (!d1 && !d2 && d3) return BlockType::TypeIV;
    return BlockType::Forbidden;
}

const char* to_string(BlockType t) {
    switch (t) {
        case BlockType::TypeI: return "I";
        case BlockType::TypeII: return "II";
        case BlockType::TypeIII: return "III";
        case BlockType::TypeIV: return "IV";
        case BlockType::Forbidden: return "forbidden";
    }
    return "?";
}

TopoResult topological_arrow_order(const KummerGraph& g,
                                   const std::vector<int>& subset) {
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b) {
            const int p = g.phase(subset[a], subset[b]);
            if (p != 1 && p != 3)
                throw std::invalid_argument(
                    "subset must be pairwise connected by arrows");
        }
    std::vector<int> remaining = subset;
    std::vector<int> order;
    while (!remaining.empty()) {
        // a source has no incoming arrow from the rest
        auto src = std::find_if(remaining.begin(), remaining.end(), [&](int v) {
            return std::none_of(remaining.begin(), remaining.end(),
                                [&](int u) { return u != v && g.arrow(u, v); });
        });
        if (src == remaining.end()) {
            // walk backwards along arrows until a vertex repeats
            std::vector<int> trail{remaining.front()};
            while (true) {
                const int cur = trail.back();
                const int pred = *std::find_if(
                    remaining.begin(), remaining.end(),
                    [&](int u) { return u != cur && g.arrow(u, cur); });
                auto seen = std::find(trail.begin(), trail.end(), pred);
                if (seen != trail.end()) {
                    std::vector<int> cycle(seen, trail.end());
                    std::reverse(cycle.begin(), cycle.end());
                    return TopoResult{false, {}, cycle};
                }
                trail.push_back(pred);
            }
        }
        order.push_back(*src);
        remaining.erase(src);
    }
    return TopoResult{true, order, {}};
}

std::string to_dot(const KummerGraph& g) {
    std::ostringstream os;
    os << "digraph kummer {\n";
    auto name = [&](int i) {
        if (g.vertices.empty()) {
            return "v" + std::to_string(i);
        }
        std::string s = "m";
        for (int e : g.vertices[i].entries) s += "_" + std::to_string(e);
        return s;
    };
    for (int i = 0; i < g.size(); ++i) os << "  " << name(i) << ";\n";
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            switch (g.label(i, j)) {
                case EdgeLabel::ArrowTo:
                    os << "  " << name(i) << " -> " << name(j) << ";\n";
                    break;
                case EdgeLabel::ArrowFrom:
                    os << "  " << name(j) << " -> " << name(i) << ";\n";
                    break;
                case EdgeLabel::Dashed:
                    os << "  " << name(i) << " -> " << name(j)
                       << " [style=dashed, dir=none];\n";
                    break;
                case EdgeLabel::Commute:
                    os << "  " << name(i) << " -> " << name(j)
                       << " [style=dotted, dir=none, warning=\"commuting pair\"];\n";
                    break;
            }
        }
    os << "}\n";
    return os.str();
}

}  // namespace kummer
