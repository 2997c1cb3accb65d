#ifndef KUMMER_GRAPH_HPP
#define KUMMER_GRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kummer/core.hpp"

namespace kummer {

// Pair labels of the d=4 graph: v -> w when vw = i wv (phase 1),
// v -- w when vw = -wv (phase 2), commute when the phase is 0.
enum class EdgeLabel { ArrowTo, ArrowFrom, Dashed, Commute };

// Labeled graph on a set of monomials, d=4 only.  Stores the full phase
// matrix; checkers work off phases so synthetic (non-realizable)
// configurations can be unit-tested directly.
struct KummerGraph {
    std::vector<ExponentVector> vertices;           // may be empty for synthetic graphs
    std::vector<std::vector<int>> phases;           // mod 4, antisymmetric

    int size() const { return static_cast<int>(phases.size()); }
    int phase(int i, int j) const { return phases[i][j]; }
    EdgeLabel label(int i, int j) const;
    bool arrow(int i, int j) const { return phases[i][j] == 1; }

    // Synthetic graph from a phase matrix (must be antisymmetric mod 4).
    static KummerGraph from_phases(std::vector<std::vector<int>> phases);
};

KummerGraph build_graph(const AlgebraShape& shape,
                        const std::vector<ExponentVector>& basis);

// Checkers return nullopt on success, a witness on failure.  Indices refer
// to graph vertex positions.

// No commuting pair of distinct vertices.
std::optional<std::array<int, 2>> check_no_commuting(const KummerGraph& g);

// Dashed edges form a partial matching; witness = (vertex, partner, partner).
std::optional<std::array<int, 3>> check_anticommute_matching(const KummerGraph& g);

// No directed 3-cycle of arrows.
std::optional<std::array<int, 3>> check_no_directed_triangle(const KummerGraph& g);

// All simple directed cycles of arrows have length 4 with both diagonals
// dashed; witness = offending cycle.
std::optional<std::vector<int>> directed_cycles_ok(const KummerGraph& g);

// No 4-subset matches either forbidden quad configuration (in any of its
// vertex orderings); witness = the matching ordered quadruple.
std::optional<std::array<int, 4>> check_forbidden_quads(const KummerGraph& g);

// For every 4-subset forming one of the two all-arrows-outside
// configurations, every external vertex has all-in or all-out arrows.
struct OrientationWitness {
    std::array<int, 4> subset;
    int outsider;
};
std::optional<OrientationWitness> check_universal_orientation(const KummerGraph& g);

enum class BlockType { TypeI, TypeII, TypeIII, TypeIV, Forbidden };

// Phase matrix of the ordered quadruple (v_k, v_k', v_{k+1}, v_{k+1}').
// Requires phase(v_k,v_k') = phase(v_{k+1},v_{k+1}') = 2 and
// phase(v_k,v_{k+1}) = 1; the three free edges must be arrows.
BlockType classify_block(const std::array<std::array<int, 4>, 4>& phases);

const char* to_string(BlockType t);

// Ordering of the subset with all arrows forward, or the obstructing
// directed cycle.  Subset vertices must be pairwise arrow-connected.
struct TopoResult {
    bool ok;
    std::vector<int> order;  // valid when ok
    std::vector<int> cycle;  // valid when !ok
};
TopoResult topological_arrow_order(const KummerGraph& g,
                                   const std::vector<int>& subset);

// DOT text: arrows solid directed, dashed pairs undirected dashed, commuting
// pairs dotted with a warning attribute.  Vertex names "m_<a1>_<b1>_...".
std::string to_dot(const KummerGraph& g);

}  // namespace kummer

#endif
