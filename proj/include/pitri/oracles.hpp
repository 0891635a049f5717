#pragma once

// Brute-force reference implementations. Each one works straight from the
// definitions and shares no search logic with the pipeline it is compared to.
// Size guards throw GuardError rather than truncating the search.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pitri/bigraph.hpp"
#include "pitri/chaincover.hpp"
#include "pitri/orders.hpp"
#include "pitri/twosat.hpp"

namespace pitri {

class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxCoverEdges = 14;
inline constexpr int kOracleMaxCycleSide = 7;
inline constexpr std::size_t kOracleMaxOrientationEdges = 20;
inline constexpr int kOracleMaxSatVars = 20;
inline constexpr int kOracleMaxTriangleVertices = 7;

/// Pairwise 2K2 scan inside the edge set itself.
bool oracle_is_chain(std::span<const Edge> edges);

/// Exhaustive search over labellings of each edge with G1, G2 or both (edges of
/// F only G2), pruned as soon as some pair of edges inside one side has both
/// cross pairs ruled out of that side. Guard: |E| <= 14.
bool oracle_cover_exists(const CoverProblem& p);

/// DFS over simple paths alternating non-edges of H and edges of M. Guard: both
/// sides of H have at most 7 vertices.
std::optional<AlternatingCycle> oracle_alternating_cycle(const BipartiteGraph& h, std::span<const Edge> m);

/// Every orientation of g's edges that is transitive. Guard: |E| <= 20.
std::vector<PartialOrder> oracle_all_transitive_orientations(const SimpleGraph& g);

/// Tries all 2^n assignments. Guard: n <= 20.
bool oracle_2sat_satisfiable(const TwoSatInstance& inst);

/// Decides whether g is the intersection graph of triangles spanned between two
/// lines by enumerating every arrangement of apexes and interval endpoints (up
/// to relabelling). Guard: n <= 7.
bool oracle_is_simple_triangle(const SimpleGraph& g);

/// Index of a labelled graph on n vertices: bit k is set iff the k-th pair (a, b),
/// a < b, in lexicographic order is an edge.
std::uint32_t graph_mask(const SimpleGraph& g);

/// For every labelled graph on n vertices (indexed by graph_mask), whether it is
/// a simple-triangle graph, by one sweep over all arrangements. Guard: n <= 7.
std::vector<bool> oracle_simple_triangle_table(int n);

}  // namespace pitri
