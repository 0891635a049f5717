#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pitri {

/// Malformed or out-of-range input handed to a public entry point.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition, or an internal invariant failed.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Edge between left vertex `u` and right vertex `v` of a bipartite graph.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

/// Sorts and deduplicates in place.
void normalize(EdgeSet& edges);

std::string to_string(Edge e);

/// Bipartite graph G = (U, V, E) with |U| = u_count, |V| = v_count.
///
/// Edges are kept sorted lexicographically and numbered by their position in
/// edges(); edge_id() maps a vertex pair back to that number in O(1) through a
/// dense u_count x v_count table.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Empty graph on the given sides.
  BipartiteGraph(int u_count, int v_count);

  /// Throws InputError on out-of-range endpoints; duplicates are merged.
  static BipartiteGraph from_edge_list(int u_count, int v_count, std::span<const Edge> pairs);

  int u_count() const { return u_count_; }
  int v_count() const { return v_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool in_range(Edge e) const {
    return e.u >= 0 && e.u < u_count_ && e.v >= 0 && e.v < v_count_;
  }

  /// False for pairs outside the vertex range.
  bool has_edge(int u, int v) const {
    return u >= 0 && u < u_count_ && v >= 0 && v < v_count_ && ids_[slot(u, v)] >= 0;
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Index of `e` in edges(), or -1 when e is a non-edge.
  int edge_id(int u, int v) const { return ids_[slot(u, v)]; }
  int edge_id(Edge e) const { return edge_id(e.u, e.v); }

  /// Right-side neighbours of left vertex `u`, ascending.
  std::span<const int> neighbors_of_u(int u) const {
    return {adj_v_.data() + u_offsets_[u], adj_v_.data() + u_offsets_[u + 1]};
  }

  /// Number of non-edges, |U| * |V| - |E|.
  std::size_t non_edge_count() const {
    return static_cast<std::size_t>(u_count_) * static_cast<std::size_t>(v_count_) - edges_.size();
  }

  bool operator==(const BipartiteGraph& other) const {
    return u_count_ == other.u_count_ && v_count_ == other.v_count_ && edges_ == other.edges_;
  }

 private:
  std::size_t slot(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(v_count_) + static_cast<std::size_t>(v);
  }
  void rebuild_index();

  int u_count_ = 0;
  int v_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> ids_;
  std::vector<int> u_offsets_{0};
  std::vector<int> adj_v_;
};

/// Committed edges take part in at least one induced 2K2; the rest are uncommitted.
struct EdgeClassification {
  EdgeSet committed;
  EdgeSet uncommitted;
  /// Indexed by edge id of the classified graph.
  std::vector<bool> is_committed;
};

/// Ĝ: same sides, edge set (U x V) \ E.
BipartiteGraph bipartite_complement(const BipartiteGraph& g);

/// True iff e and f have four distinct endpoints and neither cross pair is an
/// edge, i.e. they induce a 2K2. Throws InputError when either is not an edge.
bool in_conflict(const BipartiteGraph& g, Edge e, Edge f);

/// Both cross pairs of a conflict are non-edges, so the scan runs over pairs of
/// edges or, for each edge (u, v), over the non-edges at u times those at v,
/// whichever is cheaper: O(min(m^2, m̂^2) + |U||V|).
EdgeClassification classify_edges(const BipartiteGraph& g);

/// Non-edges grouped by endpoint: by_u[u] holds the v with uv missing, by_v[v]
/// the u, both ascending.
struct NonEdgeLists {
  std::vector<std::vector<int>> by_u;
  std::vector<std::vector<int>> by_v;
};
NonEdgeLists non_edge_lists(const BipartiteGraph& g);

struct ChainTest {
  bool is_chain = true;
  /// Two edges of the tested subset inducing a 2K2 when is_chain is false.
  std::optional<std::pair<Edge, Edge>> witness;
};

/// Tests whether the spanning subgraph of `g` with edge set `edge_subset` is a
/// chain graph by sorting left vertices by degree and checking that consecutive
/// neighbourhoods nest. Throws InputError if the subset leaves E(g).
ChainTest is_chain_graph(const BipartiteGraph& g, std::span<const Edge> edge_subset);

}  // namespace pitri
