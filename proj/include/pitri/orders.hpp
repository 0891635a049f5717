#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pitri/bigraph.hpp"
#include "pitri/chaincover.hpp"

namespace pitri {

using VertexPair = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, dense adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  /// Throws InputError on self-loops or out-of-range endpoints; duplicates and
  /// both orientations of a pair are merged.
  static SimpleGraph from_edge_list(int n, std::span<const VertexPair> edges);

  int vertex_count() const { return n_; }
  bool adjacent(int a, int b) const { return adj_[slot(a, b)] != 0; }
  void add_edge(int a, int b);

  /// Edges (a, b) with a < b, lexicographic.
  std::vector<VertexPair> edges() const;
  std::size_t edge_count() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::size_t slot(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<char> adj_;
};

SimpleGraph complement(const SimpleGraph& g);

/// Strict partial order on 0..n-1, dense relation matrix.
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(int n);

  /// Throws InputError unless the pairs form an irreflexive, transitive relation.
  static PartialOrder from_pairs(int n, std::span<const VertexPair> pairs);

  int size() const { return n_; }
  bool less(int a, int b) const { return rel_[slot(a, b)] != 0; }

  /// All (a, b) with a ≺ b, lexicographic.
  std::vector<VertexPair> pairs() const;

  bool operator==(const PartialOrder&) const = default;

 private:
  std::size_t slot(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<char> rel_;
};

/// True iff `pairs` over 0..n-1 is irreflexive and transitive (O(n^3)).
bool is_strict_order(int n, std::span<const VertexPair> pairs);

/// True iff every edge of g is oriented exactly one way by `pairs` and no pair
/// is a non-edge.
bool is_orientation_of(const SimpleGraph& g, std::span<const VertexPair> pairs);

/// Transitive orientation by implication-class forcing (Golumbic's
/// G-decomposition): repeatedly take the lexicographically first remaining edge,
/// orient it low -> high, force its implication class in the remaining graph,
/// and remove the class. The result is re-validated before it is returned.
/// nullopt iff g is not a comparability graph.
std::optional<PartialOrder> transitive_orientation(const SimpleGraph& g);

/// C(P): left vertex i adjacent to right vertex j iff i ≺ j.
BipartiteGraph domination_bigraph(const PartialOrder& p);

/// Diagonal pairs (i, i) for 0 <= i < n.
EdgeSet e0_edges(int n);

/// Cover instance (Ĉ(P), F = E0).
CoverProblem linear_interval_cover_problem(const PartialOrder& p);

/// A linear-interval cover of Ĉ(P) if one exists.
std::optional<ChainCover> recognize_linear_interval_order(const PartialOrder& p);

}  // namespace pitri
