#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pitri/bigraph.hpp"
#include "pitri/orders.hpp"

namespace pitri {

/// Small seeded generator. Built on std::mt19937_64's raw output (whose sequence
/// the standard pins down) so instances are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Triangle spanned by a point `apex` on the top line and the interval
/// [left, right] on the bottom line.
struct Triangle {
  int apex = 0;
  int left = 0;
  int right = 0;

  bool operator==(const Triangle&) const = default;
};

/// Apexes are a permutation of 1..n and the 2n interval endpoints a permutation
/// of 1..2n, so no two coordinates on the same line coincide.
struct TriangleRepresentation {
  std::vector<Triangle> triangles;

  bool operator==(const TriangleRepresentation&) const = default;
};

TriangleRepresentation gen_triangle_representation(int n, std::uint64_t seed);

/// True iff triangle a lies completely to the left of triangle b.
bool left_of(const Triangle& a, const Triangle& b);

SimpleGraph intersection_graph(const TriangleRepresentation& r);

/// u ≺ v iff T_u lies completely to the left of T_v.
PartialOrder order_of_representation(const TriangleRepresentation& r);

/// Each pair is an edge independently with probability `density`.
/// Throws InputError unless density is in [0, 1].
BipartiteGraph gen_random_bipartite(int u_count, int v_count, double density, std::uint64_t seed);

/// Each edge of g joins F independently with probability `density`.
EdgeSet gen_random_F(const BipartiteGraph& g, double density, std::uint64_t seed);

/// Vertices i < j adjacent iff the permutation reverses them.
SimpleGraph gen_permutation_graph(int n, std::uint64_t seed);

/// Intervals with endpoints a random permutation of 1..2n; adjacent iff they overlap.
SimpleGraph gen_interval_graph(int n, std::uint64_t seed);

/// Graph whose vertex `perm[i]` plays the role of vertex i of g.
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);

}  // namespace pitri
