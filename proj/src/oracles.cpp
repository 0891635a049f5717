#include "pitri/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace pitri {

bool oracle_is_chain(std::span<const Edge> edges) {
  const std::set<Edge> in(edges.begin(), edges.end());
  for (const Edge& a : edges) {
    for (const Edge& b : edges) {
      if (a.u == b.u || a.v == b.v) continue;
      if (!in.contains({a.u, b.v}) && !in.contains({b.u, a.v})) return false;
    }
  }
  return true;
}

namespace {

// Per-side membership while labelling: 0 undecided, 1 in, 2 out.
struct CoverSearch {
  const BipartiteGraph& g;
  const CoverProblem& p;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> state[2];

  // A pair of cross positions is ruled out of side s if it is not an edge of G
  // or it has already been labelled out of s.
  bool blocked(int s, int u, int v) const {
    const int id = g.edge_id(u, v);
    return id < 0 || state[s][id] == 2;
  }

  bool consistent(int s, std::size_t id) const {
    const auto [u, v] = edges[id];
    if (state[s][id] == 1) {
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (state[s][j] != 1) continue;
        const auto [u2, v2] = edges[j];
        if (u2 == u || v2 == v) continue;
        if (blocked(s, u, v2) && blocked(s, u2, v)) return false;
      }
    } else {
      // (u, x) and (y, v) both in s, with this pair and (y, x) as cross pairs.
      for (std::size_t a = 0; a < edges.size(); ++a) {
        if (state[s][a] != 1 || edges[a].u != u || edges[a].v == v) continue;
        for (std::size_t b = 0; b < edges.size(); ++b) {
          if (state[s][b] != 1 || edges[b].v != v || edges[b].u == u) continue;
          if (blocked(s, edges[b].u, edges[a].v)) return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t id) {
    if (id == edges.size()) {
      EdgeSet sides[2];
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (int s = 0; s < 2; ++s) {
          if (state[s][i] == 1) sides[s].push_back(edges[i]);
        }
      }
      return oracle_is_chain(sides[0]) && oracle_is_chain(sides[1]);
    }
    // Labels: G1 only, G2 only, both. Edges of F never enter G1.
    static constexpr std::uint8_t kLabels[3][2] = {{1, 2}, {2, 1}, {1, 1}};
    for (const auto& label : kLabels) {
      if (label[0] == 1 && p.is_forbidden(edges[id])) continue;
      state[0][id] = label[0];
      state[1][id] = label[1];
      if (consistent(0, id) && consistent(1, id) && search(id + 1)) return true;
    }
    state[0][id] = state[1][id] = 0;
    return false;
  }
};

}  // namespace

bool oracle_cover_exists(const CoverProblem& p) {
  const BipartiteGraph& g = p.graph();
  if (g.edge_count() > kOracleMaxCoverEdges) {
    throw GuardError("oracle_cover_exists: " + std::to_string(g.edge_count()) + " edges exceeds " +
                     std::to_string(kOracleMaxCoverEdges));
  }
  CoverSearch s{g, p, {g.edges().begin(), g.edges().end()}, {}};
  s.state[0].assign(g.edge_count(), 0);
  s.state[1].assign(g.edge_count(), 0);
  return s.search(0);
}

namespace {

struct CycleSearch {
  const BipartiteGraph& h;
  std::set<Edge> m;
  int start = 0;
  std::vector<bool> used_u, used_v;
  std::vector<int> us, vs;

  bool from_u(int u) {
    for (int v = 0; v < h.v_count(); ++v) {
      if (used_v[v] || h.has_edge(u, v)) continue;
      used_v[v] = true;
      vs.push_back(v);
      for (int next = start; next < h.u_count(); ++next) {
        if (!m.contains({next, v})) continue;
        if (next == start) return true;
        if (used_u[next]) continue;
        used_u[next] = true;
        us.push_back(next);
        if (from_u(next)) return true;
        us.pop_back();
        used_u[next] = false;
      }
      vs.pop_back();
      used_v[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<AlternatingCycle> oracle_alternating_cycle(const BipartiteGraph& h, std::span<const Edge> m) {
  if (h.u_count() > kOracleMaxCycleSide || h.v_count() > kOracleMaxCycleSide) {
    throw GuardError("oracle_alternating_cycle: sides exceed " + std::to_string(kOracleMaxCycleSide));
  }
  CycleSearch s{h, {m.begin(), m.end()}, 0, {}, {}, {}, {}};
  // Each cycle is found from its smallest left vertex.
  for (int start = 0; start < h.u_count(); ++start) {
    s.start = start;
    s.used_u.assign(static_cast<std::size_t>(h.u_count()), false);
    s.used_v.assign(static_cast<std::size_t>(h.v_count()), false);
    s.us = {start};
    s.vs.clear();
    s.used_u[start] = true;
    if (s.from_u(start)) return AlternatingCycle{s.us, s.vs};
  }
  return std::nullopt;
}

std::vector<PartialOrder> oracle_all_transitive_orientations(const SimpleGraph& g) {
  const auto edges = g.edges();
  if (edges.size() > kOracleMaxOrientationEdges) {
    throw GuardError("oracle_all_transitive_orientations: too many edges");
  }
  const int n = g.vertex_count();
  std::vector<PartialOrder> out;
  std::vector<char> arc(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::fill(arc.begin(), arc.end(), 0);
    std::vector<VertexPair> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (mask >> i & 1u) std::swap(a, b);
      arc[static_cast<std::size_t>(a) * n + b] = 1;
      pairs.emplace_back(a, b);
    }
    bool transitive = true;
    for (const auto& [a, b] : pairs) {
      for (int c = 0; c < n && transitive; ++c) {
        if (arc[static_cast<std::size_t>(b) * n + c] && !arc[static_cast<std::size_t>(a) * n + c]) {
          transitive = false;
        }
      }
    }
    if (transitive) out.push_back(PartialOrder::from_pairs(n, pairs));
  }
  return out;
}

bool oracle_2sat_satisfiable(const TwoSatInstance& inst) {
  const int n = inst.var_count();
  if (n > kOracleMaxSatVars) throw GuardError("oracle_2sat_satisfiable: too many variables");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto holds = [&](Literal l) { return ((mask >> l.var) & 1u) == (l.positive ? 1u : 0u); };
    bool ok = true;
    for (const auto& [a, b] : inst.clauses()) {
      if (!holds(a) && !holds(b)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

// Places 2n endpoints on the bottom line, left to right. Apex order on the top
// line is fixed to 0 < 1 < ... < n-1; relabelling is handled by the caller.
// Vertices i < j are non-adjacent iff the interval of i ends before that of j
// starts. `visit` sees the adjacency mask of every complete arrangement and
// stops the sweep by returning true.
template <typename Visit>
struct TriangleSweep {
  int n;
  std::vector<int> pair_bit;  // bit index of pair (a, b), a < b
  std::uint32_t full = 0;
  std::vector<int> opened;
  std::uint32_t closed_mask = 0;
  Visit visit;

  explicit TriangleSweep(int n_, Visit v) : n(n_), pair_bit(static_cast<std::size_t>(n_) * n_, -1), opened(n_, 0), visit(v) {
    int bits = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pair_bit[static_cast<std::size_t>(a) * n + b] = bits++;
    }
    full = bits == 32 ? ~0u : (1u << bits) - 1;
  }

  int bit(int a, int b) const { return pair_bit[static_cast<std::size_t>(a) * n + b]; }

  bool place(int placed, std::uint32_t non_adj) {
    if (placed == 2 * n) return visit(full ^ non_adj);
    for (int x = 0; x < n; ++x) {
      if (opened[x] == 0) {
        std::uint32_t add = 0;
        for (int j = 0; j < x; ++j) {
          if (closed_mask >> j & 1u) add |= 1u << bit(j, x);
        }
        opened[x] = 1;
        if (place(placed + 1, non_adj | add)) return true;
        opened[x] = 0;
      } else if (opened[x] == 1) {
        opened[x] = 2;
        closed_mask |= 1u << x;
        if (place(placed + 1, non_adj)) return true;
        closed_mask &= ~(1u << x);
        opened[x] = 1;
      }
    }
    return false;
  }
};

// Mask of g after moving vertex a to perm[a].
std::uint32_t permuted_mask(const SimpleGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::uint32_t mask = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      const int pa = std::min(perm[a], perm[b]);
      const int pb = std::max(perm[a], perm[b]);
      // Index of pair (pa, pb) in lexicographic order.
      mask |= 1u << (pa * (2 * n - pa - 1) / 2 + (pb - pa - 1));
    }
  }
  return mask;
}

SimpleGraph graph_of_mask(int n, std::uint32_t mask) {
  SimpleGraph g(n);
  int k = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++k) {
      if (mask >> k & 1u) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

std::uint32_t graph_mask(const SimpleGraph& g) {
  std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
  std::iota(identity.begin(), identity.end(), 0);
  return permuted_mask(g, identity);
}

bool oracle_is_simple_triangle(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > kOracleMaxTriangleVertices) throw GuardError("oracle_is_simple_triangle: too many vertices");
  if (n <= 1) return true;
  std::vector<bool> targets(std::size_t{1} << (n * (n - 1) / 2), false);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    targets[permuted_mask(g, perm)] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  TriangleSweep sweep(n, [&](std::uint32_t mask) { return static_cast<bool>(targets[mask]); });
  return sweep.place(0, 0);
}

std::vector<bool> oracle_simple_triangle_table(int n) {
  if (n > kOracleMaxTriangleVertices) throw GuardError("oracle_simple_triangle_table: too many vertices");
  const std::size_t size = std::size_t{1} << (n * (n - 1) / 2);
  std::vector<bool> reached(size, false);
  TriangleSweep sweep(n, [&](std::uint32_t mask) {
    reached[mask] = true;
    return false;
  });
  sweep.place(0, 0);
  std::vector<bool> table(size, false);
  std::vector<int> perm(n);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    if (!reached[mask]) continue;
    const SimpleGraph g = graph_of_mask(n, mask);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      table[permuted_mask(g, perm)] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return table;
}

}  // namespace pitri
