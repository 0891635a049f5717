#include "pitri/orders.hpp"

#include <algorithm>

namespace pitri {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0) throw InputError("graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

SimpleGraph SimpleGraph::from_edge_list(int n, std::span<const VertexPair> edges) {
  SimpleGraph g(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("graph: edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a == b) throw InputError("graph: self-loop at " + std::to_string(a));
    g.add_edge(a, b);
  }
  return g;
}

void SimpleGraph::add_edge(int a, int b) {
  adj_[slot(a, b)] = 1;
  adj_[slot(b, a)] = 1;
}

std::vector<VertexPair> SimpleGraph::edges() const {
  std::vector<VertexPair> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count());
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (!g.adjacent(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

PartialOrder::PartialOrder(int n) : n_(n) {
  if (n < 0) throw InputError("order: negative element count");
  rel_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

bool is_strict_order(int n, std::span<const VertexPair> pairs) {
  std::vector<char> rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](int a, int b) -> char& { return rel[static_cast<std::size_t>(a) * n + b]; };
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
    at(a, b) = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!at(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (at(b, c) && !at(a, c)) return false;
      }
    }
  }
  return true;
}

PartialOrder PartialOrder::from_pairs(int n, std::span<const VertexPair> pairs) {
  PartialOrder p(n);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("order: pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
  }
  if (!is_strict_order(n, pairs)) throw InputError("order: relation is not irreflexive and transitive");
  for (const auto& [a, b] : pairs) p.rel_[p.slot(a, b)] = 1;
  return p;
}

std::vector<VertexPair> PartialOrder::pairs() const {
  std::vector<VertexPair> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_orientation_of(const SimpleGraph& g, std::span<const VertexPair> pairs) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || !g.adjacent(a, b)) return false;
    const std::size_t lo = static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b);
    if (seen[lo]) return false;
    seen[lo] = 1;
  }
  return pairs.size() == g.edge_count();
}

std::optional<PartialOrder> transitive_orientation(const SimpleGraph& g) {
  const int n = g.vertex_count();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  auto at = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };

  std::vector<char> remaining(nn, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) remaining[at(a, b)] = g.adjacent(a, b) ? 1 : 0;
  }
  // label[a*n+b] == step  <=>  a -> b belongs to the class built in `step`.
  std::vector<int> label(nn, -1);
  std::vector<VertexPair> oriented;
  std::vector<VertexPair> klass;

  int step = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!remaining[at(a, b)]) continue;
      klass.clear();
      bool conflict = false;
      auto force = [&](int x, int y) {
        if (label[at(y, x)] == step) {
          conflict = true;
          return;
        }
        if (label[at(x, y)] == step) return;
        label[at(x, y)] = step;
        klass.emplace_back(x, y);
      };
      force(a, b);
      for (std::size_t head = 0; head < klass.size() && !conflict; ++head) {
        const auto [x, y] = klass[head];
        for (int z = 0; z < n && !conflict; ++z) {
          if (z == x || z == y) continue;
          // x -> y forces x -> z when zy is not a remaining edge, and z -> y
          // when zx is not.
          if (remaining[at(x, z)] && !remaining[at(y, z)]) force(x, z);
          if (remaining[at(y, z)] && !remaining[at(x, z)]) force(z, y);
        }
      }
      if (conflict) return std::nullopt;
      for (const auto& [x, y] : klass) {
        remaining[at(x, y)] = 0;
        remaining[at(y, x)] = 0;
        oriented.emplace_back(x, y);
      }
      ++step;
    }
  }

  if (!is_strict_order(n, oriented)) return std::nullopt;
  return PartialOrder::from_pairs(n, oriented);
}

BipartiteGraph domination_bigraph(const PartialOrder& p) {
  EdgeSet edges;
  for (const auto& [a, b] : p.pairs()) edges.push_back({a, b});
  return BipartiteGraph::from_edge_list(p.size(), p.size(), edges);
}

EdgeSet e0_edges(int n) {
  EdgeSet out;
  for (int i = 0; i < n; ++i) out.push_back({i, i});
  return out;
}

CoverProblem linear_interval_cover_problem(const PartialOrder& p) {
  return CoverProblem(bipartite_complement(domination_bigraph(p)), e0_edges(p.size()));
}

std::optional<ChainCover> recognize_linear_interval_order(const PartialOrder& p) {
  const CoverProblem problem = linear_interval_cover_problem(p);
  auto result = solve_restricted_cover(problem);
  if (auto* cover = std::get_if<ChainCover>(&result)) return std::move(*cover);
  return std::nullopt;
}

}  // namespace pitri
