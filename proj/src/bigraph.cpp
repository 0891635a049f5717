#include "pitri/bigraph.hpp"

#include <algorithm>
#include <numeric>

namespace pitri {

void normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string to_string(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

BipartiteGraph::BipartiteGraph(int u_count, int v_count) : u_count_(u_count), v_count_(v_count) {
  if (u_count < 0 || v_count < 0) {
    throw InputError("bipartite graph: negative side size");
  }
  rebuild_index();
}

BipartiteGraph BipartiteGraph::from_edge_list(int u_count, int v_count, std::span<const Edge> pairs) {
  BipartiteGraph g(u_count, v_count);
  for (const Edge& e : pairs) {
    if (!g.in_range(e)) {
      throw InputError("bipartite graph: edge " + to_string(e) + " out of range");
    }
  }
  g.edges_.assign(pairs.begin(), pairs.end());
  normalize(g.edges_);
  g.rebuild_index();
  return g;
}

void BipartiteGraph::rebuild_index() {
  ids_.assign(static_cast<std::size_t>(u_count_) * static_cast<std::size_t>(v_count_), -1);
  u_offsets_.assign(static_cast<std::size_t>(u_count_) + 1, 0);
  adj_v_.clear();
  adj_v_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    ids_[slot(e.u, e.v)] = static_cast<int>(i);
    ++u_offsets_[e.u + 1];
    adj_v_.push_back(e.v);
  }
  std::partial_sum(u_offsets_.begin(), u_offsets_.end(), u_offsets_.begin());
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  EdgeSet non_edges;
  non_edges.reserve(g.non_edge_count());
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    }
  }
  return BipartiteGraph::from_edge_list(g.u_count(), g.v_count(), non_edges);
}

namespace {

bool conflict_unchecked(const BipartiteGraph& g, Edge e, Edge f) {
  return e.u != f.u && e.v != f.v && !g.has_edge(e.u, f.v) && !g.has_edge(f.u, e.v);
}

}  // namespace

bool in_conflict(const BipartiteGraph& g, Edge e, Edge f) {
  if (!g.has_edge(e) || !g.has_edge(f)) {
    throw InputError("in_conflict: " + to_string(g.has_edge(e) ? f : e) + " is not an edge");
  }
  return conflict_unchecked(g, e, f);
}

NonEdgeLists non_edge_lists(const BipartiteGraph& g) {
  NonEdgeLists out;
  out.by_u.resize(static_cast<std::size_t>(g.u_count()));
  out.by_v.resize(static_cast<std::size_t>(g.v_count()));
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      out.by_u[u].push_back(v);
      out.by_v[v].push_back(u);
    }
  }
  return out;
}

EdgeClassification classify_edges(const BipartiteGraph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  EdgeClassification out;
  out.is_committed.assign(m, false);
  if (m <= g.non_edge_count()) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (conflict_unchecked(g, edges[i], edges[j])) out.is_committed[i] = out.is_committed[j] = true;
      }
    }
  } else {
    // Partner of (u1, v1) is any edge (u2, v2) with u1v2 and u2v1 both missing.
    const NonEdgeLists holes = non_edge_lists(g);
    for (std::size_t i = 0; i < m; ++i) {
      if (out.is_committed[i]) continue;
      const auto [u1, v1] = edges[i];
      for (int u2 : holes.by_v[v1]) {
        for (int v2 : holes.by_u[u1]) {
          const int j = g.edge_id(u2, v2);
          if (j >= 0) out.is_committed[i] = out.is_committed[j] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    (out.is_committed[i] ? out.committed : out.uncommitted).push_back(edges[i]);
  }
  return out;
}

ChainTest is_chain_graph(const BipartiteGraph& g, std::span<const Edge> edge_subset) {
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.u_count()));
  for (const Edge& e : edge_subset) {
    if (!g.has_edge(e)) {
      throw InputError("is_chain_graph: " + to_string(e) + " is not an edge of the graph");
    }
    nbrs[e.u].push_back(e.v);
  }
  for (auto& n : nbrs) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }

  std::vector<int> order(nbrs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return nbrs[a].size() < nbrs[b].size(); });

  // marker[v] == stamp  <=>  v is in the neighbourhood of the larger vertex.
  std::vector<int> marker(static_cast<std::size_t>(g.v_count()), -1);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const int small = order[i];
    const int large = order[i + 1];
    for (int v : nbrs[large]) marker[v] = static_cast<int>(i);
    for (int v : nbrs[small]) {
      if (marker[v] == static_cast<int>(i)) continue;
      // |N(small)| <= |N(large)| and N(small) has v outside N(large), so
      // N(large) has some w outside N(small).
      const auto& ns = nbrs[small];
      for (int w : nbrs[large]) {
        if (!std::binary_search(ns.begin(), ns.end(), w)) {
          return {false, std::make_pair(Edge{small, v}, Edge{large, w})};
        }
      }
      throw ContractError("is_chain_graph: degree order broken");
    }
  }
  return {};
}

}  // namespace pitri
