#include "pitri/chaincover.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace pitri {

CoverProblem::CoverProblem(BipartiteGraph graph, EdgeSet forbidden)
    : graph_(std::move(graph)), forbidden_(std::move(forbidden)) {
  normalize(forbidden_);
  in_f_.assign(graph_.edge_count(), false);
  for (const Edge& e : forbidden_) {
    if (!graph_.has_edge(e)) {
      throw InputError("cover problem: forbidden pair " + to_string(e) + " is not an edge");
    }
    in_f_[graph_.edge_id(e)] = true;
  }
}

const char* to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::A1: return "A1";
    case ConfigKind::A2: return "A2";
    case ConfigKind::B1: return "B1";
    case ConfigKind::B2: return "B2";
    case ConfigKind::C: return "C";
  }
  return "?";
}

namespace {

enum Color : std::uint8_t { kUncommitted = 0, kRed = 1, kBlue = 2 };

using Coloring = std::vector<std::uint8_t>;

Color color_of(const BipartiteGraph& g, const Coloring& col, int u, int v) {
  const int id = g.edge_id(u, v);
  return id < 0 ? kUncommitted : static_cast<Color>(col[id]);
}

// Converts a public bipartition into a per-edge colouring, checking that it
// colours exactly E_c and keeps F off the red side.
Coloring to_coloring(const CoverProblem& p, const EdgeBipartition& b) {
  const BipartiteGraph& g = p.graph();
  Coloring col(g.edge_count(), kUncommitted);
  auto paint = [&](const EdgeSet& edges, Color c) {
    for (const Edge& e : edges) {
      if (!g.has_edge(e)) throw ContractError("bipartition: " + to_string(e) + " is not an edge");
      std::uint8_t& slot = col[g.edge_id(e)];
      if (slot != kUncommitted) throw ContractError("bipartition: " + to_string(e) + " coloured twice");
      slot = c;
    }
  };
  paint(b.red, kRed);
  paint(b.blue, kBlue);
  const EdgeClassification cls = classify_edges(g);
  for (std::size_t i = 0; i < col.size(); ++i) {
    if ((col[i] != kUncommitted) != cls.is_committed[i]) {
      throw ContractError("bipartition: colours " + to_string(g.edges()[i]) +
                          (cls.is_committed[i] ? " missing" : " which is uncommitted"));
    }
    if (col[i] == kRed && p.is_forbidden(static_cast<int>(i))) {
      throw ContractError("bipartition: forbidden edge " + to_string(g.edges()[i]) + " is red");
    }
  }
  return col;
}

EdgeBipartition to_bipartition(const BipartiteGraph& g, const Coloring& col) {
  EdgeBipartition b;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (col[i] == kRed) b.red.push_back(edges[i]);
    if (col[i] == kBlue) b.blue.push_back(edges[i]);
  }
  return b;
}

bool wants(std::span<const ConfigKind> kinds, ConfigKind k) {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

std::vector<ForbiddenConfiguration> scan_configurations(const CoverProblem& p, const Coloring& col,
                                                        std::span<const ConfigKind> kinds) {
  const BipartiteGraph& g = p.graph();
  const auto edges = g.edges();
  std::vector<ForbiddenConfiguration> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (col[i] == kUncommitted) continue;
    const auto [u1, v1] = edges[i];
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (col[j] != col[i]) continue;
      const auto [u2, v2] = edges[j];
      if (u1 == u2 || v1 == v2 || g.has_edge(u1, v2)) continue;
      const bool red = col[i] == kRed;
      const int cross = g.edge_id(u2, v1);
      auto add = [&](ConfigKind k) { out.push_back({k, u1, v1, u2, v2}); };
      if (cross < 0) {
        if (i < j && wants(kinds, red ? ConfigKind::A1 : ConfigKind::A2)) {
          add(red ? ConfigKind::A1 : ConfigKind::A2);
        }
        continue;
      }
      if (red && col[cross] == kBlue && wants(kinds, ConfigKind::B1)) add(ConfigKind::B1);
      if (!red && col[cross] == kRed && wants(kinds, ConfigKind::B2)) add(ConfigKind::B2);
      if (red && p.is_forbidden(cross) && wants(kinds, ConfigKind::C)) add(ConfigKind::C);
    }
  }
  return out;
}

// One swap for non-edge uv, in place. H is computed from the colours before
// any edge is flipped.
void swap_in_place(const CoverProblem& p, Coloring& col, Edge uv) {
  const BipartiteGraph& g = p.graph();
  const auto edges = g.edges();
  std::vector<int> flips;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (col[i] == kUncommitted) continue;
    const auto [u2, v2] = edges[i];
    const Color a = color_of(g, col, uv.u, v2);
    const Color b = color_of(g, col, u2, uv.v);
    if (a == kUncommitted || a != b || a == col[i]) continue;
    // Red edge with both links blue (H_r), or blue edge with both links red (H_b).
    flips.push_back(static_cast<int>(i));
  }
  for (int id : flips) {
    if (p.is_forbidden(id)) {
      throw ContractError("swap: forbidden edge " + to_string(edges[id]) + " would be swapped");
    }
    col[id] = col[id] == kRed ? kBlue : kRed;
  }
}

void require_ac_free(const CoverProblem& p, const Coloring& col, const char* where) {
  const auto found = scan_configurations(p, col, kAcKinds);
  if (!found.empty()) {
    const auto& c = found.front();
    throw ContractError(std::string(where) + ": bipartition is not (A,C)-free, has " + to_string(c.kind) +
                        " at u1=" + std::to_string(c.u1) + " v1=" + std::to_string(c.v1) +
                        " u2=" + std::to_string(c.u2) + " v2=" + std::to_string(c.v2));
  }
}

void swap_all_non_edges(const CoverProblem& p, Coloring& col) {
  const BipartiteGraph& g = p.graph();
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      if (!g.has_edge(u, v)) swap_in_place(p, col, {u, v});
    }
  }
}

std::optional<Coloring> step1_coloring(const CoverProblem& p, const EdgeClassification& cls) {
  const PartitionFormula pf = build_partition_formula(p, cls);
  const auto model = solve(pf.formula);
  if (!model) return std::nullopt;
  const BipartiteGraph& g = p.graph();
  Coloring col(g.edge_count(), kUncommitted);
  for (std::size_t x = 0; x < pf.variable_edge.size(); ++x) {
    const int id = g.edge_id(pf.variable_edge[x]);
    col[id] = (*model)[x] ? kBlue : kRed;
    if (col[id] == kRed && p.is_forbidden(id)) {
      throw ContractError("step 1: forbidden edge " + to_string(pf.variable_edge[x]) + " is red");
    }
  }
  return col;
}

}  // namespace

PartitionFormula build_partition_formula(const CoverProblem& p, const EdgeClassification& cls) {
  const BipartiteGraph& g = p.graph();
  if (cls.is_committed.size() != g.edge_count()) {
    throw ContractError("partition formula: classification does not match the graph");
  }
  PartitionFormula out;
  std::vector<int> ids;
  for (const Edge& e : cls.committed) {
    ids.push_back(g.edge_id(e));
    out.variable_edge.push_back(e);
  }
  out.formula = TwoSatInstance(static_cast<int>(ids.size()));
  TwoSatInstance& phi = out.formula;

  for (std::size_t x = 0; x < ids.size(); ++x) {
    if (p.is_forbidden(ids[x])) phi.add_unit(pos(static_cast<int>(x)));
  }
  // Pair clauses in lexicographic order of (x, y), whichever scan finds them:
  // a conflict gives two clauses, an induced P4 with forbidden middle edge one.
  const std::size_t m = g.edge_count();
  const std::size_t mhat = g.non_edge_count();
  if (m * m <= mhat * (mhat + p.forbidden().size())) {
    for (std::size_t x = 0; x < ids.size(); ++x) {
      const auto [u1, v1] = out.variable_edge[x];
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        const auto [u2, v2] = out.variable_edge[y];
        if (u1 == u2 || v1 == v2) continue;
        const int a = g.edge_id(u1, v2);
        const int b = g.edge_id(u2, v1);
        const int xi = static_cast<int>(x);
        const int yi = static_cast<int>(y);
        if (a < 0 && b < 0) {
          phi.add_clause(pos(xi), pos(yi));
          phi.add_clause(neg(xi), neg(yi));
        } else if ((a < 0 && p.is_forbidden(b)) || (b < 0 && p.is_forbidden(a))) {
          phi.add_clause(pos(xi), pos(yi));
        }
      }
    }
    return out;
  }

  // Dense case: every partner (u2, v2) of x = (u1, v1) has u2v1 missing or in
  // F and u1v2 missing or in F, not both in F. Walking u2 and then v2 upwards
  // meets partners in edge order, so clauses come out in the same order.
  std::vector<int> var_of(m, -1);
  for (std::size_t x = 0; x < ids.size(); ++x) var_of[ids[x]] = static_cast<int>(x);
  // Per vertex, the other endpoints of its non-edges (flag 0) and F-edges
  // (flag 1), ascending.
  std::vector<std::vector<std::pair<int, char>>> at_u(static_cast<std::size_t>(g.u_count()));
  std::vector<std::vector<std::pair<int, char>>> at_v(static_cast<std::size_t>(g.v_count()));
  for (int u = 0; u < g.u_count(); ++u) {
    for (int v = 0; v < g.v_count(); ++v) {
      const int id = g.edge_id(u, v);
      if (id >= 0 && !p.is_forbidden(id)) continue;
      const char in_f = id >= 0 ? 1 : 0;
      at_u[u].emplace_back(v, in_f);
      at_v[v].emplace_back(u, in_f);
    }
  }
  std::size_t bound = phi.clauses().size();
  for (const Edge& e : out.variable_edge) bound += 2 * at_v[e.v].size() * at_u[e.u].size();
  phi.reserve(bound);
  for (std::size_t x = 0; x < ids.size(); ++x) {
    const auto [u1, v1] = out.variable_edge[x];
    const int xi = static_cast<int>(x);
    for (const auto& [u2, f21] : at_v[v1]) {
      for (const auto& [v2, f12] : at_u[u1]) {
        if (f21 && f12) continue;
        const int id = g.edge_id(u2, v2);
        if (id < 0 || var_of[id] <= xi) continue;
        const int yi = var_of[id];
        phi.add_clause(pos(xi), pos(yi));
        if (!f21 && !f12) phi.add_clause(neg(xi), neg(yi));
      }
    }
  }
  return out;
}

std::optional<EdgeBipartition> ac_free_bipartition(const CoverProblem& p) {
  const auto col = step1_coloring(p, classify_edges(p.graph()));
  if (!col) return std::nullopt;
  return to_bipartition(p.graph(), *col);
}

std::vector<ForbiddenConfiguration> find_configurations(const CoverProblem& p, const EdgeBipartition& b,
                                                        std::span<const ConfigKind> kinds) {
  return scan_configurations(p, to_coloring(p, b), kinds);
}

EdgeBipartition swap_step(const CoverProblem& p, const EdgeBipartition& b, Edge non_edge) {
  const BipartiteGraph& g = p.graph();
  if (!g.in_range(non_edge) || g.has_edge(non_edge)) {
    throw ContractError("swap_step: " + to_string(non_edge) + " is not a non-edge");
  }
  Coloring col = to_coloring(p, b);
  require_ac_free(p, col, "swap_step");
  swap_in_place(p, col, non_edge);
  return to_bipartition(g, col);
}

EdgeBipartition abc_free_bipartition(const CoverProblem& p, const EdgeBipartition& b) {
  Coloring col = to_coloring(p, b);
  require_ac_free(p, col, "abc_free_bipartition");
  swap_all_non_edges(p, col);
  return to_bipartition(p.graph(), col);
}

bool is_alternating_cycle(const BipartiteGraph& h, std::span<const Edge> m, const AlternatingCycle& cycle) {
  const std::size_t k = cycle.us.size();
  if (k < 2 || cycle.vs.size() != k) return false;
  auto distinct = [](std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!distinct(cycle.us) || !distinct(cycle.vs)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Edge non_edge{cycle.us[i], cycle.vs[i]};
    const Edge m_edge{cycle.us[(i + 1) % k], cycle.vs[i]};
    if (!h.in_range(non_edge) || !h.in_range(m_edge)) return false;
    if (h.has_edge(non_edge)) return false;
    if (std::find(m.begin(), m.end(), m_edge) == m.end()) return false;
  }
  return true;
}

std::variant<EdgeSet, AlternatingCycle> chain_completion(const BipartiteGraph& h, std::span<const Edge> m) {
  const int nu = h.u_count();
  const int nv = h.v_count();
  const int n = nu + nv;
  const auto edges = h.edges();

  std::vector<bool> in_m(edges.size(), false);
  for (const Edge& e : m) {
    if (!h.has_edge(e)) throw InputError("chain_completion: " + to_string(e) + " is not an edge of H");
    in_m[h.edge_id(e)] = true;
  }

  // Vertices 0..nu-1 are U, nu..n-1 are V. adj holds H-edge ids.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back(static_cast<int>(i));
    adj[nu + edges[i].v].push_back(static_cast<int>(i));
  }
  auto side = [&](int x) { return x < nu ? 0 : 1; };
  auto other_end = [&](int x, int id) { return x < nu ? nu + edges[id].v : edges[id].u; };

  std::vector<int> deg_h(n), deg_m(n, 0);
  for (int x = 0; x < n; ++x) {
    deg_h[x] = static_cast<int>(adj[x].size());
    for (int id : adj[x]) deg_m[x] += in_m[id] ? 1 : 0;
  }
  int alive_count[2] = {nu, nv};
  std::vector<bool> alive(n, true);

  // bucket[s][k]: vertices of side s whose H-degree was k when recorded. A
  // vertex dominates once its H-degree equals the alive count of the other side.
  std::vector<std::vector<int>> bucket[2] = {std::vector<std::vector<int>>(nv + 1),
                                             std::vector<std::vector<int>>(nu + 1)};
  std::deque<int> queue;
  for (int x = 0; x < n; ++x) {
    bucket[side(x)][deg_h[x]].push_back(x);
    if (deg_m[x] == 0 || deg_h[x] == alive_count[1 - side(x)]) queue.push_back(x);
  }

  EdgeSet completion;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (!alive[x]) continue;
    const int s = side(x);
    const bool isolated = deg_m[x] == 0;
    alive[x] = false;
    --alive_count[s];
    for (int id : adj[x]) {
      const int y = other_end(x, id);
      if (!alive[y]) continue;
      if (!isolated) completion.push_back(edges[id]);
      --deg_h[y];
      bucket[1 - s][deg_h[y]].push_back(y);
      if (in_m[id] && --deg_m[y] == 0) queue.push_back(y);
    }
    for (int y : bucket[1 - s][alive_count[s]]) {
      if (alive[y] && deg_h[y] == alive_count[s]) queue.push_back(y);
    }
  }

  if (alive_count[0] == 0 || alive_count[1] == 0) {
    normalize(completion);
    return completion;
  }

  // Stuck: every remaining vertex has an M-edge and a non-edge into the
  // remaining graph. Follow non-edge then M-edge until a left vertex repeats.
  std::vector<int> seen_at(static_cast<std::size_t>(nu), -1);
  std::vector<int> us, vs;
  int u = 0;
  while (!alive[u]) ++u;
  while (seen_at[u] < 0) {
    seen_at[u] = static_cast<int>(us.size());
    us.push_back(u);
    int v = 0;
    while (v < nv && (!alive[nu + v] || h.has_edge(u, v))) ++v;
    if (v == nv) throw ContractError("chain_completion: remaining vertex has no non-edge");
    vs.push_back(v);
    int next = -1;
    for (int id : adj[nu + v]) {
      if (in_m[id] && alive[edges[id].u]) {
        next = edges[id].u;
        break;
      }
    }
    if (next < 0) throw ContractError("chain_completion: remaining vertex has no M-edge");
    u = next;
  }
  const auto start = static_cast<std::ptrdiff_t>(seen_at[u]);
  return AlternatingCycle{{us.begin() + start, us.end()}, {vs.begin() + start, vs.end()}};
}

CoverResult solve_restricted_cover(const CoverProblem& p) {
  const BipartiteGraph& g = p.graph();
  const EdgeClassification cls = classify_edges(g);
  auto col = step1_coloring(p, cls);
  if (!col) {
    return Infeasible{"partition formula unsatisfiable: no (A,C)-free bipartition of the committed edges"};
  }
  swap_all_non_edges(p, *col);

  ChainCover cover;
  EdgeSet red;
  EdgeSet g_minus_f;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((*col)[i] == kRed) {
      red.push_back(edges[i]);
    } else {
      cover.g2.push_back(edges[i]);
    }
    if (!p.is_forbidden(static_cast<int>(i))) g_minus_f.push_back(edges[i]);
  }

  const auto h = BipartiteGraph::from_edge_list(g.u_count(), g.v_count(), g_minus_f);
  auto completion = chain_completion(h, red);
  if (auto* cycle = std::get_if<AlternatingCycle>(&completion)) {
    throw ContractError("solve_restricted_cover: red edges have an alternating cycle of length " +
                        std::to_string(2 * cycle->us.size()) + " in G - F");
  }
  cover.g1 = std::move(std::get<EdgeSet>(completion));

  const CoverVerdict check = verify_cover(p, cover);
  if (!check.valid) {
    throw ContractError("solve_restricted_cover: produced cover fails " + check.violation + ": " + check.witness);
  }
  return cover;
}

CoverVerdict verify_cover(const CoverProblem& p, const ChainCover& c) {
  const BipartiteGraph& g = p.graph();
  std::vector<bool> covered(g.edge_count(), false);
  for (const EdgeSet* side : {&c.g1, &c.g2}) {
    for (const Edge& e : *side) {
      if (!g.has_edge(e)) throw InputError("verify_cover: " + to_string(e) + " is not an edge");
      covered[g.edge_id(e)] = true;
    }
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) return {false, "union", "edge " + to_string(g.edges()[i]) + " is in neither G1 nor G2"};
  }
  for (const Edge& e : c.g1) {
    if (p.is_forbidden(e)) return {false, "F-disjointness", "G1 contains forbidden edge " + to_string(e)};
  }
  auto chain_witness = [](const ChainTest& t) {
    return "induced 2K2 on " + to_string(t.witness->first) + " and " + to_string(t.witness->second);
  };
  if (const auto t = is_chain_graph(g, c.g1); !t.is_chain) return {false, "g1-chain", chain_witness(t)};
  if (const auto t = is_chain_graph(g, c.g2); !t.is_chain) return {false, "g2-chain", chain_witness(t)};
  return {};
}

}  // namespace pitri
