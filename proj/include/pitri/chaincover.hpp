#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pitri/bigraph.hpp"
#include "pitri/twosat.hpp"

namespace pitri {

/// Instance of the restricted 2-chain subgraph cover problem: cover E(G) by two
/// chain subgraphs G1, G2 such that G1 avoids every edge of `forbidden` (F).
class CoverProblem {
 public:
  CoverProblem() = default;
  /// Throws InputError unless F is a subset of E(G). F is normalized.
  CoverProblem(BipartiteGraph graph, EdgeSet forbidden);

  const BipartiteGraph& graph() const { return graph_; }
  const EdgeSet& forbidden() const { return forbidden_; }
  /// Indexed by edge id.
  bool is_forbidden(int edge_id) const { return in_f_[edge_id]; }
  bool is_forbidden(Edge e) const {
    const int id = graph_.has_edge(e) ? graph_.edge_id(e) : -1;
    return id >= 0 && in_f_[id];
  }

 private:
  BipartiteGraph graph_;
  EdgeSet forbidden_;
  std::vector<bool> in_f_;
};

/// Red/blue colouring (E_r, E_b) of the committed edges E_c.
struct EdgeBipartition {
  EdgeSet red;
  EdgeSet blue;

  bool operator==(const EdgeBipartition&) const = default;
};

enum class ConfigKind { A1, A2, B1, B2, C };

const char* to_string(ConfigKind kind);

inline constexpr ConfigKind kAllKinds[] = {ConfigKind::A1, ConfigKind::A2, ConfigKind::B1,
                                           ConfigKind::B2, ConfigKind::C};
inline constexpr ConfigKind kAcKinds[] = {ConfigKind::A1, ConfigKind::A2, ConfigKind::C};

/// Four vertices u1, u2 in U and v1, v2 in V. Every kind has u1v1 and u2v2
/// coloured and u1v2 a non-edge; the kind fixes the colours and the status of
/// u2v1:
///   A1  u1v1, u2v2 red;  u2v1 non-edge
///   A2  u1v1, u2v2 blue; u2v1 non-edge
///   B1  u1v1, u2v2 red;  u2v1 blue
///   B2  u1v1, u2v2 blue; u2v1 red
///   C   u1v1, u2v2 red;  u2v1 in F
/// A1 and A2 are symmetric in (u1v1, u2v2) and reported once, with u1v1 < u2v2.
struct ForbiddenConfiguration {
  ConfigKind kind;
  int u1, v1, u2, v2;

  bool operator==(const ForbiddenConfiguration&) const = default;
};

/// Pair (G1, G2) of edge sets; the YES certificate.
struct ChainCover {
  EdgeSet g1;
  EdgeSet g2;

  bool operator==(const ChainCover&) const = default;
};

/// 2CNF whose models are exactly the (A, C)-free bipartitions that keep F blue.
/// Variable i belongs to committed edge `variable_edge[i]`; x = false means red.
struct PartitionFormula {
  TwoSatInstance formula;
  std::vector<Edge> variable_edge;
};

PartitionFormula build_partition_formula(const CoverProblem& p, const EdgeClassification& cls);

/// Step 1. nullopt when the partition formula is unsatisfiable, in which case
/// no restricted cover exists.
std::optional<EdgeBipartition> ac_free_bipartition(const CoverProblem& p);

/// Exhaustive O(m^2) scan for configurations of the requested kinds. `b` must
/// colour exactly the committed edges of p.graph().
std::vector<ForbiddenConfiguration> find_configurations(const CoverProblem& p, const EdgeBipartition& b,
                                                        std::span<const ConfigKind> kinds);

/// Swaps, for the non-edge uv, the red edges of every B2 and the blue edges of
/// every B1 that has uv as its non-edge. Throws ContractError if `b` is not
/// (A, C)-free, if uv is an edge, or if a forbidden edge would turn red.
EdgeBipartition swap_step(const CoverProblem& p, const EdgeBipartition& b, Edge non_edge);

/// Step 2: one swap_step per non-edge in lexicographic order. Throws
/// ContractError if `b` is not (A, C)-free.
EdgeBipartition abc_free_bipartition(const CoverProblem& p, const EdgeBipartition& b);

/// Vertices u_0..u_{k-1} (left) and v_0..v_{k-1} (right) with u_i v_i a non-edge
/// of H and u_{i+1} v_i in M, indices mod k.
struct AlternatingCycle {
  std::vector<int> us;
  std::vector<int> vs;
};

/// Checks the alternation and distinctness conditions of `cycle` against (H, M).
bool is_alternating_cycle(const BipartiteGraph& h, std::span<const Edge> m, const AlternatingCycle& cycle);

/// Chain completion of M in H: a chain edge set C with M ⊆ C ⊆ E(H). Peels
/// vertices that have no M-edge (isolated) or no non-edge (dominating) among the
/// remaining vertices; when peeling gets stuck the remaining vertices contain an
/// alternating cycle, which is returned instead. Linear in |V(H)| + |E(H)|.
/// Throws InputError if M is not a subset of E(H).
std::variant<EdgeSet, AlternatingCycle> chain_completion(const BipartiteGraph& h, std::span<const Edge> m);

struct Infeasible {
  std::string reason;
};

using CoverResult = std::variant<ChainCover, Infeasible>;

/// Full pipeline: classify, Step 1 (2SAT), Step 2 (swaps), then
/// G2 = E_b ∪ E_u and G1 = chain completion of E_r in G - F.
CoverResult solve_restricted_cover(const CoverProblem& p);

struct CoverVerdict {
  bool valid = true;
  /// One of "union", "F-disjointness", "g1-chain", "g2-chain"; empty when valid.
  std::string violation;
  std::string witness;
};

/// Checks E1 ∪ E2 = E, E1 ∩ F = ∅ and that both sides are chain graphs.
/// Throws InputError if either side contains a pair that is not an edge of G.
CoverVerdict verify_cover(const CoverProblem& p, const ChainCover& c);

}  // namespace pitri
