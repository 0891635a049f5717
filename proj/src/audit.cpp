#include "pitri/audit.hpp"

#include <algorithm>
#include <ostream>

#include "pitri/genio.hpp"
#include "pitri/oracles.hpp"

namespace pitri::cli {

namespace {

// Random cover instance small enough for the exhaustive oracle.
CoverProblem random_cover_problem(Rng& rng, int max_size) {
  while (true) {
    const int nu = rng.uniform(1, max_size);
    const int nv = rng.uniform(1, max_size);
    const double density = 0.2 + 0.6 * rng.unit();
    const auto g = gen_random_bipartite(nu, nv, density, rng.next());
    if (g.edge_count() > kOracleMaxCoverEdges) continue;
    const double f_density = 0.5 * rng.unit();
    return CoverProblem(g, gen_random_F(g, f_density, rng.next()));
  }
}

bool completion_ok(const BipartiteGraph& h, const EdgeSet& m, const EdgeSet& c) {
  return std::includes(c.begin(), c.end(), m.begin(), m.end()) &&
         std::all_of(c.begin(), c.end(), [&](const Edge& e) { return h.has_edge(e); }) && oracle_is_chain(c);
}

}  // namespace

AuditSummary run_audit(const AuditOptions& options) {
  AuditSummary s;
  Rng rng(options.seed);
  const int max_size = std::max(1, options.max_size);
  const int cycle_side = std::min(max_size, kOracleMaxCycleSide);

  for (int trial = 0; trial < options.trials; ++trial) {
    {
      const CoverProblem p = random_cover_problem(rng, max_size);
      const CoverResult result = options.solver(p);
      const auto* cover = std::get_if<ChainCover>(&result);
      ++s.cover_checked;
      if ((cover != nullptr) != oracle_cover_exists(p)) ++s.cover_disagreements;
      if (cover && !verify_cover(p, *cover).valid) ++s.certificate_failures;
    }
    {
      const int nu = rng.uniform(1, cycle_side);
      const int nv = rng.uniform(1, cycle_side);
      const double density = 0.3 + 0.6 * rng.unit();
      const auto h = gen_random_bipartite(nu, nv, density, rng.next());
      const double m_density = rng.unit();
      const EdgeSet m = gen_random_F(h, m_density, rng.next());
      const auto result = chain_completion(h, m);
      const bool has_cycle = oracle_alternating_cycle(h, m).has_value();
      ++s.completion_checked;
      if (const auto* c = std::get_if<EdgeSet>(&result)) {
        if (has_cycle || !completion_ok(h, m, *c)) ++s.completion_disagreements;
      } else if (!has_cycle || !is_alternating_cycle(h, m, std::get<AlternatingCycle>(result))) {
        ++s.completion_disagreements;
      }
    }
    {
      const int vars = rng.uniform(1, 12);
      const int clauses = rng.uniform(0, 3 * vars);
      TwoSatInstance inst(vars);
      for (int c = 0; c < clauses; ++c) {
        const Literal a{rng.uniform(0, vars - 1), rng.chance(0.5)};
        const Literal b{rng.uniform(0, vars - 1), rng.chance(0.5)};
        inst.add_clause(a, b);
      }
      const auto model = solve(inst);
      ++s.sat_checked;
      if (model.has_value() != oracle_2sat_satisfiable(inst) || (model && !satisfies(inst, *model))) {
        ++s.sat_disagreements;
      }
    }
  }
  return s;
}

int cmd_audit(const AuditOptions& options, std::ostream& out) {
  const AuditSummary s = run_audit(options);
  out << "cover instances:      " << s.cover_checked << " checked, " << s.cover_disagreements
      << " verdict disagreements, " << s.certificate_failures << " invalid certificates\n"
      << "chain completions:    " << s.completion_checked << " checked, " << s.completion_disagreements
      << " disagreements\n"
      << "2SAT instances:       " << s.sat_checked << " checked, " << s.sat_disagreements << " disagreements\n"
      << (s.disagreements() == 0 ? "audit passed\n" : "audit FAILED\n");
  return s.disagreements() == 0 ? 0 : 1;
}

}  // namespace pitri::cli
