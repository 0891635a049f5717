#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "pitri/chaincover.hpp"

namespace pitri::cli {

using CoverSolver = std::function<CoverResult(const CoverProblem&)>;

struct AuditOptions {
  /// Largest side size of random instances (the cycle oracle caps it at 7).
  int max_size = 5;
  int trials = 1000;
  std::uint64_t seed = 1;
  /// The pipeline under audit; tests substitute a faulty one.
  CoverSolver solver = solve_restricted_cover;
};

struct AuditSummary {
  int cover_checked = 0;
  int cover_disagreements = 0;
  int certificate_failures = 0;
  int completion_checked = 0;
  int completion_disagreements = 0;
  int sat_checked = 0;
  int sat_disagreements = 0;

  int disagreements() const {
    return cover_disagreements + certificate_failures + completion_disagreements + sat_disagreements;
  }
};

/// Per trial: one random cover instance against oracle_cover_exists, one random
/// (H, M) against oracle_alternating_cycle, one random 2CNF against exhaustive
/// enumeration. Every positive answer's certificate is checked as well.
AuditSummary run_audit(const AuditOptions& options);

/// Prints the summary; returns 0 iff there were no disagreements.
int cmd_audit(const AuditOptions& options, std::ostream& out);

}  // namespace pitri::cli
