#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pitri {

// Packed so a clause is 8 bytes; large formulas are read bandwidth-bound.
struct Literal {
  int var : 31 = 0;
  bool positive : 1 = true;

  Literal operator!() const { return {var, !positive}; }
  bool operator==(const Literal&) const = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

using Clause = std::pair<Literal, Literal>;

/// Truth value per variable.
using Assignment = std::vector<bool>;

/// CNF formula with at most two literals per clause. A unit clause (l) is
/// stored as (l, l).
class TwoSatInstance {
 public:
  explicit TwoSatInstance(int var_count = 0);

  int var_count() const { return var_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Throws InputError on a variable index outside [0, var_count).
  void add_clause(Literal a, Literal b);
  void add_unit(Literal a) { add_clause(a, a); }
  /// Capacity hint for callers that can bound the clause count.
  void reserve(std::size_t clauses) { clauses_.reserve(clauses); }

  /// DIMACS CNF text: "p cnf <vars> <clauses>" then one "a b 0" line per clause,
  /// literals 1-based and signed. Unit clauses are written with one literal.
  std::string to_dimacs() const;

 private:
  int var_count_;
  std::vector<Clause> clauses_;
};

bool satisfies(const TwoSatInstance& inst, const Assignment& values);

/// Implication graph + Tarjan SCC, linear in var_count + clause count.
/// Returns nullopt iff the formula is unsatisfiable.
std::optional<Assignment> solve(const TwoSatInstance& inst);

}  // namespace pitri
