#include "pitri/twosat.hpp"

#include <algorithm>
#include <sstream>

#include "pitri/bigraph.hpp"

namespace pitri {

TwoSatInstance::TwoSatInstance(int var_count) : var_count_(var_count) {
  if (var_count < 0) throw InputError("2sat: negative variable count");
  if (var_count > (1 << 30)) throw InputError("2sat: more variables than a literal can index");
}

void TwoSatInstance::add_clause(Literal a, Literal b) {
  for (const Literal& l : {a, b}) {
    if (l.var < 0 || l.var >= var_count_) {
      throw InputError("2sat: variable " + std::to_string(l.var) + " out of range");
    }
  }
  clauses_.emplace_back(a, b);
}

std::string TwoSatInstance::to_dimacs() const {
  std::ostringstream out;
  auto lit = [](Literal l) { return l.positive ? l.var + 1 : -(l.var + 1); };
  out << "p cnf " << var_count_ << ' ' << clauses_.size() << '\n';
  for (const auto& [a, b] : clauses_) {
    out << lit(a) << ' ';
    if (!(a == b)) out << lit(b) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const TwoSatInstance& inst, const Assignment& values) {
  if (static_cast<int>(values.size()) != inst.var_count()) return false;
  auto holds = [&](Literal l) { return values[l.var] == l.positive; };
  for (const auto& [a, b] : inst.clauses()) {
    if (!holds(a) && !holds(b)) return false;
  }
  return true;
}

namespace {

// Node 2*x is the literal x, node 2*x+1 is its negation.
int node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

}  // namespace

std::optional<Assignment> solve(const TwoSatInstance& inst) {
  const int n = 2 * inst.var_count();

  // Implication graph in CSR form: clause (a | b) gives !a -> b and !b -> a.
  std::vector<int> offsets(n + 1, 0);
  for (const auto& [a, b] : inst.clauses()) {
    ++offsets[node(!a) + 1];
    ++offsets[node(!b) + 1];
  }
  for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<int> targets(offsets[n]);
  {
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& [a, b] : inst.clauses()) {
      targets[fill[node(!a)]++] = node(b);
      targets[fill[node(!b)]++] = node(a);
    }
  }

  // Iterative Tarjan. Components are numbered in reverse topological order.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack, edge_pos(n, 0);
  std::vector<int> call;
  int counter = 0;
  int comp_count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      const int x = call.back();
      if (edge_pos[x] < offsets[x + 1] - offsets[x]) {
        const int y = targets[offsets[x] + edge_pos[x]++];
        if (index[y] < 0) {
          index[y] = low[y] = counter++;
          stack.push_back(y);
          call.push_back(y);
        } else if (comp[y] < 0) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[x]);
      if (low[x] == index[x]) {
        int y;
        do {
          y = stack.back();
          stack.pop_back();
          comp[y] = comp_count;
        } while (y != x);
        ++comp_count;
      }
    }
  }

  Assignment values(static_cast<std::size_t>(inst.var_count()));
  for (int x = 0; x < inst.var_count(); ++x) {
    const int t = comp[2 * x];
    const int f = comp[2 * x + 1];
    if (t == f) return std::nullopt;
    // x is true iff its component is topologically after that of !x.
    values[x] = t < f;
  }
  return values;
}

}  // namespace pitri
