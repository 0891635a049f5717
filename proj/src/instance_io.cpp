#include "pitri/instance_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace pitri {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

int to_int(const Line& line, const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size() || value < 0) fail(line, "expected a non-negative integer, got '" + token + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) fail(line, "expected " + std::to_string(n) + " fields");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw InputError("empty instance file");
  const Line& header = lines.front();
  const std::string& kind = header.tokens.front();

  // Body lines: exactly `count` lines tagged `tag`, plus any tagged `extra`.
  auto body = [&](const std::string& tag, std::size_t count, const std::string& extra,
                  std::vector<VertexPair>& main, std::vector<VertexPair>& more) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      expect_arity(line, 3);
      const VertexPair pair{to_int(line, line.tokens[1]), to_int(line, line.tokens[2])};
      if (line.tokens[0] == tag) {
        main.push_back(pair);
      } else if (!extra.empty() && line.tokens[0] == extra) {
        more.push_back(pair);
      } else {
        fail(line, "unexpected record '" + line.tokens[0] + "'");
      }
    }
    if (main.size() != count) {
      throw InputError("header announces " + std::to_string(count) + " '" + tag + "' lines, found " +
                       std::to_string(main.size()));
    }
  };

  std::vector<VertexPair> pairs, extra;
  if (kind == "graph") {
    expect_arity(header, 3);
    const int n = to_int(header, header.tokens[1]);
    body("e", static_cast<std::size_t>(to_int(header, header.tokens[2])), "", pairs, extra);
    return SimpleGraph::from_edge_list(n, pairs);
  }
  if (kind == "order") {
    expect_arity(header, 3);
    const int n = to_int(header, header.tokens[1]);
    body("r", static_cast<std::size_t>(to_int(header, header.tokens[2])), "", pairs, extra);
    return PartialOrder::from_pairs(n, pairs);
  }
  if (kind == "bigraph") {
    expect_arity(header, 4);
    const int nu = to_int(header, header.tokens[1]);
    const int nv = to_int(header, header.tokens[2]);
    body("e", static_cast<std::size_t>(to_int(header, header.tokens[3])), "f", pairs, extra);
    EdgeSet edges, forbidden;
    for (const auto& [a, b] : pairs) edges.push_back({a, b});
    for (const auto& [a, b] : extra) forbidden.push_back({a, b});
    return CoverProblem(BipartiteGraph::from_edge_list(nu, nv, edges), std::move(forbidden));
  }
  fail(header, "unknown instance kind '" + kind + "'");
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string format_instance(const SimpleGraph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << "graph " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [a, b] : edges) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

std::string format_instance(const PartialOrder& p) {
  std::ostringstream out;
  const auto pairs = p.pairs();
  out << "order " << p.size() << ' ' << pairs.size() << '\n';
  for (const auto& [a, b] : pairs) out << "r " << a << ' ' << b << '\n';
  return out.str();
}

std::string format_instance(const CoverProblem& p) {
  std::ostringstream out;
  const BipartiteGraph& g = p.graph();
  out << "bigraph " << g.u_count() << ' ' << g.v_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const Edge& e : p.forbidden()) out << "f " << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace pitri
