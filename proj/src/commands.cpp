#include "pitri/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "pitri/genio.hpp"

namespace pitri::cli {

using nlohmann::json;

namespace {

json pairs_json(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json pairs_json(const std::vector<VertexPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json chain_cover_json(const ChainCover& c) { return {{"g1", pairs_json(c.g1)}, {"g2", pairs_json(c.g2)}}; }

std::vector<VertexPair> read_pairs(const json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string("certificate: '") + field + "' must be an array");
  std::vector<VertexPair> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw InputError(std::string("certificate: '") + field + "' entries must be [int, int]");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

ChainCover read_cover(const json& cert) {
  if (!cert.contains("cover") || !cert["cover"].is_object()) throw InputError("certificate: missing 'cover'");
  const json& c = cert["cover"];
  if (!c.contains("g1") || !c.contains("g2")) throw InputError("certificate: cover needs 'g1' and 'g2'");
  ChainCover out;
  for (const auto& [a, b] : read_pairs(c["g1"], "g1")) out.g1.push_back({a, b});
  for (const auto& [a, b] : read_pairs(c["g2"], "g2")) out.g2.push_back({a, b});
  return out;
}

// Cover check that reports foreign edges as a violation instead of throwing.
std::string check_cover(const CoverProblem& p, const ChainCover& c) {
  for (const EdgeSet* side : {&c.g1, &c.g2}) {
    for (const Edge& e : *side) {
      if (!p.graph().has_edge(e)) return "cover contains " + to_string(e) + ", which is not an edge";
    }
  }
  const CoverVerdict v = verify_cover(p, c);
  return v.valid ? std::string{} : "cover fails " + v.violation + ": " + v.witness;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

json recognition_json(const RecognitionResult& r) {
  json out;
  if (r.verdict == Verdict::Yes) {
    out["verdict"] = "yes";
    out["orientation"] = pairs_json(r.orientation->pairs());
    out["cover"] = chain_cover_json(*r.cover);
  } else {
    out["verdict"] = "no";
    out["reason"] = to_string(r.reason);
  }
  return out;
}

json order_json(const std::optional<ChainCover>& cover) {
  if (!cover) return {{"verdict", "no"}, {"reason", to_string(RejectReason::NoLinearIntervalCover)}};
  return {{"verdict", "yes"}, {"cover", chain_cover_json(*cover)}};
}

json cover_json(const CoverResult& r) {
  if (const auto* c = std::get_if<ChainCover>(&r)) return {{"verdict", "yes"}, {"cover", chain_cover_json(*c)}};
  return {{"verdict", "no"}, {"reason", "Infeasible: " + std::get<Infeasible>(r).reason}};
}

json recognize_instance(const Instance& inst, const std::string& kind) {
  if (kind == "pst") {
    const auto* g = std::get_if<SimpleGraph>(&inst);
    if (!g) throw InputError("--kind=pst expects a 'graph' instance");
    return recognition_json(recognize_simple_triangle(*g));
  }
  if (kind == "lio") {
    const auto* p = std::get_if<PartialOrder>(&inst);
    if (!p) throw InputError("--kind=lio expects an 'order' instance");
    return order_json(recognize_linear_interval_order(*p));
  }
  throw InputError("unknown kind '" + kind + "' (expected pst or lio)");
}

std::string check_certificate(const Instance& inst, const json& cert) {
  if (!cert.is_object() || !cert.contains("verdict") || !cert["verdict"].is_string()) {
    throw InputError("certificate: missing 'verdict'");
  }
  const std::string verdict = cert["verdict"];
  if (verdict != "yes" && verdict != "no") throw InputError("certificate: verdict must be 'yes' or 'no'");

  // A "no" carries nothing checkable beyond the verdict itself, so it is
  // confirmed by re-running the exact decision procedure.
  if (verdict == "no") {
    bool yes = false;
    if (const auto* g = std::get_if<SimpleGraph>(&inst)) {
      yes = recognize_simple_triangle(*g).verdict == Verdict::Yes;
    } else if (const auto* p = std::get_if<PartialOrder>(&inst)) {
      yes = recognize_linear_interval_order(*p).has_value();
    } else {
      yes = std::holds_alternative<ChainCover>(solve_restricted_cover(std::get<CoverProblem>(inst)));
    }
    return yes ? "certificate claims no, but the instance is a yes-instance" : "";
  }

  const ChainCover cover = read_cover(cert);
  if (const auto* g = std::get_if<SimpleGraph>(&inst)) {
    if (!cert.contains("orientation")) throw InputError("certificate: missing 'orientation'");
    const auto orientation = read_pairs(cert["orientation"], "orientation");
    return check_simple_triangle_certificate(*g, orientation, cover);
  }
  if (const auto* p = std::get_if<PartialOrder>(&inst)) {
    return check_cover(linear_interval_cover_problem(*p), cover);
  }
  return check_cover(std::get<CoverProblem>(inst), cover);
}

int cmd_recognize(const std::string& path, const std::string& kind, std::ostream& out, std::ostream& err) {
  try {
    const json report = recognize_instance(load_instance(path), kind);
    out << report.dump() << '\n';
    return report["verdict"] == "yes" ? kExitYes : kExitNo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_cover(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const Instance inst = load_instance(path);
    const auto* p = std::get_if<CoverProblem>(&inst);
    if (!p) throw InputError("cover expects a 'bigraph' instance");
    const CoverResult result = solve_restricted_cover(*p);
    out << cover_json(result).dump() << '\n';
    return std::holds_alternative<ChainCover>(result) ? kExitYes : kExitNo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_verify(const std::string& instance_path, const std::string& certificate_path, std::ostream& out,
               std::ostream& err) {
  try {
    const Instance inst = load_instance(instance_path);
    const json cert = load_json(certificate_path);
    const std::string problem = check_certificate(inst, cert);
    if (problem.empty()) {
      out << "valid\n";
      return kExitYes;
    }
    out << "invalid: " << problem << '\n';
    return kExitNo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

namespace {

int param_int(const std::vector<std::string>& params, std::size_t i) {
  if (i >= params.size()) throw InputError("missing parameter " + std::to_string(i + 1));
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(params[i], &used);
  } catch (const std::exception&) {
    throw InputError("parameter '" + params[i] + "' is not an integer");
  }
  if (used != params[i].size() || v < 0) throw InputError("parameter '" + params[i] + "' is not a count");
  return v;
}

double param_double(const std::vector<std::string>& params, std::size_t i) {
  if (i >= params.size()) throw InputError("missing parameter " + std::to_string(i + 1));
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(params[i], &used);
  } catch (const std::exception&) {
    throw InputError("parameter '" + params[i] + "' is not a number");
  }
  if (used != params[i].size()) throw InputError("parameter '" + params[i] + "' is not a number");
  return v;
}

void expect_params(const std::vector<std::string>& params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi) throw InputError("wrong number of parameters");
}

}  // namespace

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
            std::ostream& out, std::ostream& err) {
  try {
    if (family == "triangle" || family == "triangle-order") {
      expect_params(params, 1, 1);
      const auto rep = gen_triangle_representation(param_int(params, 0), seed);
      out << (family == "triangle" ? format_instance(intersection_graph(rep))
                                   : format_instance(order_of_representation(rep)));
    } else if (family == "permutation") {
      expect_params(params, 1, 1);
      out << format_instance(gen_permutation_graph(param_int(params, 0), seed));
    } else if (family == "interval") {
      expect_params(params, 1, 1);
      out << format_instance(gen_interval_graph(param_int(params, 0), seed));
    } else if (family == "bipartite") {
      expect_params(params, 3, 4);
      const auto g = gen_random_bipartite(param_int(params, 0), param_int(params, 1), param_double(params, 2), seed);
      const double f_density = params.size() > 3 ? param_double(params, 3) : 0.0;
      // F draws from its own stream so that adding F keeps the graph unchanged.
      out << format_instance(CoverProblem(g, gen_random_F(g, f_density, seed ^ 0x9e3779b97f4a7c15ULL)));
    } else {
      throw InputError("unknown family '" + family +
                       "' (expected triangle, triangle-order, permutation, interval, bipartite)");
    }
    return kExitYes;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace pitri::cli
