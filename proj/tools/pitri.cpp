// pitri: simple-triangle graph / linear-interval order recognition.
//
//   pitri recognize FILE [--kind pst|lio]
//   pitri cover FILE
//   pitri verify INSTANCE CERTIFICATE
//   pitri gen FAMILY PARAMS... [--seed N]
//   pitri audit [--max-size N] [--trials N] [--seed N]
//
// Exit codes: 0 yes / valid, 1 no / invalid, 2 error.

#include <iostream>

#include <CLI11.hpp>

#include "pitri/audit.hpp"
#include "pitri/commands.hpp"

int main(int argc, char** argv) {
  using namespace pitri::cli;

  CLI::App app{"Recognize simple-triangle graphs and linear-interval orders with checkable certificates"};
  app.require_subcommand(1);

  std::string path, kind = "pst";
  auto* recognize = app.add_subcommand("recognize", "Decide a graph (pst) or order (lio) instance");
  recognize->add_option("file", path, "Instance file")->required();
  recognize->add_option("--kind", kind, "pst: simple-triangle graph, lio: linear-interval order")
      ->check(CLI::IsMember({"pst", "lio"}));

  auto* cover = app.add_subcommand("cover", "Solve a restricted 2-chain subgraph cover instance");
  cover->add_option("file", path, "bigraph instance file")->required();

  std::string certificate;
  auto* verify = app.add_subcommand("verify", "Check a JSON certificate against an instance");
  verify->add_option("instance", path, "Instance file")->required();
  verify->add_option("certificate", certificate, "Certificate JSON file")->required();

  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a generated instance to standard output");
  gen->add_option("family", family, "triangle | triangle-order | permutation | interval | bipartite")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Random seed");

  AuditOptions audit_options;
  auto* audit = app.add_subcommand("audit", "Compare the pipeline against brute-force oracles");
  audit->add_option("--max-size", audit_options.max_size, "Largest side of random instances")
      ->check(CLI::Range(1, 64));
  audit->add_option("--trials", audit_options.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  audit->add_option("--seed", audit_options.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*recognize) return cmd_recognize(path, kind, std::cout, std::cerr);
    if (*cover) return cmd_cover(path, std::cout, std::cerr);
    if (*verify) return cmd_verify(path, certificate, std::cout, std::cerr);
    if (*gen) return cmd_gen(family, params, seed, std::cout, std::cerr);
    if (*audit) return cmd_audit(audit_options, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
