// Command-line front end for the test-selection library: generates minimal
// adequate test sets from criteria documents and exposes the reference
// oracles for cross-checking.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tselect/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"minimal test set generation for test-selection criteria"};
  app.set_version_flag("--version", "tselect 0.1.0");
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a minimal adequate test set");
  std::string input;
  gen->add_option("input", input, "instance or compose document")->required();
  std::string order = "input";
  gen->add_option("--order", order, "greedy processing order (default: input)")
      ->check(CLI::IsMember({"input", "smallest-first"}));
  std::uint64_t budget = 1000000;
  gen->add_option("--budget", budget, "normal-form term budget (default: 1000000)");
  std::string decompose = "auto";
  gen->add_option("--decompose", decompose,
                  "independent-component splitting (default: auto)")
      ->check(CLI::IsMember({"auto", "off"}));
  bool bound_only = false;
  gen->add_flag("--bound-only", bound_only,
                "report the pre-expansion size bound and stop");
  std::string output;
  gen->add_option("-o,--output", output, "write points to this file (atomic)");
  int verbosity = 0;
  gen->add_flag("-v,--verbose", verbosity, "print phase timings");

  // --- oracle ------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "slow reference oracles");
  oracle->require_subcommand(1);

  auto* minimum = oracle->add_subcommand(
      "minimum", "minimum adequate test set by exhaustive search");
  std::string min_input;
  minimum->add_option("input", min_input)->required();

  auto* ea = oracle->add_subcommand("ea", "is the empty set adequate?");
  std::string ea_input;
  ea->add_option("input", ea_input)->required();

  auto* check =
      oracle->add_subcommand("check", "verify a point file against an instance");
  std::string check_input, check_points;
  check->add_option("input", check_input)->required();
  check->add_option("points", check_points)->required();

  auto* from_graph = oracle->add_subcommand(
      "from-graph", "emit the instance encoding a graph edge list");
  std::string graph_input;
  from_graph->add_option("input", graph_input)->required();

  auto* from_cnf = oracle->add_subcommand(
      "from-cnf", "emit the instance encoding a 3-CNF (simplified DIMACS)");
  std::string cnf_input;
  from_cnf->add_option("input", cnf_input)->required();
  bool constraint_side = false;
  from_cnf->add_flag("--constraint-side", constraint_side,
                     "encode into the constraint instead of the criterion");

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    tselect::RunConfig config;
    config.input_path = input;
    if (!output.empty()) config.output_path = output;
    config.order = order == "smallest-first" ? tselect::OrderPolicy::SmallestFirst
                                             : tselect::OrderPolicy::Input;
    config.budget = budget;
    config.decompose = decompose != "off";
    config.bound_only = bound_only;
    config.verbosity = verbosity;
    return tselect::run(config, std::cout, std::cerr);
  }
  if (*minimum) return tselect::oracle_minimum(min_input, std::cout, std::cerr);
  if (*ea) return tselect::oracle_empty_adequate(ea_input, std::cout, std::cerr);
  if (*check)
    return tselect::oracle_check(check_input, check_points, std::cout, std::cerr);
  if (*from_graph)
    return tselect::oracle_from_graph(graph_input, std::cout, std::cerr);
  if (*from_cnf)
    return tselect::oracle_from_cnf(cnf_input, constraint_side, std::cout,
                                    std::cerr);
  return 0;
}
