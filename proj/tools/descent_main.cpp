#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "descent/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "descent: path-order termination certificates, rewriting traces, finite\n"
      "renditions of termination principles, and the open-recursion functional"};
  app.require_subcommand(1);

  std::string check_path;
  std::string status = "auto";
  descent::CheckOptions copt;
  copt.budget = descent::env_long("DESCENT_BUDGET", 100000);
  copt.fuel = static_cast<std::size_t>(descent::env_long("DESCENT_FUEL", 64));
  CLI::App* check = app.add_subcommand("check", "orient a TRS with a path-order certificate");
  check->add_option("file", check_path, "TRS file")->required();
  check->add_option("--status", status, "lifting search: auto|lex|mul")
      ->check(CLI::IsMember({"auto", "lex", "mul"}));
  check->add_option("--budget", copt.budget, "candidate budget");
  check->add_flag("--json", copt.json, "JSON certificate output");
  check->add_flag("--empirical", copt.empirical, "survey ground-term normalization too");
  check->add_option("--depth", copt.depth, "survey universe height");
  check->add_option("--fuel", copt.fuel, "survey normalization fuel");

  std::string trace_path, trace_term;
  auto trace_fuel = static_cast<std::size_t>(descent::env_long("DESCENT_FUEL", 64));
  CLI::App* trace = app.add_subcommand("trace", "normalize a term, printing every step");
  trace->add_option("file", trace_path, "TRS file")->required();
  trace->add_option("term", trace_term, "term to normalize")->required();
  trace->add_option("--fuel", trace_fuel, "step budget");

  std::string lab_sub;
  descent::LabOptions lopt;
  CLI::App* lab = app.add_subcommand("lab", "principle checks on finite instances");
  lab->add_option("check", lab_sub, "stp|gl|mbs|bi|lemma34|lemma44")->required();
  lab->add_option("instance", lopt.instance_path, "instance JSON file");
  lab->add_flag("--random", lopt.random, "run a randomized campaign");
  lab->add_option("--seed", lopt.seed, "campaign master seed");
  lab->add_option("--count", lopt.count, "campaign trial count");
  lab->add_option("--from-trs", lopt.from_trs, "derive the instance from a certified TRS");
  lab->add_option("--depth", lopt.depth, "ground universe height for --from-trs");
  lab->add_option("--cap", lopt.seq_cap, "sequence length cap");
  lab->add_flag("--json", lopt.json, "JSON report output");

  descent::PhiOptions popt;
  CLI::App* phi = app.add_subcommand("phi", "evaluate the open-recursion functional");
  phi->add_option("--realizer", popt.realizer, "scan|consult");
  phi->add_option("--alpha", popt.alpha, "sequence, comma list then ';tail' (e.g. \"5,4,3;7\")");
  phi->add_option("--budget", popt.budget_depth, "max recursion depth");
  phi->add_option("--probes", popt.budget_probes, "max sequence probes");
  phi->add_flag("--json", popt.json, "JSON outcome output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : descent::kExitParse;
  }

  if (*check) {
    copt.status_mode = status == "lex"   ? descent::SearchConfig::StatusMode::LexOnly
                       : status == "mul" ? descent::SearchConfig::StatusMode::MulOnly
                                         : descent::SearchConfig::StatusMode::Auto;
    return descent::cmd_check(check_path, copt, std::cout, std::cerr);
  }
  if (*trace) return descent::cmd_trace(trace_path, trace_term, trace_fuel, std::cout, std::cerr);
  if (*lab) return descent::cmd_lab(lab_sub, lopt, std::cout, std::cerr);
  if (*phi) return descent::cmd_phi(popt, std::cout, std::cerr);
  return 0;
}
