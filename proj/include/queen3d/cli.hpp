#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "queen3d/commands.hpp"
#include "queen3d/version.hpp"

namespace queen3d {

/// "lo..hi" or a single value; returns false on malformed input.
inline bool parse_range(const std::string& text, long long& lo, long long& hi) {
  const auto pos = text.find("..");
  try {
    std::size_t used = 0;
    if (pos == std::string::npos) {
      lo = hi = std::stoll(text, &used);
      return used == text.size();
    }
    lo = std::stoll(text.substr(0, pos), &used);
    if (used != pos) return false;
    const std::string rest = text.substr(pos + 2);
    hi = std::stoll(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

/// Full argv-level entry point; returns the process exit code.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string(kToolName) + " " + kToolVersion +
               " - toroidal 3D queen graph spectra: tables, orbits and verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string range_text;

  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "Write output to this path instead of stdout");
  };
  auto add_budget_options = [&](CLI::App* cmd) {
    cmd->add_option("--budget", cfg.budget,
                    "Enumeration point budget (env QUEEN_SPECTRA_BUDGET overrides the default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", cfg.workers, "Worker threads for enumeration")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalue table for one n");
  spectrum->add_option("--n", cfg.n, "Torus size")->required();
  spectrum->add_option("--method", cfg.method, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}))
      ->capture_default_str();
  add_output_options(spectrum);
  add_budget_options(spectrum);

  CLI::App* verify = app.add_subcommand("verify", "Full identity and oracle suite for one n");
  verify->add_option("--n", cfg.n, "Torus size")->required();
  verify->add_option("--seed", cfg.seed, "Seed for the residual point sample")
      ->capture_default_str();
  verify->add_option("--oracle-budget", cfg.oracle_budget,
                     "Vertex budget for graph-level checks")
      ->check(CLI::PositiveNumber);
  add_output_options(verify);
  add_budget_options(verify);

  CLI::App* orbits = app.add_subcommand("orbits", "Direction-pair orbits and prototype lines");
  orbits->add_option("--n", cfg.n, "Torus size (generic odd)")->required();
  add_output_options(orbits);

  CLI::App* scan = app.add_subcommand("scan", "Empirical mu histograms over a range of n");
  scan->add_option("--range", range_text, "Inclusive range lo..hi (or a single n)")->required();
  add_output_options(scan);
  add_budget_options(scan);

  CLI::App* graph = app.add_subcommand("graph", "Edge-list export of the Cayley graph");
  graph->add_option("--n", cfg.n, "Torus size")->required();
  graph->add_option("--oracle-budget", cfg.oracle_budget, "Vertex budget")
      ->check(CLI::PositiveNumber);
  add_output_options(graph);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* sub : {spectrum, verify, orbits, scan, graph})
    if (sub->parsed()) cfg.command = sub->get_name();

  if (cfg.command == "scan") {
    if (!parse_range(range_text, cfg.range_lo, cfg.range_hi) || cfg.range_lo < 1 ||
        cfg.range_hi < cfg.range_lo) {
      err << "error: --range must be lo..hi with 1 <= lo <= hi\n";
      return 2;
    }
  }

  return run(cfg, out, err);
}

}  // namespace queen3d
