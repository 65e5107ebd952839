#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holdercurve/cli.hpp"

namespace hc = holdercurve::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and bi-Hölder obstructions for plane curve germs"};
  app.require_subcommand(1);
  app.fallthrough();

  hc::AnalysisOptions options;
  app.add_flag("--json", options.json, "emit JSON");
  app.add_option("--permutation-cap", options.permutation_cap,
                 "largest branch count searched for a matching")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", options.tolerance,
                 "relative tolerance for check-prop1")
      ->check(CLI::NonNegativeNumber);

  struct Sub {
    hc::Command command;
    const char* help;
    CLI::App* app = nullptr;
    std::vector<std::string> files;
  };
  std::vector<Sub> subs{
      {hc::Command::Invariants, "characteristic exponents, pairs and normal form", nullptr, {}},
      {hc::Command::Contact, "pairwise contact orders and intersection multiplicities", nullptr, {}},
      {hc::Command::Classify, "decide equivalence or certify a Hölder threshold", nullptr, {}},
      {hc::Command::Estimate, "numerical contact estimate of two germs", nullptr, {}},
      {hc::Command::CheckProp1, "check contact distortion under a radial Hölder map", nullptr, {}},
      {hc::Command::ProofArcs, "sample the four separating arcs of one branch", nullptr, {}},
  };
  std::string grid;
  double min_radius = holdercurve::kMinSampleRadius;
  double beta = 0.0;
  std::size_t index = 0;
  std::string csv;
  for (auto& sub : subs) {
    sub.app = app.add_subcommand(hc::command_name(sub.command), sub.help);
    sub.app->add_option("files", sub.files, "germ JSON files")->required();
    const bool numeric = sub.command == hc::Command::Estimate ||
                         sub.command == hc::Command::CheckProp1 ||
                         sub.command == hc::Command::ProofArcs;
    if (numeric) {
      sub.app->add_option("--grid", grid, "r_max,r_min,count (default 0.1,1e-4,16)");
      sub.app->add_option("--min-radius", min_radius, "smallest admissible radius")
          ->check(CLI::PositiveNumber);
      sub.app->add_option("--csv", csv, "write (r, gap) samples to this file");
    }
    if (sub.command != hc::Command::ProofArcs && numeric) {
      sub.app->add_option("--angles", options.angles, "x-arguments per conjugate")
          ->check(CLI::PositiveNumber);
    }
    if (sub.command == hc::Command::CheckProp1) {
      sub.app->add_option("--beta", beta, "exponent of the radial map (>= 1)")
          ->required();
    }
    if (sub.command == hc::Command::ProofArcs) {
      sub.app->add_option("--branch", options.branch, "branch index (0-based)");
      sub.app->add_option("--index", index, "characteristic index j (1-based)")
          ->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return hc::report_usage_error(e.what(), options.json, std::cout, std::cerr);
  }

  hc::AnalysisRequest request{hc::Command::Invariants, {}, options};
  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    request.command = sub.command;
    request.inputs.assign(sub.files.begin(), sub.files.end());
    auto given = [&sub](const char* name) {
      const CLI::Option* opt = sub.app->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--grid")) request.options.grid = grid;
    if (given("--min-radius")) request.options.min_radius = min_radius;
    if (given("--csv")) request.options.csv = csv;
    if (given("--beta")) request.options.beta = beta;
    if (given("--index")) request.options.index = index;
  }
  return hc::run(request, std::cout, std::cerr);
}
