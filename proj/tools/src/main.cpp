#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "longtube/errors.hpp"
#include "longtube/tube_geometry.hpp"
#include "suites.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace longtube::cli;

  CLI::App app{"Verification suites for long projective tubes"};
  SuiteConfig config = default_config();
  std::string subcommand;
  std::vector<double> ells;
  double grid_from = 0.1, grid_to = longtube::kEps0;
  int grid_n = 10;
  double tol = 0.0;

  std::string names;
  for (const char* s : kSubcommands) names += std::string(names.empty() ? "" : ", ") + s;
  app.add_option("subcommand", subcommand, "One of: " + names)->required();
  app.add_option("--ell", ells, "Core lengths; overrides the grid flags");
  app.add_option("--grid-from", grid_from, "Smallest grid core length");
  app.add_option("--grid-to", grid_to, "Largest grid core length");
  app.add_option("--grid-n", grid_n, "Number of log-spaced grid points");
  app.add_option("--trials", config.trials, "Random trials per grid point");
  app.add_option("--seed", config.seed, "Base seed");
  app.add_option("--modes", config.modes_K, "Fourier mode cutoff (0 = default)");
  auto* tol_opt = app.add_option("--tol", tol, "Absolute tolerance for exactness checks");
  app.add_option("--format", config.format, "json or csv");
  app.add_option("--out", config.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    config.ell_grid = ells.empty() ? log_grid(grid_from, grid_to, grid_n) : ells;
    if (tol_opt->count() > 0) config.tol = tol;
    const ReportDocument doc = run_subcommand(subcommand, config);
    const std::string text = emit_report(doc, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out, std::ios::binary);
      if (!out) throw UsageError("cannot open " + config.out);
      out << text;
    }
    std::size_t failed = 0;
    for (const ReportRow& r : doc.rows) failed += r.satisfied ? 0 : 1;
    std::fprintf(stderr, "%s: %zu rows, %zu violated\n", subcommand.c_str(), doc.rows.size(),
                 failed);
    return doc.pass() ? 0 : kExitViolation;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const longtube::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
