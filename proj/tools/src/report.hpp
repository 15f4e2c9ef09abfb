#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longtube/bound_report.hpp"

namespace longtube::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
  std::vector<double> ell_grid;
  int trials = 200;
  std::uint64_t seed = 7;
  // 0 selects the default cutoff per tube.
  int modes_K = 0;
  // Replaces the absolute tolerance of exactness checks.
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
};

struct ReportRow {
  std::string suite;
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  double margin = 0.0;
  std::optional<double> ell;
  std::optional<std::uint64_t> seed;
  std::string formula;
  std::string relation = "at_most";
  double tolerance = 0.0;
  // Set on rows aggregated over random trials.
  std::optional<int> trials;
  std::optional<int> violations;
};

ReportRow make_row(std::string suite, const BoundReport& r, std::optional<double> ell = {},
                   std::optional<std::uint64_t> seed = {});

// Plot-ready numeric table.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::string subcommand;
  SuiteConfig config;
  std::vector<ReportRow> rows;
  std::vector<Table> tables;

  bool pass() const;
  // Stable sort by suite, ell (global rows first), seed.
  void canonicalize();
};

// Throws std::invalid_argument for formats other than json and csv.
std::string emit_report(const ReportDocument& doc, const std::string& format);

}  // namespace longtube::cli
