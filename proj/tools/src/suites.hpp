#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace longtube::cli {

inline constexpr std::array<const char*, 7> kSubcommands = {
    "symmetric", "bounds", "fourier", "pairing", "vrpath", "appendix", "verify-all"};

// Invalid configuration or unknown subcommand.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> log_grid(double from, double to, int n);
SuiteConfig default_config();
void validate(const SuiteConfig& config);

ReportDocument run_subcommand(const std::string& name, const SuiteConfig& config);

}  // namespace longtube::cli
