#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holdercurve/numeric.hpp"

namespace holdercurve::cli {

enum class Command { Invariants, Contact, Classify, Estimate, CheckProp1, ProofArcs };

std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command command);
/// Number of germ files the command takes.
std::size_t command_arity(Command command);

// Exit statuses. Every failure maps to exactly one of 2, 3, 4.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;     // parse / validation
inline constexpr int kExitTruncation = 3;       // truncation insufficient
inline constexpr int kExitUnsupported = 4;      // cap exceeded / unsupported

struct AnalysisOptions {
  bool json = false;
  std::size_t permutation_cap = 8;
  double tolerance = 0.1;
  // "r_max,r_min,count"; empty means the default 0.1,1e-4,16.
  std::string grid;
  std::size_t angles = kDefaultAngles;
  std::optional<double> beta;
  std::size_t branch = 0;
  std::optional<std::size_t> index;
  double min_radius = kMinSampleRadius;
  // Optional destination for (r, gap) pairs of numeric commands.
  std::optional<std::filesystem::path> csv;
};

struct AnalysisRequest {
  Command command;
  std::vector<std::filesystem::path> inputs;
  AnalysisOptions options;
};

/// Parses "r_max,r_min,count". Throws ValidationError.
RadiusGrid parse_grid(std::string_view text, double min_radius);

/// Executes one request. Reports go to `out` (JSON when options.json is set);
/// errors go to `out` as {"error_kind": ...} objects in JSON mode and to
/// `err` as text otherwise. Returns the process exit status.
int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

/// Writes an error object for failures that happen before a request exists
/// (command-line usage errors) and returns kExitUnsupported.
int report_usage_error(const std::string& message, bool json, std::ostream& out,
                       std::ostream& err);

}  // namespace holdercurve::cli
