#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shellpc/spectra.hpp"

namespace shellpc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kIo = 3 };

enum class Command { Eig, Table, Bounds, Profile, GreensValidate, OracleCheck };
enum class OutputFormat { Csv, Json };

struct GridSpec {
    double min = 1e-3;
    double max = 1e3;
    int points = 400;
    GridScale scale = GridScale::Log;
    std::optional<double> densify_below = 1.0; // only the default grid is densified
};

struct RunConfig {
    Command command = Command::Eig;
    std::optional<double> A;
    std::optional<double> sigma;
    GridSpec grid;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path; // empty or "-" means stdout
    std::map<std::string, double> tolerances{{"oracle_rel", 1e-5}, {"greens_rel", 1e-2}};
    Operator op = Operator::Stokes;
    int samples = 201;
    std::vector<double> values; // sigma list (greens-validate) or A list (oracle-check)
    int nodes = 128;
    int n_grid = 4000;
};

/// Thrown for malformed flags or config files; maps to exit code 1.
struct UsageError {
    std::string message;
};

GridSpec parse_grid(std::string_view text);
std::optional<Command> parse_command(std::string_view text);
std::string_view to_string(Command c) noexcept;

/// 12 significant digits, '.' decimal separator, shortest of %e/%f form.
std::string format_number(double v);

/// Flags override values from --config; throws UsageError.
/// Returns std::nullopt when --help was requested (help text already written to `out`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Renders the command's output text. Throws shellpc::Error on numerical failure.
/// Sets `validation_failed` when a report-style command's check does not pass.
std::string render(const RunConfig& config, bool& validation_failed);

/// Parses, runs and writes; every failure is reported on `err` as a JSON error object.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace shellpc::cli
