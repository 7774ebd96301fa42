#pragma once

// Task runners shared by the subcommands and by campaign files. A task is
// (command, params) with params as JSON; CLI flags are folded into the same
// object so a campaign entry and the equivalent command line run the same
// code.

#include "ybalg/io.hpp"
#include "ybalg/scalar.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace ybalg::cli {

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "YBALG_OUT_DIR";

struct Globals {
    std::uint64_t seed = 42;
    Field field = Field::rational;
    double tol = kDefaultTolerance;
    std::filesystem::path out_dir = ".";
};

/// out_dir from the environment, or "." when unset.
std::filesystem::path default_out_dir();

struct TaskOutcome {
    /// Verification result of the task (true for pure emit tasks).
    bool ok = true;
    Json report;
    /// One line for the console.
    std::string summary;
};

/// Commands: verify, matrix, search, frt, ybsystem, compare.
/// Throws Error subclasses (InvalidInput, UnknownKind, ...) on bad params.
TaskOutcome run_task(const std::string& command, const Json& params, const Globals& g);

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs every task in config order, writes <out_dir>/<name>.json per task,
/// summary.json and a separate metadata.json (timestamps, host). Tasks may
/// carry "expect": "pass" (default) or "fail". Returns the exit code.
int run_campaign(const Json& config, Globals g, std::ostream& log);

/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace ybalg::cli
