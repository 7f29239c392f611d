#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lsekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // data/runtime failures
inline constexpr int kExitUsage = 2;    // flag/config mistakes

/// Machine-readable fit summary printed as one JSON object on stdout.
struct FitReport {
    std::vector<double> theta_hat;
    double residual_cost = 0.0;
    long num_samples = 0;
    std::string mode;  // "batch" or "recursive"
    double lambda = 1.0;
    double f0_scale = 1e6;
    std::optional<long> rank;               // batch only
    std::optional<double> final_gain_trace; // recursive only
};

std::string report_to_json(const FitReport& report);

/// Entry point behind the `lsekit` binary. `args` excludes the program
/// name. Subcommands: generate, fit, eval.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace lsekit::cli
