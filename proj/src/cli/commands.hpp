#pragma once

#include <cstddef>
#include <functional>
#include <ostream>

#include "cli/config.hpp"

namespace chebrate::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Worker count from CHEBRATE_THREADS (unset or 0 means hardware concurrency).
[[nodiscard]] std::size_t thread_cap();

/// Runs body(i) for i in [0, count) on up to thread_cap() threads. The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// "# chebrate <version> config <hash>".
[[nodiscard]] std::string header_line(const ExperimentConfig& cfg);

int cmd_errcurve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& report,
              std::ostream& log);
int cmd_psi(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_superconv(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_remez(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_coeffs(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace chebrate::cli
