#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "expsumlab/json_io.hpp"

namespace expsumlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitSchema = 2,
  kExitBudget = 3,
  kExitUncertified = 4,
  kExitOther = 5,
};

/// Command-line overrides; each takes precedence over the job file.
struct Overrides {
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> s_max;
  std::optional<std::vector<mpq_class>> grid;
  std::optional<unsigned> threads;
};

struct JobResult {
  Json report;
  std::string table;  ///< aligned plain text
  std::string csv;    ///< empty for commands without tabular data
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

/// Validates the job against its command, then runs it. Errors propagate
/// as exceptions; see exit_code_for.
JobResult run_job(const Json& job, const Overrides& overrides = {});

int exit_code_for(const std::exception& e);

/// Renders rows as left-aligned columns separated by two spaces.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace expsumlab
