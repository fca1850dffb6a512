#pragma once

#include <string>
#include <vector>

#include "expsumlab/jobs.hpp"

namespace expsumlab {

const std::vector<std::string>& verify_case_names();

/// Expected record bundled at build time, as parsed JSON.
Json expected_record(const std::string& name);

/// Recomputes the case's observables; keys match the expected record.
Json verify_observables(const std::string& name, const Overrides& overrides = {});

/// Compares observables with the bundled record. Exit code 0 iff every
/// expected key matches.
JobResult verify_case(const std::string& name, const Overrides& overrides = {});
JobResult verify_all(const Overrides& overrides = {});

}  // namespace expsumlab
