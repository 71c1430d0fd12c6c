#pragma once

// Configuration files and one-parameter sweeps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsexpander/cli/run.hpp"

namespace nsexpander::cli {

/// Flat `key = value` lines; blank lines and `#` comments are ignored, keys
/// may be written with or without leading dashes. Later lines win. Throws
/// InputError on a line without '='.
std::map<std::string, std::string> parse_key_values(const std::string& text);

struct SweepAxis {
    std::string key;
    std::vector<std::string> values;
};

/// The sweep axis comes either from `spec` ("key=v1,v2,...") or from the one
/// option whose value is a comma-separated list. Throws InputError when there
/// is no axis, more than one, or the key is unknown.
SweepAxis sweep_axis(const std::map<std::string, std::string>& options, const std::string& spec);

struct SweepRow {
    std::string value;
    std::optional<RunReport> report;  // empty when the solve failed
    std::string status = "ok";        // ok | not_converged | solver_error
    std::string message;
};

/// Runs one point of a sweep; solver failures are recorded, not thrown.
SweepRow sweep_point(const Problem& problem, const std::string& value);

/// CSV with header `<key>,status,iterations,P_inf,U_inf,Theta_inf,bootstrap_max_Z,residual_sup`.
std::string sweep_table(const std::string& key, const std::vector<SweepRow>& rows);

/// {"schema": 1, "sweep": key, "runs": [summary | {"value", "status", "message"}]}
std::string sweep_summary_json(const std::string& key, const std::vector<SweepRow>& rows);

}  // namespace nsexpander::cli
