#pragma once

// Output formats of the command-line tool. Every writer goes through
// write_atomic, so a reader never sees a half-written file.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsexpander/cli/run.hpp"

namespace nsexpander::cli {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// Header `r,P,U,Theta,dU,dTheta`, 17 significant digits, LF line endings.
std::string profile_csv(const Profile& profile);
void emit_profile_csv(const Profile& profile, const std::filesystem::path& path);

/// Parses a CSV in the emit_profile_csv layout back into a profile.
Profile parse_profile_csv(const std::string& text, const BoundaryData& boundary);

/// Versioned summary object (schema 1). Contains no run metadata such as
/// wall-clock time, so identical runs give identical bytes.
std::string summary_json(const RunReport& report);
void emit_summary_json(const RunReport& report, const std::filesystem::path& path);

/// Writes P.svg, U.svg, Theta.svg, tail_rU.svg, tail_r2Theta.svg and, for the
/// cavitating case, P_loglog.svg into `dir` (created if missing). Returns the
/// paths written.
std::vector<std::filesystem::path> emit_plots_svg(const RunReport& report, const std::filesystem::path& dir);

}  // namespace nsexpander::cli
