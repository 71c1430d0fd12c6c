#pragma once

// Domain types shared by every solver stage: fluid constants, boundary data
// for the two profile families, solver configuration and input validation.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nsexpander {

enum class Case { smooth, cavitating };

const char* to_string(Case c);

/// Fluid constants of the ideal-gas Navier-Stokes system in dimension d.
struct PhysicalParams {
    double R = 1.0;       // gas constant
    double mu = 1.0;      // shear viscosity
    double lambda = 0.0;  // second Lame coefficient
    double C_V = 1.0;     // heat capacity
    double kappa = 1.0;   // thermal conductivity
    int d = 3;

    /// 2 mu + lambda, the longitudinal viscosity.
    double viscosity() const { return 2.0 * mu + lambda; }

    bool operator==(const PhysicalParams&) const = default;
};

/// Density and temperature at the origin for profiles that are regular there.
struct SmoothBoundaryData {
    double P0 = 1.0;
    double Theta0 = 1e-3;

    bool operator==(const SmoothBoundaryData&) const = default;
};

/// Data for profiles with a vacuum at the origin: P(delta) = P_delta,
/// U'(0) = alpha, Theta(0) = Theta0.
struct CavitatingBoundaryData {
    double P_delta = 1e-2;
    double delta = 1e-1;
    double Theta0 = 1e-2;
    double alpha = 1e-3;

    /// Power-law exponent 2 d alpha / (1 - 2 alpha) of the density near r = 0.
    double density_exponent(int d) const { return 2.0 * d * alpha / (1.0 - 2.0 * alpha); }

    bool operator==(const CavitatingBoundaryData&) const = default;
};

using BoundaryData = std::variant<SmoothBoundaryData, CavitatingBoundaryData>;

Case case_of(const BoundaryData& b);
double theta0_of(const BoundaryData& b);

/// Seven-term smallness functional that gates existence of cavitating profiles:
/// P_d + delta + Theta0 + alpha + P_d Theta0 / alpha + alpha^2 / (P_d Theta0)
/// + alpha log(1 / (P_d delta^2)).
double smallness_functional(const CavitatingBoundaryData& b);

/// Empirical smallness thresholds. The existence results only assert that some
/// threshold exists; these defaults are tuning choices.
struct Thresholds {
    double eps_smooth = 0.1;
    double eps_cav = 0.5;
};

struct SolveConfig {
    double r_max = 30.0;
    std::size_t n_cells = 4000;
    // Fraction of the mapping spent in the graded inner zone (see RadialGrid).
    double grading = 0.08;
    double picard_tol = 1e-12;
    std::size_t max_iter = 200;
    // Inner radius of the computational grid; cavitating case only.
    double r_min = 0.0;
    double damping = 1.0;

    static SolveConfig smooth_defaults();
    static SolveConfig cavitating_defaults(const CavitatingBoundaryData& b);
    static SolveConfig defaults_for(const BoundaryData& b);
};

struct ConstraintCheck {
    std::string constraint;
    bool passed = true;
    std::string detail;

    bool operator==(const ConstraintCheck&) const = default;
};

struct ValidationReport {
    std::vector<ConstraintCheck> checks;
    std::optional<double> smallness;

    bool passed() const;
    /// Constraint names of the failed checks, in evaluation order.
    std::vector<std::string> failures() const;
    std::string summary() const;

    bool operator==(const ValidationReport&) const = default;
};

ValidationReport validate_params(const PhysicalParams& p, const BoundaryData& b,
                                 const Thresholds& thresholds = {});

ValidationReport validate_config(const SolveConfig& c, const BoundaryData& b);

// Errors raised by the numerical stages.

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite samples, decreasing weight exponents and other corrupted input.
class InputError : public SolverError {
public:
    using SolverError::SolverError;
};

/// r/2 - U(r) <= 0: the density transport exponent is undefined.
class DegeneracyError : public SolverError {
public:
    DegeneracyError(std::size_t node, double r, double margin);
    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

class ConvergenceError : public SolverError {
public:
    ConvergenceError(std::size_t iterations, double last_distance, double last_ratio);
    std::size_t iterations() const { return iterations_; }
    double last_ratio() const { return last_ratio_; }

private:
    std::size_t iterations_;
    double last_ratio_;
};

}  // namespace nsexpander
