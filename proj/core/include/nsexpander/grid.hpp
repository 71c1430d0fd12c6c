#pragma once

// Radial meshes and the quadrature primitives every integral formula of the
// profile equations is evaluated with.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace nsexpander {

enum class GridKind { from_zero, from_rmin };

/// Strictly increasing radii r_0 < ... < r_N.
///
/// The factories build nodes as images of a uniform parameter xi = i / N under
/// a fixed analytic map, so the grid with 2N cells contains the grid with N
/// cells and refinement studies compare like with like.
///
/// from_zero: r(xi) = c (s(k (xi - g)) - s(-k g)) with s the softplus. Spacing
/// grows smoothly from ~5% of the bulk spacing at the axis to uniform beyond
/// xi = g (the grading fraction).
///
/// from_rmin: r(xi) = c s(k (xi - g)), geometric (constant log-step) for
/// xi << g and uniform for xi >> g. k and c are fitted so that r(0) = r_min and
/// r(1) = r_max.
class RadialGrid {
public:
    RadialGrid(std::vector<double> nodes, GridKind kind);

    static RadialGrid from_zero(double r_max, std::size_t n_cells, double grading = 0.08);
    static RadialGrid from_rmin(double r_min, double r_max, std::size_t n_cells,
                                double grading = 0.35);
    static RadialGrid uniform(double r0, double r_max, std::size_t n_cells);

    std::span<const double> nodes() const { return nodes_; }
    double operator[](std::size_t i) const { return nodes_[i]; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t cells() const { return nodes_.size() - 1; }
    GridKind kind() const { return kind_; }
    double front() const { return nodes_.front(); }
    double back() const { return nodes_.back(); }
    double max_spacing() const;

    /// Index of the last node with r_i <= r.
    std::size_t locate(double r) const;

private:
    std::vector<double> nodes_;
    GridKind kind_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Samples aligned with the nodes of a grid.
struct GridFunction {
    GridPtr grid;
    std::vector<double> values;

    GridFunction(GridPtr g, std::vector<double> v);
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

// ---------------------------------------------------------------------------
// Plain integrals

/// F(r_i) = seed + int_{r_0}^{r_i} f, composite trapezoid.
/// Throws InputError naming the first non-finite sample.
std::vector<double> cumulative_trapezoid(std::span<const double> r, std::span<const double> f,
                                         double seed = 0.0);

GridFunction cumulative_integral(const GridFunction& f, double seed = 0.0);

// ---------------------------------------------------------------------------
// Exponentially weighted Volterra integrals

/// E_k(z) = int_0^1 u^k e^{-z u} du for k = 0..out.size()-1, z >= 0.
void exp_moments(double z, std::span<double> out);

/// int_a^b r^p (f_a (b-r) + f_b (r-a)) / (b-a) e^{lambda (r-b)} dr for lambda >= 0.
///
/// The smooth factor is interpolated linearly; the power and the exponential
/// (with its exponent interpolated linearly) are integrated exactly, so the
/// rule stays second order however steep the weight is within a cell.
double weighted_cell(double a, double b, int p, double f_a, double f_b, double lambda);

/// K_i = int_0^{r_i} r1^p e^{E(r1) - E(r_i)} f(r1) dr1 for every node.
///
/// seed is the contribution of [0, r_0], already weighted relative to r_0.
/// Every exponential is evaluated at a non-positive argument. Throws
/// InputError when the exponent field decreases.
std::vector<double> weighted_volterra(std::span<const double> r, std::span<const double> f,
                                      std::span<const double> exponent, int p, double seed = 0.0);

/// r^{1-d} int_0^r r1^{d-1} e^{W(r1) - W(r)} f(r1) dr1 at node r_index; 0 at r = 0.
double kernel_integral(std::size_t r_index, const GridFunction& f, const GridFunction& W, int d);

/// r^{2-d} int_0^r r1^power e^{Z(r1) - Z(r)} f(r1) dr1 at node r_index.
/// At r = 0 returns the limit, which is finite only for power = d - 3.
double kernel_integral_theta(std::size_t r_index, const GridFunction& f, const GridFunction& Z,
                             int d, int power);

}  // namespace nsexpander
