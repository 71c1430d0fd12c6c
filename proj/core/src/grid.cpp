#include "nsexpander/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsexpander/core.hpp"

namespace nsexpander {

namespace {

double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// Ratio of axis spacing to bulk spacing for from_zero grids.
constexpr double kAxisSpacingRatio = 0.05;

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> nodes, GridKind kind) : nodes_(std::move(nodes)), kind_(kind) {
    require(nodes_.size() >= 2, "grid needs at least two nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        require(std::isfinite(nodes_[i]), "non-finite grid node " + std::to_string(i));
        if (i > 0) require(nodes_[i] > nodes_[i - 1], "grid not strictly increasing at node " + std::to_string(i));
    }
    if (kind_ == GridKind::from_zero)
        require(nodes_.front() == 0.0, "from_zero grid must start at r = 0");
    else
        require(nodes_.front() > 0.0, "from_rmin grid must start at r_min > 0");
}

RadialGrid RadialGrid::from_zero(double r_max, std::size_t n_cells, double grading) {
    require(r_max > 0 && n_cells >= 2 && grading > 0 && grading < 1, "invalid from_zero grid parameters");
    const double k = std::log(1.0 / kAxisSpacingRatio - 1.0) / grading;
    const double s0 = softplus(-k * grading);
    const double c = r_max / (softplus(k * (1.0 - grading)) - s0);
    std::vector<double> r(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i) {
        const double xi = static_cast<double>(i) / static_cast<double>(n_cells);
        r[i] = c * (softplus(k * (xi - grading)) - s0);
    }
    r.front() = 0.0;
    r.back() = r_max;
    return RadialGrid(std::move(r), GridKind::from_zero);
}

RadialGrid RadialGrid::from_rmin(double r_min, double r_max, std::size_t n_cells, double grading) {
    require(r_min > 0 && r_max > r_min && n_cells >= 2 && grading > 0 && grading < 1,
            "invalid from_rmin grid parameters");
    // softplus(k (1 - g)) / softplus(-k g) is increasing in k; bisect for the span ratio.
    const double target = std::log(r_max / r_min);
    auto log_ratio = [&](double k) { return std::log(softplus(k * (1 - grading))) - std::log(softplus(-k * grading)); };
    double lo = 1e-6, hi = 1.0;
    while (log_ratio(hi) < target) hi *= 2;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (log_ratio(mid) < target ? lo : hi) = mid;
    }
    const double k = 0.5 * (lo + hi);
    const double c = r_max / softplus(k * (1 - grading));
    std::vector<double> r(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i) {
        const double xi = static_cast<double>(i) / static_cast<double>(n_cells);
        r[i] = c * softplus(k * (xi - grading));
    }
    r.front() = r_min;
    r.back() = r_max;
    return RadialGrid(std::move(r), GridKind::from_rmin);
}

RadialGrid RadialGrid::uniform(double r0, double r_max, std::size_t n_cells) {
    require(r_max > r0 && r0 >= 0 && n_cells >= 1, "invalid uniform grid parameters");
    std::vector<double> r(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i)
        r[i] = r0 + (r_max - r0) * static_cast<double>(i) / static_cast<double>(n_cells);
    r.back() = r_max;
    return RadialGrid(std::move(r), r0 == 0.0 ? GridKind::from_zero : GridKind::from_rmin);
}

double RadialGrid::max_spacing() const {
    double h = 0;
    for (std::size_t i = 1; i < nodes_.size(); ++i) h = std::max(h, nodes_[i] - nodes_[i - 1]);
    return h;
}

std::size_t RadialGrid::locate(double r) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    if (it == nodes_.begin()) return 0;
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

GridFunction::GridFunction(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    require(grid != nullptr, "grid function without grid");
    require(values.size() == grid->size(), "grid function size does not match its grid");
}

std::vector<double> cumulative_trapezoid(std::span<const double> r, std::span<const double> f, double seed) {
    require(r.size() == f.size(), "cumulative_trapezoid: size mismatch");
    std::vector<double> out(r.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i])) throw InputError("non-finite integrand at node " + std::to_string(i));
    out[0] = seed;
    for (std::size_t i = 1; i < r.size(); ++i) out[i] = out[i - 1] + 0.5 * (r[i] - r[i - 1]) * (f[i] + f[i - 1]);
    return out;
}

GridFunction cumulative_integral(const GridFunction& f, double seed) {
    return GridFunction(f.grid, cumulative_trapezoid(f.grid->nodes(), f.values, seed));
}

void exp_moments(double z, std::span<double> out) {
    const std::size_t n = out.size();
    if (n == 0) return;
    if (z == 0.0) {
        for (std::size_t k = 0; k < n; ++k) out[k] = 1.0 / static_cast<double>(k + 1);
        return;
    }
    const double ez = std::exp(-z);
    if (z > 40.0 || z > static_cast<double>(n) + 8.0) {
        // Forward recursion is stable once z exceeds k.
        out[0] = -std::expm1(-z) / z;
        for (std::size_t k = 1; k < n; ++k) out[k] = (static_cast<double>(k) * out[k - 1] - ez) / z;
        return;
    }
    // Positive-term series for the top moment, then stable backward recursion.
    const double top = static_cast<double>(n);  // k + 1 for k = n - 1
    double term = 1.0 / top, sum = term;
    for (int j = 1; j < 400; ++j) {
        term *= z / (top + j);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    out[n - 1] = ez * sum;
    for (std::size_t k = n - 1; k > 0; --k) out[k - 1] = (z * out[k] + ez) / static_cast<double>(k);
}

double weighted_cell(double a, double b, int p, double f_a, double f_b, double lambda) {
    const double h = b - a;
    const double slope = (f_b - f_a) / h;
    const double z = lambda * h;
    // (b + t)^p (f_b + slope t) on t in [-h, 0], t^k moments (-1)^k h^{k+1} E_k(z).
    double moments[32];
    const int n = p + 2;
    exp_moments(z, std::span<double>(moments, static_cast<std::size_t>(n)));
    double binom = 1.0;  // C(p, k)
    double bpow = std::pow(b, p);
    double result = 0.0, hk = h, sign = 1.0;
    double prev_binom_b = 0.0;  // C(p, k-1) b^{p-k+1}
    for (int k = 0; k < n; ++k) {
        const double cur = (k <= p) ? binom * bpow : 0.0;  // C(p, k) b^{p-k}
        const double ck = f_b * cur + slope * prev_binom_b;
        result += ck * sign * hk * moments[k];
        prev_binom_b = cur;
        if (k < p) {
            binom = binom * (p - k) / (k + 1);
            bpow /= b;
        }
        hk *= h;
        sign = -sign;
    }
    return result;
}

std::vector<double> weighted_volterra(std::span<const double> r, std::span<const double> f,
                                      std::span<const double> exponent, int p, double seed) {
    require(r.size() == f.size() && r.size() == exponent.size(), "weighted_volterra: size mismatch");
    require(p >= 0 && p < 30, "weighted_volterra: unsupported power");
    std::vector<double> K(r.size());
    K[0] = seed;
    for (std::size_t i = 1; i < r.size(); ++i) {
        const double dE = exponent[i] - exponent[i - 1];
        if (!(dE >= 0.0))
            throw InputError("weight exponent decreases (or is non-finite) at node " + std::to_string(i));
        if (!std::isfinite(f[i])) throw InputError("non-finite integrand at node " + std::to_string(i));
        const double h = r[i] - r[i - 1];
        K[i] = std::exp(-dE) * K[i - 1] + weighted_cell(r[i - 1], r[i], p, f[i - 1], f[i], dE / h);
    }
    return K;
}

double kernel_integral(std::size_t r_index, const GridFunction& f, const GridFunction& W, int d) {
    require(f.grid == W.grid || f.size() == W.size(), "kernel_integral: grid mismatch");
    require(r_index < f.size(), "kernel_integral: node index out of range");
    const auto r = f.grid->nodes();
    if (r[r_index] == 0.0) return 0.0;
    const auto K = weighted_volterra(r.first(r_index + 1), std::span(f.values).first(r_index + 1),
                                     std::span(W.values).first(r_index + 1), d - 1);
    return std::pow(r[r_index], 1 - d) * K[r_index];
}

double kernel_integral_theta(std::size_t r_index, const GridFunction& f, const GridFunction& Z, int d,
                             int power) {
    require(f.size() == Z.size(), "kernel_integral_theta: grid mismatch");
    require(r_index < f.size(), "kernel_integral_theta: node index out of range");
    const auto r = f.grid->nodes();
    if (r[r_index] == 0.0) return power == d - 3 ? f[0] / (d - 2) : 0.0;
    const auto K = weighted_volterra(r.first(r_index + 1), std::span(f.values).first(r_index + 1),
                                     std::span(Z.values).first(r_index + 1), power);
    return std::pow(r[r_index], 2 - d) * K[r_index];
}

}  // namespace nsexpander
