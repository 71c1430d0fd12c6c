#include "nsexpander/profile.hpp"

#include <algorithm>
#include <cmath>

namespace nsexpander {

std::vector<std::string> Profile::invariant_violations() const {
    std::vector<std::string> out;
    const auto rr = r();
    const std::size_t n = size();
    if (P.size() != n || U.size() != n || Theta.size() != n || dU.size() != n || dTheta.size() != n) {
        out.push_back("field sizes do not match the grid");
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto at = " at node " + std::to_string(i);
        if (!std::isfinite(P[i]) || !std::isfinite(U[i]) || !std::isfinite(Theta[i]) || !std::isfinite(dU[i]) ||
            !std::isfinite(dTheta[i]))
            out.push_back("non-finite sample" + at);
        if (rr[i] > 0 && !(P[i] > 0)) out.push_back("non-positive density" + at);
        if (rr[i] > 0 && !(0.5 * rr[i] - U[i] > 0)) out.push_back("characteristic degeneracy" + at);
    }
    if (case_tag() == Case::smooth && rr[0] == 0.0 && P[0] != std::get<SmoothBoundaryData>(boundary).P0)
        out.push_back("P(0) differs from P0");
    return out;
}

double weighted_distance(const Profile& a, const Profile& b) {
    const auto r = a.r();
    const bool smooth = a.case_tag() == Case::smooth;
    double d = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0.0) continue;
        const double w = 1.0 / std::min(r[i], 1.0);
        const double du = std::abs(a.U[i] - b.U[i]) * (smooth ? w * w : w);
        const double ddu = std::abs(a.dU[i] - b.dU[i]) * (smooth ? w : 1.0);
        const double dt = std::abs(a.Theta[i] - b.Theta[i]);
        const double ddt = std::abs(a.dTheta[i] - b.dTheta[i]) * w;
        d = std::max(d, du + ddu + dt + ddt);
    }
    return d;
}

}  // namespace nsexpander
