#include "nsexpander/cli/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nsexpander::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

void write_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place: " + path.string());
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// CSV

namespace {

void append_number(std::string& s, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    s += buf;
}

}  // namespace

std::string profile_csv(const Profile& profile) {
    std::string s = "r,P,U,Theta,dU,dTheta\n";
    s.reserve(profile.size() * 150);
    const auto r = profile.r();
    for (std::size_t i = 0; i < profile.size(); ++i) {
        for (double v : {r[i], profile.P[i], profile.U[i], profile.Theta[i], profile.dU[i], profile.dTheta[i]}) {
            append_number(s, v);
            s += ',';
        }
        s.back() = '\n';
    }
    return s;
}

void emit_profile_csv(const Profile& profile, const fs::path& path) { write_atomic(path, profile_csv(profile)); }

Profile parse_profile_csv(const std::string& text, const BoundaryData& boundary) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "r,P,U,Theta,dU,dTheta") throw InputError("unexpected profile CSV header");
    std::vector<double> cols[6];
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        int k = 0;
        while (std::getline(ls, cell, ',')) {
            if (k >= 6) throw InputError("too many columns on CSV line " + std::to_string(row));
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || *end != '\0') throw InputError("bad number on CSV line " + std::to_string(row));
            cols[k++].push_back(v);
        }
        if (k != 6) throw InputError("too few columns on CSV line " + std::to_string(row));
    }
    auto grid = std::make_shared<const RadialGrid>(cols[0], cols[0].empty() || cols[0][0] != 0.0
                                                                  ? GridKind::from_rmin
                                                                  : GridKind::from_zero);
    return Profile{grid, cols[1], cols[2], cols[3], cols[4], cols[5], boundary};
}

// ---------------------------------------------------------------------------
// JSON summary

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json norms_json(const ResidualNorms& n) { return json{{"sup", n.sup}, {"l2", n.l2}}; }

}  // namespace

std::string summary_json(const RunReport& rep) {
    const auto& pr = rep.problem;
    const auto& prof = rep.solution.profile;
    json j;
    j["schema"] = 1;
    j["case"] = to_string(case_of(pr.boundary));
    j["params"] = {{"d", pr.params.d},         {"R", pr.params.R},         {"mu", pr.params.mu},
                   {"lambda", pr.params.lambda}, {"C_V", pr.params.C_V}, {"kappa", pr.params.kappa}};
    if (const auto* s = std::get_if<SmoothBoundaryData>(&pr.boundary)) {
        j["boundary"] = {{"P0", s->P0}, {"Theta0", s->Theta0}};
    } else {
        const auto& c = std::get<CavitatingBoundaryData>(pr.boundary);
        j["boundary"] = {{"P_delta", c.P_delta},
                         {"delta", c.delta},
                         {"Theta0", c.Theta0},
                         {"alpha", c.alpha},
                         {"density_exponent", c.density_exponent(pr.params.d)},
                         {"smallness", smallness_functional(c)}};
    }
    j["grid"] = {{"kind", prof.grid->kind() == GridKind::from_zero ? "from_zero" : "from_rmin"},
                 {"cells", prof.grid->cells()},
                 {"r_min", prof.grid->front()},
                 {"r_max", prof.grid->back()},
                 {"grading", pr.config.grading},
                 {"max_spacing", prof.grid->max_spacing()}};
    const auto& tr = rep.solution.trace;
    j["iterations"] = tr.iterations();
    j["picard_tol"] = pr.config.picard_tol;
    j["final_distance"] = tr.distances.empty() ? json(nullptr) : json(tr.distances.back());
    json ratios = json::array();
    for (double r : tr.ratios) ratios.push_back(number_or_null(r));
    j["contraction_ratios"] = ratios;
    j["residual_norms"] = {{"mass", norms_json(rep.residual.mass_norm)},
                           {"momentum", norms_json(rep.residual.momentum_norm)},
                           {"energy", norms_json(rep.residual.energy_norm)},
                           {"h", rep.residual.h}};
    j["bootstrap_max_Z"] = rep.bootstrap.z.empty() ? json(nullptr) : json(rep.bootstrap.max_Z);
    if (!rep.bootstrap.z.empty()) {
        const auto& c = rep.bootstrap.constants;
        j["bootstrap"] = {{"M0", rep.bootstrap.M0},
                          {"M1", c.M1},
                          {"M1_prime", c.M1_prime},
                          {"M2", c.M2},
                          {"argmax_r", prof.r()[rep.bootstrap.argmax]},
                          {"dominant_term", rep.bootstrap.dominant}};
    }
    if (rep.asymptotics) {
        const auto& a = *rep.asymptotics;
        json dev = nullptr;
        json pred = nullptr;
        if (rep.comparison) {
            const auto& c = *rep.comparison;
            dev = {{"U_inf", c.U_deviation}, {"Theta_inf", c.Theta_deviation}, {"P_inf", c.P_deviation},
                   {"tolerance", c.tolerance}};
            pred = {{"U_inf", c.predicted.U_inf}, {"Theta_inf", c.predicted.Theta_inf}, {"P_inf", c.predicted.P_inf}};
        }
        j["asymptotics"] = {{"P_inf", a.P_inf},
                            {"U_inf", a.U_inf},
                            {"Theta_inf", a.Theta_inf},
                            {"leading_order_deviation", dev},
                            {"leading_order", pred},
                            {"window", {a.window_lo, a.window_hi}},
                            {"corrections", {{"P", a.P_fit.correction}, {"rU", a.U_fit.correction},
                                             {"r2Theta", a.Theta_fit.correction}}},
                            {"P_increment", a.P_increment}};
    } else {
        j["asymptotics"] = {{"P_inf", nullptr}, {"U_inf", nullptr}, {"Theta_inf", nullptr},
                            {"leading_order_deviation", nullptr}, {"note", rep.asymptotics_note}};
    }
    json bc;
    for (const auto& b : rep.bounds.bounds) bc[b.name] = b.constant;
    bc["ceiling"] = rep.bounds.ceiling;
    bc["density_bracket_ok"] = rep.bounds.density_bracket_ok;
    bc["margin_ok"] = rep.bounds.margin_ok;
    bc["min_margin"] = number_or_null(rep.bounds.min_margin);
    j["bound_constants"] = bc;
    return j.dump(2) + "\n";
}

void emit_summary_json(const RunReport& report, const fs::path& path) { write_atomic(path, summary_json(report)); }

// ---------------------------------------------------------------------------
// SVG plots

namespace {

struct Series {
    std::vector<double> x, y;
    std::string color = "#1f77b4";
    bool dashed = false;
    std::string label;
};

Series line(std::vector<double> x, std::vector<double> y) {
    Series s;
    s.x = std::move(x);
    s.y = std::move(y);
    return s;
}

struct Plot {
    std::string title, xlabel, ylabel;
    bool logx = false, logy = false;
    std::vector<Series> series;
    std::vector<std::pair<double, std::string>> hlines;  // value, label
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string render(const Plot& plot) {
    constexpr double W = 640, H = 420, L = 80, R = 20, T = 40, B = 55;
    auto tx = [&](double v) { return plot.logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return plot.logy ? std::log10(v) : v; };
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!plot.logx || x > 0) && (!plot.logy || y > 0);
    };
    for (const auto& s : plot.series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.x[i], s.y[i])) continue;
            x0 = std::min(x0, tx(s.x[i]));
            x1 = std::max(x1, tx(s.x[i]));
            y0 = std::min(y0, ty(s.y[i]));
            y1 = std::max(y1, ty(s.y[i]));
        }
    for (const auto& h : plot.hlines)
        if (std::isfinite(h.first) && (!plot.logy || h.first > 0)) {
            y0 = std::min(y0, ty(h.first));
            y1 = std::max(y1, ty(h.first));
        }
    if (!(x1 > x0)) x1 = x0 + 1;
    if (!(y1 > y0)) {
        const double pad = std::abs(y0) > 0 ? 0.05 * std::abs(y0) : 1.0;
        y0 -= pad;
        y1 += pad;
    } else {
        const double pad = 0.05 * (y1 - y0);
        y0 -= pad;
        y1 += pad;
    }
    auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
       << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(plot.title)
       << "</text>\n";
    os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = x0 + (x1 - x0) * k / 4.0, fy = y0 + (y1 - y0) * k / 4.0;
        const double vx = plot.logx ? std::pow(10.0, fx) : fx, vy = plot.logy ? std::pow(10.0, fy) : fy;
        const double sx = L + (W - L - R) * k / 4.0, sy = H - B - (H - T - B) * k / 4.0;
        os << "<line x1=\"" << fmt(sx) << "\" y1=\"" << H - B << "\" x2=\"" << fmt(sx) << "\" y2=\"" << H - B + 5
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(sx) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << tick(vx)
           << "</text>\n";
        os << "<line x1=\"" << L - 5 << "\" y1=\"" << fmt(sy) << "\" x2=\"" << L << "\" y2=\"" << fmt(sy)
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << L - 8 << "\" y=\"" << fmt(sy + 4) << "\" text-anchor=\"end\">" << tick(vy)
           << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
       << escape(plot.xlabel) << "</text>\n";
    os << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (T + H - B) / 2 << ")\">" << escape(plot.ylabel) << "</text>\n";
    for (const auto& h : plot.hlines) {
        if (!std::isfinite(h.first) || (plot.logy && h.first <= 0)) continue;
        os << "<line x1=\"" << L << "\" y1=\"" << fmt(py(h.first)) << "\" x2=\"" << W - R << "\" y2=\""
           << fmt(py(h.first)) << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>\n";
        os << "<text x=\"" << W - R - 4 << "\" y=\"" << fmt(py(h.first) - 4) << "\" text-anchor=\"end\" fill=\"#d62728\">"
           << escape(h.second) << "</text>\n";
    }
    int legend = 0;
    for (const auto& s : plot.series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
           << (s.dashed ? " stroke-dasharray=\"4 3\"" : "") << " points=\"";
        // Thin to at most ~2000 points; the plots are for inspection.
        const std::size_t stride = std::max<std::size_t>(1, s.x.size() / 2000);
        for (std::size_t i = 0; i < s.x.size(); i += stride) {
            if (!usable(s.x[i], s.y[i])) continue;
            os << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i])) << ' ';
        }
        if (!s.x.empty() && (s.x.size() - 1) % stride != 0 && usable(s.x.back(), s.y.back()))
            os << fmt(px(s.x.back())) << ',' << fmt(py(s.y.back()));
        os << "\"/>\n";
        if (!s.label.empty()) {
            const double ly = T + 16 + 16 * legend++;
            os << "<line x1=\"" << L + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << L + 34 << "\" y2=\"" << ly - 4
               << "\" stroke=\"" << s.color << "\"" << (s.dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
            os << "<text x=\"" << L + 40 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::vector<fs::path> emit_plots_svg(const RunReport& rep, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create plot directory " + dir.string());
    const auto& prof = rep.solution.profile;
    const auto r = prof.r();
    const std::vector<double> rv(r.begin(), r.end());
    std::vector<fs::path> written;
    auto put = [&](const std::string& name, const Plot& plot) {
        const auto path = dir / name;
        write_atomic(path, render(plot));
        written.push_back(path);
    };

    put("P.svg", Plot{"Density profile P(r)", "r", "P", false, false, {line(rv, prof.P)}, {}});
    put("U.svg", Plot{"Velocity profile U(r)", "r", "U", false, false, {line(rv, prof.U)}, {}});
    put("Theta.svg", Plot{"Temperature profile Theta(r)", "r", "Theta", false, false, {line(rv, prof.Theta)}, {}});

    std::vector<double> rU(rv.size()), r2T(rv.size());
    for (std::size_t i = 0; i < rv.size(); ++i) {
        rU[i] = rv[i] * prof.U[i];
        r2T[i] = rv[i] * rv[i] * prof.Theta[i];
    }
    std::vector<std::pair<double, std::string>> hu, ht;
    if (rep.asymptotics) {
        hu.push_back({rep.asymptotics->U_inf, "U_inf = " + tick(rep.asymptotics->U_inf)});
        ht.push_back({rep.asymptotics->Theta_inf, "Theta_inf = " + tick(rep.asymptotics->Theta_inf)});
    }
    put("tail_rU.svg", Plot{"Far field: r U(r)", "r", "r U", false, false, {line(rv, rU)}, hu});
    put("tail_r2Theta.svg", Plot{"Far field: r^2 Theta(r)", "r", "r^2 Theta", false, false, {line(rv, r2T)}, ht});

    if (const auto* c = std::get_if<CavitatingBoundaryData>(&rep.problem.boundary)) {
        const double beta = c->density_exponent(rep.problem.params.d);
        std::vector<double> x, y, ref;
        for (std::size_t i = 0; i < rv.size() && rv[i] <= c->delta; ++i) {
            x.push_back(rv[i]);
            y.push_back(prof.P[i]);
            ref.push_back(c->P_delta * std::pow(rv[i] / c->delta, beta));
        }
        Series data{x, y, "#1f77b4", false, "P"};
        Series slope{x, ref, "#2ca02c", true, "P_delta (r/delta)^" + tick(beta)};
        put("P_loglog.svg", Plot{"Near-origin density (log-log)", "r", "P", true, true, {data, slope}, {}});
    }
    return written;
}

}  // namespace nsexpander::cli
