#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "nsexpander/cli/io.hpp"
#include "nsexpander/cli/options.hpp"

namespace nsexpander::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw InputError("empty entry in list '" + s + "'");
        out.push_back(item);
    }
    return out;
}

bool known(const std::string& key) {
    const auto& keys = option_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        if (key.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

SweepAxis sweep_axis(const std::map<std::string, std::string>& options, const std::string& spec) {
    SweepAxis axis;
    if (!spec.empty()) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw InputError("--sweep expects key=v1,v2,...");
        axis.key = trim(spec.substr(0, eq));
        axis.values = split_list(spec.substr(eq + 1));
    }
    for (const auto& [k, v] : options) {
        if (v.find(',') == std::string::npos) continue;
        if (!axis.key.empty()) throw InputError("only one option may be swept (got '" + axis.key + "' and '" + k + "')");
        axis.key = k;
        axis.values = split_list(v);
    }
    if (axis.key.empty()) throw InputError("nothing to sweep: use --sweep key=v1,v2,... or a comma-separated value");
    if (!known(axis.key) || axis.key == "case") throw InputError("cannot sweep over '" + axis.key + "'");
    return axis;
}

SweepRow sweep_point(const Problem& problem, const std::string& value) {
    SweepRow row;
    row.value = value;
    try {
        row.report = run(problem);
    } catch (const ConvergenceError& e) {
        row.status = "not_converged";
        row.message = e.what();
    } catch (const SolverError& e) {
        row.status = "solver_error";
        row.message = e.what();
    }
    return row;
}

std::string sweep_table(const std::string& key, const std::vector<SweepRow>& rows) {
    std::string s = key + ",status,iterations,P_inf,U_inf,Theta_inf,bootstrap_max_Z,residual_sup\n";
    for (const auto& row : rows) {
        s += row.value + "," + row.status + ",";
        if (row.report) {
            const auto& rep = *row.report;
            s += std::to_string(rep.solution.trace.iterations()) + ",";
            if (rep.asymptotics)
                s += num(rep.asymptotics->P_inf) + "," + num(rep.asymptotics->U_inf) + "," +
                     num(rep.asymptotics->Theta_inf) + ",";
            else
                s += ",,,";
            s += (rep.bootstrap.z.empty() ? std::string() : num(rep.bootstrap.max_Z)) + ",";
            s += num(rep.residual.sup());
        } else {
            s += ",,,,,";
        }
        s += "\n";
    }
    return s;
}

std::string sweep_summary_json(const std::string& key, const std::vector<SweepRow>& rows) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema"] = 1;
    j["sweep"] = key;
    j["runs"] = json::array();
    for (const auto& row : rows) {
        if (row.report) {
            auto s = json::parse(summary_json(*row.report));
            j["runs"].push_back({{"value", row.value}, {"status", row.status}, {"summary", s}});
        } else {
            j["runs"].push_back({{"value", row.value}, {"status", row.status}, {"message", row.message}});
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace nsexpander::cli
