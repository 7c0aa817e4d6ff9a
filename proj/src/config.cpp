#include "ramanqed/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ramanqed {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> known) {
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& item : obj.items()) {
        if (allowed.count(item.key()) == 0) {
            throw std::invalid_argument("unknown config key \"" + where +
                                        item.key() + "\"");
        }
    }
}

double read_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("config key \"") + key +
                                    "\" must be a number");
    }
    return v.get<double>();
}

int read_integer(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw std::invalid_argument(std::string("config key \"") + key +
                                    "\" must be an integer");
    }
    return v.get<int>();
}

ModelParams parse_model(const json& obj, ModelParams base) {
    reject_unknown_keys(obj, "model.",
                        {"omega_c", "omega_q", "omega_s", "theta", "eta",
                         "eta_s", "Omega", "omega_L", "kappa", "gamma",
                         "Gamma", "T", "n_fock", "n_floquet", "n_dressed"});
    base.omega_c = read_number(obj, "omega_c", base.omega_c);
    base.omega_q = read_number(obj, "omega_q", base.omega_q);
    base.omega_s = read_number(obj, "omega_s", base.omega_s);
    base.theta = read_number(obj, "theta", base.theta);
    base.eta = read_number(obj, "eta", base.eta);
    base.eta_s = read_number(obj, "eta_s", base.eta_s);
    base.Omega = read_number(obj, "Omega", base.Omega);
    base.omega_L = read_number(obj, "omega_L", base.omega_L);
    base.kappa = read_number(obj, "kappa", base.kappa);
    base.gamma = read_number(obj, "gamma", base.gamma);
    base.Gamma = read_number(obj, "Gamma", base.Gamma);
    base.T = read_number(obj, "T", base.T);
    base.n_fock = read_integer(obj, "n_fock", base.n_fock);
    base.n_floquet = read_integer(obj, "n_floquet", base.n_floquet);
    base.n_dressed = read_integer(obj, "n_dressed", base.n_dressed);
    return base;
}

GridSpec parse_grid(const json& obj, const std::string& where, GridSpec base) {
    reject_unknown_keys(obj, where + ".", {"min", "max", "points"});
    base.lo = read_number(obj, "min", base.lo);
    base.hi = read_number(obj, "max", base.hi);
    base.n = read_integer(obj, "points", base.n);
    return base;
}

}  // namespace

const char* to_string(Task task) {
    switch (task) {
        case Task::eigen: return "eigen";
        case Task::spectrum: return "spectrum";
        case Task::map: return "map";
        case Task::raman: return "raman";
        case Task::classify: return "classify";
        case Task::verify: return "verify";
    }
    return "unknown";
}

std::vector<double> GridSpec::points() const {
    if (n < 1) throw std::invalid_argument("grid needs at least one point");
    if (n == 1) {
        if (hi != lo) {
            throw std::invalid_argument(
                "single-point grid must have min == max");
        }
        return {lo};
    }
    if (!(hi > lo)) throw std::invalid_argument("grid range is empty");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

RunConfig::RunConfig() {
    // Reference operating point: tilted dipole, USC coupling, weak sensor.
    model.theta = M_PI / 6.0;
}

void RunConfig::validate() const {
    model.validate();
    omega_s_grid.points();
    omega_L_grid.points();
    if (raman_n_states < 2) {
        throw std::invalid_argument("raman.n_states must be at least 2");
    }
    if (raman_n_sum < 1) {
        throw std::invalid_argument("raman.n_sum must be positive");
    }
    if (classify_tol < 0.0) {
        throw std::invalid_argument("classify.tol must be nonnegative");
    }
    if (workers < 0) {
        throw std::invalid_argument("workers must be positive");
    }
}

double RunConfig::resolved_classify_tol() const {
    return classify_tol > 0.0 ? classify_tol : 3.0 * model.Gamma;
}

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    if (!root.is_object()) {
        throw std::invalid_argument("config root must be a JSON object");
    }
    reject_unknown_keys(root, "",
                        {"model", "omega_s_grid", "omega_L_grid", "raman",
                         "classify", "workers", "output"});

    RunConfig cfg;
    if (root.contains("model")) {
        if (!root["model"].is_object()) {
            throw std::invalid_argument("\"model\" must be an object");
        }
        cfg.model = parse_model(root["model"], cfg.model);
    }
    if (root.contains("omega_s_grid")) {
        cfg.omega_s_grid =
            parse_grid(root["omega_s_grid"], "omega_s_grid", cfg.omega_s_grid);
    }
    if (root.contains("omega_L_grid")) {
        cfg.omega_L_grid =
            parse_grid(root["omega_L_grid"], "omega_L_grid", cfg.omega_L_grid);
    }
    if (root.contains("raman")) {
        const json& r = root["raman"];
        reject_unknown_keys(r, "raman.", {"n_states", "n_sum"});
        cfg.raman_n_states = read_integer(r, "n_states", cfg.raman_n_states);
        cfg.raman_n_sum = read_integer(r, "n_sum", cfg.raman_n_sum);
    }
    if (root.contains("classify")) {
        const json& c = root["classify"];
        reject_unknown_keys(c, "classify.", {"tol", "queries"});
        cfg.classify_tol = read_number(c, "tol", cfg.classify_tol);
        if (c.contains("queries")) {
            if (!c["queries"].is_array()) {
                throw std::invalid_argument(
                    "classify.queries must be an array");
            }
            for (const auto& q : c["queries"]) {
                reject_unknown_keys(q, "classify.queries[].",
                                    {"omega_L", "omega_s"});
                if (!q.contains("omega_L") || !q.contains("omega_s")) {
                    throw std::invalid_argument(
                        "classify queries need omega_L and omega_s");
                }
                ClassifyQuery query;
                query.omega_L = read_number(q, "omega_L", 0.0);
                query.omega_s = read_number(q, "omega_s", 0.0);
                cfg.classify_queries.push_back(query);
            }
        }
    }
    cfg.workers = read_integer(root, "workers", cfg.workers);
    if (root.contains("output")) {
        if (!root["output"].is_string()) {
            throw std::invalid_argument("\"output\" must be a string");
        }
        cfg.output_path = root["output"].get<std::string>();
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace ramanqed
