#pragma once

#include <string>
#include <vector>

#include "ramanqed/model.hpp"

namespace ramanqed {

enum class Task { eigen, spectrum, map, raman, classify, verify };

const char* to_string(Task task);

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;

    std::vector<double> points() const;
};

struct ClassifyQuery {
    double omega_L = 0.0;
    double omega_s = 0.0;
};

// Everything a run needs, resolved from JSON plus defaults. workers and
// output_path are plumbing: they never appear in result sidecars, so
// identical physics configs produce identical outputs.
struct RunConfig {
    ModelParams model;
    Task task = Task::spectrum;
    GridSpec omega_s_grid{0.2, 2.2, 220};
    GridSpec omega_L_grid{0.9, 1.6, 71};
    int raman_n_states = 8;
    int raman_n_sum = 20;
    double classify_tol = 0.0;  // 0 resolves to 3*Gamma
    std::vector<ClassifyQuery> classify_queries;
    int workers = 0;  // 0 resolves via env, then hardware
    std::string output_path;

    RunConfig();
    void validate() const;
    double resolved_classify_tol() const;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace ramanqed
