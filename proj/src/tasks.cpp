#include "ramanqed/tasks.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "ramanqed/checks.hpp"
#include "ramanqed/dissipation.hpp"
#include "ramanqed/model.hpp"
#include "ramanqed/output.hpp"
#include "ramanqed/raman.hpp"
#include "ramanqed/spectrum.hpp"
#include "ramanqed/sweep.hpp"

namespace ramanqed {

namespace {

const char* parity_label(Parity p) {
    switch (p) {
        case Parity::even: return "+1";
        case Parity::odd: return "-1";
        case Parity::mixed: return "0";
    }
    return "0";
}

std::string default_output(Task task) {
    switch (task) {
        case Task::eigen: return "eigen.csv";
        case Task::spectrum: return "spectrum.csv";
        case Task::map: return "map.csv";
        case Task::raman: return "raman.csv";
        case Task::classify: return "classify.json";
        case Task::verify: return "";
    }
    return "";
}

std::string output_path(const RunConfig& cfg) {
    return cfg.output_path.empty() ? default_output(cfg.task)
                                   : cfg.output_path;
}

JsonNode grid_json(const GridSpec& g) {
    JsonNode node = JsonNode::object();
    node.add("min", JsonNode::number(g.lo));
    node.add("max", JsonNode::number(g.hi));
    node.add("points", JsonNode::integer(g.n));
    return node;
}

// The resolved physics configuration. Deliberately excludes workers and
// output paths: those change how the answer is computed, not what it is,
// and sidecars must stay byte-identical across them.
JsonNode config_json(const RunConfig& cfg) {
    JsonNode model = JsonNode::object();
    model.add("omega_c", JsonNode::number(cfg.model.omega_c));
    model.add("omega_q", JsonNode::number(cfg.model.omega_q));
    model.add("omega_s", JsonNode::number(cfg.model.omega_s));
    model.add("theta", JsonNode::number(cfg.model.theta));
    model.add("eta", JsonNode::number(cfg.model.eta));
    model.add("eta_s", JsonNode::number(cfg.model.eta_s));
    model.add("Omega", JsonNode::number(cfg.model.Omega));
    model.add("omega_L", JsonNode::number(cfg.model.omega_L));
    model.add("kappa", JsonNode::number(cfg.model.kappa));
    model.add("gamma", JsonNode::number(cfg.model.gamma));
    model.add("Gamma", JsonNode::number(cfg.model.Gamma));
    model.add("T", JsonNode::number(cfg.model.T));
    model.add("n_fock", JsonNode::integer(cfg.model.n_fock));
    model.add("n_floquet", JsonNode::integer(cfg.model.n_floquet));
    model.add("n_dressed", JsonNode::integer(cfg.model.n_dressed));

    JsonNode raman = JsonNode::object();
    raman.add("n_states", JsonNode::integer(cfg.raman_n_states));
    raman.add("n_sum", JsonNode::integer(cfg.raman_n_sum));

    JsonNode classify = JsonNode::object();
    classify.add("tol", JsonNode::number(cfg.resolved_classify_tol()));
    JsonNode queries = JsonNode::array();
    for (const auto& q : cfg.classify_queries) {
        JsonNode item = JsonNode::object();
        item.add("omega_L", JsonNode::number(q.omega_L));
        item.add("omega_s", JsonNode::number(q.omega_s));
        queries.push(std::move(item));
    }
    classify.add("queries", std::move(queries));

    JsonNode out = JsonNode::object();
    out.add("model", std::move(model));
    out.add("omega_s_grid", grid_json(cfg.omega_s_grid));
    out.add("omega_L_grid", grid_json(cfg.omega_L_grid));
    out.add("raman", std::move(raman));
    out.add("classify", std::move(classify));
    return out;
}

JsonNode warnings_json(const RunConfig& cfg) {
    JsonNode arr = JsonNode::array();
    for (const auto& w : cfg.model.validate()) {
        arr.push(JsonNode::string(w));
    }
    return arr;
}

JsonNode diagnostics_json(const SweepDiagnostics& d) {
    JsonNode node = JsonNode::object();
    node.add("n_dressed", JsonNode::integer(d.n_dressed));
    node.add("max_n_floquet", JsonNode::integer(d.max_n_floquet));
    node.add("max_residual", JsonNode::number(d.max_residual));
    node.add("max_convergence_delta",
             JsonNode::number(d.max_convergence_delta));
    node.add("min_eigenvalue", JsonNode::number(d.min_eigenvalue));
    node.add("dropped_thermal_up_transitions",
             JsonNode::integer(d.dropped_up_total));
    return node;
}

void write_sidecar(const std::string& path, JsonNode body) {
    atomic_write(path + ".meta.json", body.dump());
}

JsonNode sidecar_head(const RunConfig& cfg) {
    JsonNode body = JsonNode::object();
    body.add("task", JsonNode::string(to_string(cfg.task)));
    body.add("config", config_json(cfg));
    return body;
}

}  // namespace

void run_eigen(const RunConfig& cfg) {
    cfg.validate();
    const int n_fock = resolve_n_fock(cfg.model);
    const Operator h = build_hamiltonian(cfg.model, false, n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(n_fock));

    const int levels = std::min(eig.dim, 16);
    std::string csv = "index,energy,energy_shifted,parity\n";
    for (int k = 0; k < levels; ++k) {
        csv += std::to_string(k);
        csv += ',';
        csv += format_double(eig.energies[k]);
        csv += ',';
        csv += format_double(eig.energies_shifted[k]);
        csv += ',';
        csv += parity_label(eig.parity[static_cast<std::size_t>(k)]);
        csv += '\n';
    }
    const std::string path = output_path(cfg);
    atomic_write(path, csv);

    JsonNode body = sidecar_head(cfg);
    body.add("n_fock", JsonNode::integer(n_fock));
    body.add("levels", JsonNode::integer(levels));
    body.add("warnings", warnings_json(cfg));
    write_sidecar(path, std::move(body));
}

void run_spectrum(const RunConfig& cfg) {
    cfg.validate();
    SpectrumCurve curve =
        emission_spectrum(cfg.model, cfg.omega_s_grid.points(),
                          resolve_workers(cfg.workers));
    const double normalization = normalize_global(curve.intensity);

    std::string csv = "omega_s,intensity\n";
    for (std::size_t i = 0; i < curve.omega_s_grid.size(); ++i) {
        csv += format_double(curve.omega_s_grid[i]);
        csv += ',';
        csv += format_double(curve.intensity[i]);
        csv += '\n';
    }
    const std::string path = output_path(cfg);
    atomic_write(path, csv);

    JsonNode body = sidecar_head(cfg);
    body.add("n_fock", JsonNode::integer(curve.diagnostics.n_fock));
    body.add("normalization", JsonNode::number(normalization));
    body.add("diagnostics", diagnostics_json(curve.diagnostics));
    body.add("warnings", warnings_json(cfg));
    write_sidecar(path, std::move(body));
}

void run_map(const RunConfig& cfg) {
    cfg.validate();
    SpectrumMap map = excitation_emission_map(
        cfg.model, cfg.omega_L_grid.points(), cfg.omega_s_grid.points(),
        resolve_workers(cfg.workers));
    const double normalization = normalize_global(map.intensity);

    std::string csv = "omega_L,omega_s,intensity\n";
    for (Eigen::Index r = 0; r < map.intensity.rows(); ++r) {
        for (Eigen::Index c = 0; c < map.intensity.cols(); ++c) {
            csv += format_double(map.omega_L_grid[static_cast<std::size_t>(r)]);
            csv += ',';
            csv += format_double(map.omega_s_grid[static_cast<std::size_t>(c)]);
            csv += ',';
            csv += format_double(map.intensity(r, c));
            csv += '\n';
        }
    }
    const std::string path = output_path(cfg);
    atomic_write(path, csv);

    JsonNode body = sidecar_head(cfg);
    body.add("n_fock", JsonNode::integer(map.diagnostics.n_fock));
    body.add("temperature", JsonNode::number(map.temperature));
    body.add("normalization", JsonNode::number(normalization));
    body.add("diagnostics", diagnostics_json(map.diagnostics));
    body.add("warnings", warnings_json(cfg));
    write_sidecar(path, std::move(body));
}

void run_raman(const RunConfig& cfg) {
    cfg.validate();
    const int n_fock = resolve_n_fock(cfg.model);
    const Operator h = build_hamiltonian(cfg.model, false, n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(n_fock));
    const Operator x = dipole_elements(eig);
    const auto lines = raman_line_table(
        eig, x, cfg.model.omega_L, cfg.model.T, cfg.raman_n_states,
        cfg.raman_n_sum, 0.5 * (cfg.model.kappa + cfg.model.gamma));

    std::string csv =
        "i,f,kind,omega_fi,omega_R,abs_amplitude,relative_rate,flags\n";
    for (const auto& line : lines) {
        csv += std::to_string(line.i);
        csv += ',';
        csv += std::to_string(line.f);
        csv += ',';
        csv += to_string(line.kind);
        csv += ',';
        csv += format_double(line.omega_fi);
        csv += ',';
        csv += format_double(line.omega_R);
        csv += ',';
        csv += format_double(std::abs(line.amplitude));
        csv += ',';
        csv += format_double(line.relative_rate);
        csv += ',';
        csv += line.flagged ? "resonance_enhanced" : "";
        csv += '\n';
    }
    const std::string path = output_path(cfg);
    atomic_write(path, csv);

    JsonNode body = sidecar_head(cfg);
    body.add("n_fock", JsonNode::integer(n_fock));
    body.add("lines", JsonNode::integer(static_cast<long long>(lines.size())));
    body.add("warnings", warnings_json(cfg));
    write_sidecar(path, std::move(body));
}

void run_classify(const RunConfig& cfg) {
    cfg.validate();
    const int n_fock = resolve_n_fock(cfg.model);
    const Operator h = build_hamiltonian(cfg.model, false, n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(n_fock));
    const double tol = cfg.resolved_classify_tol();

    JsonNode results = JsonNode::array();
    for (const auto& q : cfg.classify_queries) {
        const Classification c = classify_feature(q.omega_s, q.omega_L, eig,
                                                  tol, cfg.raman_n_states);
        JsonNode item = JsonNode::object();
        item.add("omega_L", JsonNode::number(q.omega_L));
        item.add("omega_s", JsonNode::number(q.omega_s));
        item.add("label", JsonNode::string(to_string(c.kind)));
        item.add("i", JsonNode::integer(c.i));
        item.add("f", JsonNode::integer(c.f));
        item.add("position", JsonNode::number(c.position));
        item.add("residual", JsonNode::number(c.residual));
        results.push(std::move(item));
    }
    JsonNode doc = JsonNode::object();
    doc.add("results", std::move(results));
    const std::string path = output_path(cfg);
    atomic_write(path, doc.dump());

    JsonNode body = sidecar_head(cfg);
    body.add("n_fock", JsonNode::integer(n_fock));
    body.add("warnings", warnings_json(cfg));
    write_sidecar(path, std::move(body));
}

int run_verify(const RunConfig& cfg) {
    cfg.validate();
    const auto results = run_verification(cfg.model);
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::fflush(stdout);
    return all_passed ? 0 : 2;
}

int run_task(const RunConfig& cfg) {
    switch (cfg.task) {
        case Task::eigen: run_eigen(cfg); return 0;
        case Task::spectrum: run_spectrum(cfg); return 0;
        case Task::map: run_map(cfg); return 0;
        case Task::raman: run_raman(cfg); return 0;
        case Task::classify: run_classify(cfg); return 0;
        case Task::verify: return run_verify(cfg);
    }
    return 1;
}

}  // namespace ramanqed
