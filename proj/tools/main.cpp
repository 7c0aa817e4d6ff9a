#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include "ramanqed/config.hpp"
#include "ramanqed/tasks.hpp"

namespace {

// "--zoom center,halfwidth" replaces the omega_s grid with a window of the
// same point count around a feature of interest.
void apply_zoom(ramanqed::RunConfig& cfg, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--zoom expects \"center,halfwidth\"");
    }
    double center = 0.0;
    double halfwidth = 0.0;
    try {
        std::size_t used = 0;
        center = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        halfwidth = std::stod(text.substr(comma + 1), &used);
        if (used != text.size() - comma - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("--zoom expects \"center,halfwidth\"");
    }
    if (!(halfwidth > 0.0) || !(center - halfwidth > 0.0)) {
        throw std::invalid_argument(
            "--zoom window must sit at positive frequencies");
    }
    cfg.omega_s_grid.lo = center - halfwidth;
    cfg.omega_s_grid.hi = center + halfwidth;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Emission spectra and Raman analysis of a driven cavity-QED "
                 "system with a spectrometer qubit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string zoom_spec;
    int workers = 0;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--workers", workers, "parallel worker count (default: env "
                                         "RAMANQED_WORKERS, then hardware)");
    app.add_option("--out", out_path, "output file path");
    app.add_option("--zoom", zoom_spec,
                   "center,halfwidth window override for the omega_s grid");

    auto* sc_eigen =
        app.add_subcommand("eigen", "dressed energy levels and parities");
    auto* sc_spectrum =
        app.add_subcommand("spectrum", "emission spectrum over omega_s");
    auto* sc_map = app.add_subcommand(
        "map", "excitation-emission map over (omega_L, omega_s)");
    auto* sc_raman =
        app.add_subcommand("raman", "golden-rule line table at omega_L");
    auto* sc_classify =
        app.add_subcommand("classify", "label spectral features");
    auto* sc_verify =
        app.add_subcommand("verify", "run the solver cross-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    ramanqed::RunConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = ramanqed::load_config(config_path);
        }
        if (workers != 0) cfg.workers = workers;
        if (!out_path.empty()) cfg.output_path = out_path;
        if (!zoom_spec.empty()) apply_zoom(cfg, zoom_spec);

        if (sc_eigen->parsed()) cfg.task = ramanqed::Task::eigen;
        if (sc_spectrum->parsed()) cfg.task = ramanqed::Task::spectrum;
        if (sc_map->parsed()) cfg.task = ramanqed::Task::map;
        if (sc_raman->parsed()) cfg.task = ramanqed::Task::raman;
        if (sc_classify->parsed()) cfg.task = ramanqed::Task::classify;
        if (sc_verify->parsed()) cfg.task = ramanqed::Task::verify;

        cfg.validate();
        for (const auto& w : cfg.model.validate()) {
            std::fprintf(stderr, "warning: %s\n", w.c_str());
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    }

    try {
        return ramanqed::run_task(cfg);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
