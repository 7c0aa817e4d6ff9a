#pragma once

#include <cstddef>
#include <vector>

#include "ramanqed/model.hpp"
#include "ramanqed/operators.hpp"

namespace ramanqed {

struct PointDiagnostics {
    int n_fock = 0;
    int n_dressed = 0;
    int n_floquet_used = 0;
    int dropped_up = 0;
    double residual = 0.0;
    double convergence_delta = 0.0;
    double min_eigenvalue = 0.0;
};

// Worst-case diagnostics across a sweep, folded in grid order.
struct SweepDiagnostics {
    int n_fock = 0;
    int n_dressed = 0;
    int max_n_floquet = 0;
    long long dropped_up_total = 0;
    double max_residual = 0.0;
    double max_convergence_delta = 0.0;
    double min_eigenvalue = 0.0;

    void absorb(const PointDiagnostics& d);
};

struct SpectrumPoint {
    double omega_s = 0.0;
    double intensity = 0.0;
    PointDiagnostics diagnostics;
};

// Intensities are raw (arbitrary but fixed units). Normalization to a
// unit maximum happens only when results are written out.
struct SpectrumCurve {
    std::vector<double> omega_s_grid;
    std::vector<double> intensity;
    ModelParams params;
    SweepDiagnostics diagnostics;
};

struct SpectrumMap {
    std::vector<double> omega_L_grid;
    std::vector<double> omega_s_grid;
    Eigen::MatrixXd intensity;  // one row per omega_L
    double temperature = 0.0;
    ModelParams params;
    SweepDiagnostics diagnostics;
};

struct PeakLocation {
    double omega = 0.0;
    double height = 0.0;
    std::size_t index = 0;
};

// Energy-lowering collector for the sensor channel in the dressed basis;
// its weighted elements make Tr[rho (S+)^dag S+] the emission rate.
Operator sensor_collector(const EigenSystem& eig, double omega_s, int n_fock);
double sensor_emission(const Operator& rho0, const Operator& collector);

// One full pipeline pass at a single sensor frequency: rebuild, dress,
// dissipate, Floquet-solve, read out.
SpectrumPoint solve_single_point(const ModelParams& p, double omega_s,
                                 int n_fock);

SpectrumCurve emission_spectrum(const ModelParams& p,
                                const std::vector<double>& omega_s_grid,
                                int workers = 1);

SpectrumMap excitation_emission_map(const ModelParams& p,
                                    const std::vector<double>& omega_L_grid,
                                    const std::vector<double>& omega_s_grid,
                                    int workers = 1);

// Baseline-subtracted integral over [center - half_window, center + half_window];
// the baseline is the straight line through the window's edge samples.
double peak_intensity(const SpectrumCurve& curve, double center,
                      double half_window);

// Grid position of the largest local maximum inside [lo, hi].
PeakLocation strongest_local_max(const std::vector<double>& grid,
                                 const std::vector<double>& values, double lo,
                                 double hi);

std::vector<double> linear_grid(double lo, double hi, int n);
std::vector<double> zoom_grid(double center, double half_width, int n);

// Scales values so the maximum is 1; returns the raw maximum (0 if the
// data is identically zero, in which case nothing is scaled).
double normalize_global(std::vector<double>& values);
double normalize_global(Eigen::MatrixXd& values);

}  // namespace ramanqed
