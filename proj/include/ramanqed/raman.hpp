#pragma once

#include <string>
#include <vector>

#include "ramanqed/model.hpp"
#include "ramanqed/operators.hpp"

namespace ramanqed {

enum class LineKind { stokes, anti_stokes, rayleigh };

enum class FeatureKind { transition, rayleigh, raman, hyper_raman, unclassified };

const char* to_string(LineKind kind);
const char* to_string(FeatureKind kind);

// A single scattering line at drive frequency omega_L. Rates carry an
// arbitrary overall prefactor; only ratios and trends are meaningful.
struct RamanLine {
    int i = 0;
    int f = 0;
    double omega_fi = 0.0;  // = omega_f - omega_i
    double omega_R = 0.0;   // = omega_L - omega_fi
    LineKind kind = LineKind::stokes;
    Complex amplitude{0.0, 0.0};
    double relative_rate = 0.0;
    double population_factor = 0.0;  // p_i * (1 - p_f)
    bool flagged = false;            // resonance-enhanced, regularized
};

struct RamanAmplitude {
    Complex value{0.0, 0.0};
    bool flagged = false;
};

struct Classification {
    FeatureKind kind = FeatureKind::unclassified;
    int i = -1;
    int f = -1;
    double position = 0.0;
    double residual = 0.0;
};

// Field quadrature matrix X with X(f, j) = <f|(a + a^dag)|j>, built from a
// sensor-free eigensystem.
Operator dipole_elements(const EigenSystem& eig);

// Second-order amplitude for the |i> -> |f> line: the intermediate-state
// sum runs over the lowest n_sum states; denominators closer than 1e-3 to
// resonance are shifted off the real axis by i*resonance_width and the
// result is flagged.
RamanAmplitude raman_amplitude(const EigenSystem& eig, const Operator& x,
                               int i, int f, double omega_L, int n_sum = 20,
                               double resonance_width = 1e-3);

// Thermal occupation of the dressed levels; T = 0 collapses onto the
// ground state.
std::vector<double> gibbs_populations(const EigenSystem& eig, double T);

// All i != f lines with positive emission frequency among the lowest
// n_states levels, sorted by rate (descending).
std::vector<RamanLine> raman_line_table(const EigenSystem& eig,
                                        const Operator& x, double omega_L,
                                        double T, int n_states,
                                        int n_sum = 20,
                                        double resonance_width = 1e-3);

// Best-matching interpretation of an emission feature at omega_s among
// dressed transitions, Raman lines, hyper-Raman lines and the Rayleigh
// line; residual ties go to the lower-order process.
Classification classify_feature(double omega_s, double omega_L,
                                const EigenSystem& eig, double tol,
                                int n_states = 8);

// relative_rate of one line versus the dipole angle, rebuilding the
// eigensystem at every point.
std::vector<double> theta_scan(const std::vector<double>& theta_grid, int i,
                               int f, const ModelParams& p);

}  // namespace ramanqed
