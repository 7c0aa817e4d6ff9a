#pragma once

// Cavity QED model in the dipole gauge: a single cavity mode ultrastrongly
// coupled to a two-level dipole with a permanent-dipole tilt angle theta, plus
// a weakly coupled two-level spectrometer ("sensor") whose transition
// frequency omega_s is swept to resolve the emission spectrum.
//
// All frequencies are in units of the cavity frequency (omega_c = 1).

#include <string>
#include <vector>

#include "ramanqed/operators.hpp"

namespace ramanqed {

struct ModelParams {
    double omega_c = 1.0;   // unit of all frequencies; must stay 1
    double omega_q = 1.0;   // qubit splitting
    double omega_s = 1.0;   // sensor splitting (swept for spectra)
    double theta = 0.0;     // dipole tilt angle, radians
    double eta = 0.3;       // normalized cavity-qubit coupling
    double eta_s = 1e-5;    // normalized sensor coupling
    double Omega = 5e-3;    // drive amplitude
    double omega_L = 1.1;   // drive frequency
    double kappa = 1e-3;    // cavity decay rate
    double gamma = 1e-3;    // qubit decay rate
    double Gamma = 1e-3;    // sensor decay rate (spectral resolution)
    double T = 0.0;         // bath temperature (k_B T in units of hbar omega_c)
    int n_fock = 0;         // Fock levels; 0 = resolve adaptively
    int n_floquet = 3;      // starting harmonic depth for the steady state
    int n_dressed = 0;      // dressed states kept in the master equation;
                            // 0 = energy-window rule (see resolve_n_dressed)

    // Throws std::invalid_argument naming the offending field; returns
    // human-readable warnings (e.g. a sensor coupling large enough to
    // back-act on the system).
    std::vector<std::string> validate() const;
};

enum class Parity : int { even = +1, odd = -1, mixed = 0 };

struct EigenSystem {
    Eigen::VectorXd energies;          // ascending, raw
    Eigen::VectorXd energies_shifted;  // energies - ground energy
    Operator states;                   // columns, orthonormal, phase-fixed
    std::vector<Parity> parity;        // per state; mixed when undefined
    int dim = 0;

    double transition(int upper, int lower) const {
        return energies(upper) - energies(lower);
    }
};

// cos(theta) sigma_x + sin(theta) sigma_z on a bare two-level system.
Operator sigma_p(double theta);

// Full Hamiltonian on cavity (x) TLS (x) sensor (with_sensor = true) or on
// cavity (x) TLS alone. Hermitian by construction; checked to 1e-12.
Operator build_hamiltonian(const ModelParams& p, bool with_sensor, int n_fock);

// Drive / field-quadrature operator i(a - a^dag) - 2 eta sigma_x, identity on
// the sensor factor. The cavity couples to its bath through this same
// quadrature.
Operator drive_operator(const ModelParams& p, bool with_sensor, int n_fock);

// exp[i pi (a^dag a + sigma^dag sigma)] on cavity (x) TLS: the +-1 grading of
// the total excitation number.
Operator parity_operator(int n_fock);

// Convenience embeds on the model's tensor space.
Operator tls_operator(const Operator& op2, bool with_sensor, int n_fock);
Operator sensor_operator(const Operator& op2, int n_fock);

// Eigendecomposition of a Hermitian matrix with deterministic conventions:
// ascending energies; each eigenvector's largest-|.| component made real
// positive; near-degenerate pairs ordered by parity label (when a grading is
// supplied) then lexicographically.
EigenSystem diagonalize(const Operator& h);
EigenSystem diagonalize(const Operator& h, const Operator& grading);

// <psi|grading|psi> within tol of +-1 labels the state; otherwise mixed.
void assign_parity(EigenSystem& eig, const Operator& grading, double tol = 1e-8);

// Adaptive Fock truncation: smallest even N >= 4 whose sensor-free ground
// state has < 1e-10 population in the top two Fock levels.
int resolve_n_fock(const ModelParams& p);

// Number of dressed states kept in the master equation. Explicit n_dressed
// wins; otherwise all states within max(2 omega_L, omega_s) + 2 + 5T of the
// ground state (at least 8).
int resolve_n_dressed(const ModelParams& p, const EigenSystem& eig);

}  // namespace ramanqed
