#include "ramanqed/checks.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ramanqed/dissipation.hpp"
#include "ramanqed/floquet.hpp"
#include "ramanqed/raman.hpp"
#include "ramanqed/spectrum.hpp"

namespace ramanqed {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

LiouvillianParts full_model_parts(const ModelParams& p) {
    const int n_fock = resolve_n_fock(p);
    const Operator h = build_hamiltonian(p, true, n_fock);
    const EigenSystem eig = diagonalize(h);
    const auto jumps = standard_jumps(p, eig, n_fock);
    return build_liouvillian(p, eig, jumps, n_fock);
}

}  // namespace

CheckResult check_steady_vs_propagation(const ModelParams& p,
                                        double n_periods, double tol) {
    CheckResult out;
    out.name = "steady state vs time propagation";
    const LiouvillianParts parts = full_model_parts(p);
    const FloquetSolution sol = steady_state(parts, p.n_floquet);
    const double period = 2.0 * M_PI / p.omega_L;
    const PropagationResult prop =
        propagate_oracle(parts, n_periods * period, 4);
    const double diff = trace_norm(sol.rho0 - prop.rho_average);
    out.passed = diff < tol;
    out.detail = fmt("trace-norm difference %.3g after %.0f periods (tol %.1g)",
                     diff, n_periods, tol);
    return out;
}

CheckResult check_gibbs_balance(const ModelParams& p, double T,
                                double rel_tol) {
    CheckResult out;
    out.name = "thermal detailed balance";
    ModelParams q = p;
    q.T = T;
    const int n_fock = resolve_n_fock(q);
    const Operator h = build_hamiltonian(q, false, n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(n_fock));

    std::vector<JumpOperator> jumps = thermal_channels(
        eig, drive_operator(q, false, n_fock), T, WeightRule::plain(),
        DecayChannel::cavity, q.kappa);
    const auto tls = thermal_channels(
        eig, tls_operator(pauli(Axis::x), false, n_fock), T,
        WeightRule::freq_ratio(q.omega_q), DecayChannel::tls, q.gamma);
    jumps.insert(jumps.end(), tls.begin(), tls.end());

    const Operator drive_eig = Operator::Zero(eig.dim, eig.dim);
    const LiouvillianParts parts = assemble_liouvillian(
        eig.energies, jumps, drive_eig, 0.0, q.omega_L, eig.dim);
    const Operator rho = nullspace_state(parts.l0).rho;

    const double measured = rho(1, 1).real() / rho(0, 0).real();
    const double predicted = std::exp(-eig.transition(1, 0) / T);
    const double rel = std::abs(measured - predicted) / predicted;
    out.passed = rel < rel_tol;
    out.detail = fmt(
        "p1/p0 measured %.4g vs thermal %.4g (rel. dev. %.2g)",
        measured, predicted, rel);
    return out;
}

CheckResult check_parity_structure(const ModelParams& p) {
    CheckResult out;
    out.name = "parity selection structure";
    ModelParams q = p;
    q.theta = 0.0;
    const int n_fock = resolve_n_fock(q);
    const Operator h = build_hamiltonian(q, false, n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(n_fock));

    const int window = std::min(eig.dim, 12);
    for (int k = 0; k < window; ++k) {
        if (eig.parity[static_cast<std::size_t>(k)] == Parity::mixed) {
            out.passed = false;
            out.detail = fmt("state %g has no definite parity at theta = 0",
                             static_cast<double>(k));
            return out;
        }
    }

    const Operator x = dipole_elements(eig);
    double worst = 0.0;
    for (int j = 0; j < window; ++j) {
        for (int k = 0; k < window; ++k) {
            if (eig.parity[static_cast<std::size_t>(j)] ==
                eig.parity[static_cast<std::size_t>(k)]) {
                worst = std::max(worst, std::abs(x(j, k)));
            }
        }
    }
    out.passed = worst < 1e-12;
    out.detail = fmt(
        "largest parity-forbidden quadrature element %.3g (tol 1e-12)", worst);
    return out;
}

CheckResult check_depth_convergence(const ModelParams& p) {
    CheckResult out;
    out.name = "harmonic depth convergence";
    const LiouvillianParts parts = full_model_parts(p);
    const Operator rho2 = nullspace_state(floquet_ladder(parts, 2).l_eff).rho;
    const Operator rho3 = nullspace_state(floquet_ladder(parts, 3).l_eff).rho;
    const double d23 = trace_norm(rho3 - rho2);
    out.passed = d23 < 1e-5;
    out.detail =
        fmt("depth 2 to 3 steady-state change %.3g (tol 1e-5)", d23);
    return out;
}

CheckResult check_truncation_insensitivity(const ModelParams& p) {
    CheckResult out;
    out.name = "dressed-basis truncation insensitivity";
    ModelParams base = p;
    base.n_dressed = 0;
    ModelParams wide = p;
    wide.n_dressed = 20;
    const int n_fock = resolve_n_fock(base);
    const double omega_probe = 0.35;
    const double narrow_val =
        solve_single_point(base, omega_probe, n_fock).intensity;
    const double wide_val =
        solve_single_point(wide, omega_probe, n_fock).intensity;
    const double rel = std::abs(narrow_val - wide_val) /
                       std::max(std::abs(wide_val), 1e-300);
    out.passed = rel < 2e-2;
    out.detail = fmt("intensity change %.3g under deeper truncation (tol 2e-2)",
                     rel);
    return out;
}

std::vector<CheckResult> run_verification(const ModelParams& base) {
    std::vector<CheckResult> out;

    // A stiffened copy relaxes ~20x faster, so the propagation
    // cross-check outlives its transient in a few hundred periods.
    ModelParams stiff = base;
    stiff.kappa = stiff.gamma = stiff.Gamma = 2e-2;
    out.push_back(check_steady_vs_propagation(stiff, 300, 1e-4));
    out.push_back(check_gibbs_balance(base, 0.15, 0.2));
    out.push_back(check_parity_structure(base));
    out.push_back(check_depth_convergence(base));
    out.push_back(check_truncation_insensitivity(base));
    return out;
}

}  // namespace ramanqed
