#include "ramanqed/raman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramanqed {

namespace {

constexpr double kResonanceThreshold = 1e-3;

void require_state_window(const EigenSystem& eig, int n_states) {
    if (n_states < 2 || n_states > eig.dim) {
        throw std::invalid_argument(
            "state window must contain between 2 and dim levels");
    }
}

}  // namespace

const char* to_string(LineKind kind) {
    switch (kind) {
        case LineKind::stokes: return "stokes";
        case LineKind::anti_stokes: return "anti_stokes";
        case LineKind::rayleigh: return "rayleigh";
    }
    return "unknown";
}

const char* to_string(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::transition: return "transition";
        case FeatureKind::rayleigh: return "rayleigh";
        case FeatureKind::raman: return "raman";
        case FeatureKind::hyper_raman: return "hyper_raman";
        case FeatureKind::unclassified: return "unclassified";
    }
    return "unknown";
}

Operator dipole_elements(const EigenSystem& eig) {
    if (eig.dim % 2 != 0) {
        throw std::invalid_argument("eigensystem dimension is not cavity x TLS");
    }
    const int n_fock = eig.dim / 2;
    const Operator a = annihilation(n_fock);
    const Operator quad = embed({Operator(a + a.adjoint()), identity(2)});
    return eig.states.adjoint() * quad * eig.states;
}

RamanAmplitude raman_amplitude(const EigenSystem& eig, const Operator& x,
                               int i, int f, double omega_L, int n_sum,
                               double resonance_width) {
    if (i < 0 || f < 0 || i >= eig.dim || f >= eig.dim) {
        throw std::invalid_argument("state index out of range");
    }
    if (n_sum < 1) throw std::invalid_argument("n_sum must be positive");
    const int jmax = std::min(n_sum, eig.dim);

    const double omega_fi = eig.energies[f] - eig.energies[i];
    const double omega_R = omega_L - omega_fi;

    RamanAmplitude out;
    for (int j = 0; j < jmax; ++j) {
        const double omega_ji = eig.energies[j] - eig.energies[i];
        Complex den1(omega_ji - omega_L, 0.0);
        Complex den2(omega_ji + omega_R, 0.0);
        if (std::abs(den1.real()) < kResonanceThreshold) {
            den1.imag(resonance_width);
            out.flagged = true;
        }
        if (std::abs(den2.real()) < kResonanceThreshold) {
            den2.imag(resonance_width);
            out.flagged = true;
        }
        out.value += x(f, j) * x(j, i) * (1.0 / den1 + 1.0 / den2);
    }
    return out;
}

std::vector<double> gibbs_populations(const EigenSystem& eig, double T) {
    std::vector<double> p(static_cast<std::size_t>(eig.dim), 0.0);
    if (T <= 0.0) {
        p[0] = 1.0;
        return p;
    }
    double z = 0.0;
    for (int k = 0; k < eig.dim; ++k) {
        p[static_cast<std::size_t>(k)] =
            std::exp(-eig.energies_shifted[k] / T);
        z += p[static_cast<std::size_t>(k)];
    }
    for (double& v : p) v /= z;
    return p;
}

std::vector<RamanLine> raman_line_table(const EigenSystem& eig,
                                        const Operator& x, double omega_L,
                                        double T, int n_states, int n_sum,
                                        double resonance_width) {
    require_state_window(eig, n_states);
    const std::vector<double> pops = gibbs_populations(eig, T);

    std::vector<RamanLine> lines;
    for (int i = 0; i < n_states; ++i) {
        for (int f = 0; f < n_states; ++f) {
            if (i == f) continue;
            RamanLine line;
            line.i = i;
            line.f = f;
            line.omega_fi = eig.energies[f] - eig.energies[i];
            line.omega_R = omega_L - line.omega_fi;
            if (!(line.omega_R > 0.0)) continue;
            // Emitted and absorbed energies must balance exactly; this is
            // an identity of the construction, so treat failure as a bug.
            if (std::abs(line.omega_R + eig.energies[f] -
                         (omega_L + eig.energies[i])) >
                1e-12 * std::max(1.0, std::abs(omega_L))) {
                throw std::logic_error("emission frequency bookkeeping broke");
            }
            line.kind =
                line.omega_fi > 0.0 ? LineKind::stokes : LineKind::anti_stokes;
            const RamanAmplitude amp = raman_amplitude(
                eig, x, i, f, omega_L, n_sum, resonance_width);
            line.amplitude = amp.value;
            line.flagged = amp.flagged;
            line.population_factor =
                pops[static_cast<std::size_t>(i)] *
                (1.0 - pops[static_cast<std::size_t>(f)]);
            line.relative_rate =
                std::norm(amp.value) * line.population_factor;
            lines.push_back(line);
        }
    }
    std::sort(lines.begin(), lines.end(),
              [](const RamanLine& a, const RamanLine& b) {
                  if (a.relative_rate != b.relative_rate) {
                      return a.relative_rate > b.relative_rate;
                  }
                  if (a.i != b.i) return a.i < b.i;
                  return a.f < b.f;
              });
    return lines;
}

Classification classify_feature(double omega_s, double omega_L,
                                const EigenSystem& eig, double tol,
                                int n_states) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    n_states = std::min(n_states, eig.dim);
    require_state_window(eig, n_states);

    // Lower order wins residual ties: a feature explainable without
    // invoking extra drive photons should not be called hyper-Raman.
    auto order_rank = [](FeatureKind k) {
        switch (k) {
            case FeatureKind::transition: return 0;
            case FeatureKind::rayleigh: return 1;
            case FeatureKind::raman: return 2;
            case FeatureKind::hyper_raman: return 3;
            default: return 4;
        }
    };

    Classification best;
    best.residual = tol;
    auto consider = [&](FeatureKind kind, int i, int f, double position) {
        const double residual = std::abs(omega_s - position);
        if (residual >= tol) return;
        const bool better =
            residual < best.residual - 1e-12 ||
            (std::abs(residual - best.residual) <= 1e-12 &&
             order_rank(kind) < order_rank(best.kind));
        if (better) {
            best.kind = kind;
            best.i = i;
            best.f = f;
            best.position = position;
            best.residual = residual;
        }
    };

    consider(FeatureKind::rayleigh, -1, -1, omega_L);
    for (int i = 0; i < n_states; ++i) {
        for (int f = 0; f < n_states; ++f) {
            if (i == f) continue;
            const double omega_fi = eig.energies[f] - eig.energies[i];
            if (f > i) {
                consider(FeatureKind::transition, i, f, omega_fi);
            }
            consider(FeatureKind::raman, i, f, omega_L - omega_fi);
            consider(FeatureKind::hyper_raman, i, f, 2.0 * omega_L - omega_fi);
        }
    }
    return best;
}

std::vector<double> theta_scan(const std::vector<double>& theta_grid, int i,
                               int f, const ModelParams& p) {
    std::vector<double> rates;
    rates.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        ModelParams q = p;
        q.theta = theta;
        q.validate();
        const int n_fock = resolve_n_fock(q);
        const Operator h = build_hamiltonian(q, false, n_fock);
        const EigenSystem eig = diagonalize(h, parity_operator(n_fock));
        const Operator x = dipole_elements(eig);
        const RamanAmplitude amp =
            raman_amplitude(eig, x, i, f, q.omega_L, 20,
                            0.5 * (q.kappa + q.gamma));
        const std::vector<double> pops = gibbs_populations(eig, q.T);
        const double pop = pops[static_cast<std::size_t>(i)] *
                           (1.0 - pops[static_cast<std::size_t>(f)]);
        rates.push_back(std::norm(amp.value) * pop);
    }
    return rates;
}

}  // namespace ramanqed
