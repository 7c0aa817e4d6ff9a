#include "ramanqed/dissipation.hpp"

#include <cmath>
#include <stdexcept>

namespace ramanqed {

namespace {

void check_coupling(const EigenSystem& eig, const Operator& coupling_op) {
    if (coupling_op.rows() != eig.dim || coupling_op.cols() != eig.dim)
        throw std::invalid_argument("dressed_jump: coupling operator dimension mismatch");
    const double scale = std::max(1.0, max_abs(coupling_op));
    if (max_abs(Operator(coupling_op - coupling_op.adjoint())) > 1e-10 * scale)
        throw std::invalid_argument("dressed_jump: coupling operator must be Hermitian");
}

}  // namespace

double bose_occupation(double omega, double T) {
    if (T <= 0)
        return 0.0;
    return 1.0 / std::expm1(omega / T);
}

JumpOperator dressed_jump(const EigenSystem& eig, const Operator& coupling_op,
                          const WeightRule& rule, DecayChannel channel,
                          double rate) {
    check_coupling(eig, coupling_op);
    if (rate < 0)
        throw std::invalid_argument("dressed_jump: rate must be >= 0");

    const Operator m = eig.states.adjoint() * coupling_op * eig.states;
    Operator out = Operator::Zero(eig.dim, eig.dim);
    for (int j = 0; j < eig.dim; ++j)
        for (int k = j + 1; k < eig.dim; ++k)
            out(j, k) = rule(eig.transition(k, j)) * m(j, k);
    return {out, rate, channel, JumpDirection::down};
}

std::vector<JumpOperator> thermal_channels(const EigenSystem& eig,
                                           const Operator& coupling_op,
                                           double T, const WeightRule& rule,
                                           DecayChannel channel, double rate,
                                           double eps_deg, int* dropped_up) {
    check_coupling(eig, coupling_op);
    if (rate < 0)
        throw std::invalid_argument("thermal_channels: rate must be >= 0");
    if (dropped_up)
        *dropped_up = 0;
    if (T <= 0)
        return {dressed_jump(eig, coupling_op, rule, channel, rate)};

    const Operator m = eig.states.adjoint() * coupling_op * eig.states;
    Operator down = Operator::Zero(eig.dim, eig.dim);
    Operator up = Operator::Zero(eig.dim, eig.dim);
    for (int j = 0; j < eig.dim; ++j) {
        for (int k = j + 1; k < eig.dim; ++k) {
            const double omega = eig.transition(k, j);
            const double w = rule(omega);
            const double nb = bose_occupation(omega, T);
            down(j, k) = std::sqrt(nb + 1.0) * w * m(j, k);
            if (omega < eps_deg) {
                if (dropped_up)
                    ++(*dropped_up);
                continue;
            }
            up(k, j) = std::sqrt(nb) * w * std::conj(m(j, k));
        }
    }
    return {{down, rate, channel, JumpDirection::down},
            {up, rate, channel, JumpDirection::up}};
}

LiouvillianParts assemble_liouvillian(const Eigen::VectorXd& energies,
                                      const std::vector<JumpOperator>& jumps,
                                      const Operator& drive_eig,
                                      double drive_amplitude, double omega_L,
                                      int m) {
    const int d = static_cast<int>(energies.size());
    if (m < 1 || m > d)
        throw std::invalid_argument("assemble_liouvillian: invalid truncation");
    if (drive_eig.rows() < m || drive_eig.cols() < m)
        throw std::invalid_argument("assemble_liouvillian: drive operator too small");

    Operator h = Operator::Zero(m, m);
    for (int k = 0; k < m; ++k)
        h(k, k) = energies(k) - energies(0);

    LiouvillianParts parts;
    parts.dim = m;
    parts.omega_L = omega_L;
    parts.l0 = commutator_super(h);
    for (const auto& j : jumps) {
        if (j.matrix.rows() < m || j.matrix.cols() < m)
            throw std::invalid_argument("assemble_liouvillian: jump operator too small");
        if (j.rate == 0.0)
            continue;
        parts.l0 += j.rate * lindblad_dissipator(j.matrix.topLeftCorner(m, m));
    }
    // cos(omega_L t) drive splits evenly over the two rotating components
    parts.lplus = (drive_amplitude / 2.0) * commutator_super(drive_eig.topLeftCorner(m, m));
    parts.lminus = parts.lplus;
    return parts;
}

std::vector<JumpOperator> standard_jumps(const ModelParams& p,
                                         const EigenSystem& eig, int n_fock,
                                         int* dropped_up) {
    const Operator field = drive_operator(p, true, n_fock);
    const Operator sx = tls_operator(pauli(Axis::x), true, n_fock);
    const Operator sxs = sensor_operator(pauli(Axis::x), n_fock);

    int dropped = 0, d1 = 0, d2 = 0;
    std::vector<JumpOperator> jumps;
    auto append = [&jumps](std::vector<JumpOperator> more) {
        for (auto& j : more)
            jumps.push_back(std::move(j));
    };
    append(thermal_channels(eig, field, p.T, WeightRule::plain(),
                            DecayChannel::cavity, p.kappa, 1e-6, &d1));
    append(thermal_channels(eig, sx, p.T, WeightRule::freq_ratio(p.omega_q),
                            DecayChannel::tls, p.gamma, 1e-6, &d2));
    // the sensor is the detector: no thermal excitation of its channel
    append(thermal_channels(eig, sxs, 0.0, WeightRule::freq_ratio(p.omega_s),
                            DecayChannel::sensor, p.Gamma));
    dropped = d1 + d2;
    if (dropped_up)
        *dropped_up = dropped;
    return jumps;
}

LiouvillianParts build_liouvillian(const ModelParams& p, const EigenSystem& eig,
                                   const std::vector<JumpOperator>& jumps,
                                   int n_fock) {
    const Operator drive = drive_operator(p, true, n_fock);
    const Operator drive_eig = eig.states.adjoint() * drive * eig.states;
    const int m = resolve_n_dressed(p, eig);
    return assemble_liouvillian(eig.energies, jumps, drive_eig, p.Omega,
                                p.omega_L, m);
}

}  // namespace ramanqed
