#pragma once

// Generalized master equation with globally dressed jump operators. Each bath
// couples through a Hermitian system operator; the jump operator collects the
// operator's matrix elements over all downward transitions of the dressed
// (eigen)basis, optionally weighted by the transition frequency. A post-trace
// rotating-wave treatment is deliberately avoided: in the ultrastrong-coupling
// regime only the full dressed form gives the correct emission channels.

#include <optional>
#include <vector>

#include "ramanqed/model.hpp"
#include "ramanqed/operators.hpp"

namespace ramanqed {

enum class DecayChannel { cavity, tls, sensor };
enum class JumpDirection { down, up };

struct WeightRule {
    // plain: weight 1. freq_ratio: weight omega_kj / omega_ref.
    enum class Kind { plain, freq_ratio } kind = Kind::plain;
    double omega_ref = 1.0;

    static WeightRule plain() { return {}; }
    static WeightRule freq_ratio(double omega_ref) {
        return {Kind::freq_ratio, omega_ref};
    }
    double operator()(double omega_kj) const {
        return kind == Kind::plain ? 1.0 : omega_kj / omega_ref;
    }
};

struct JumpOperator {
    Operator matrix;  // in the energy-ordered eigenbasis
    double rate = 0.0;
    DecayChannel channel = DecayChannel::cavity;
    JumpDirection direction = JumpDirection::down;
};

// Zero-temperature dressed jump operator: matrix elements
// w_jk <j|coupling_op|k> for all k > j (strictly upper triangular in the
// energy-ordered basis). coupling_op is given in the original basis and must
// be Hermitian.
JumpOperator dressed_jump(const EigenSystem& eig, const Operator& coupling_op,
                          const WeightRule& rule, DecayChannel channel,
                          double rate);

// Finite-temperature pair: the down operator carries sqrt(nbar+1) per
// transition, the up operator the adjoint structure with sqrt(nbar).
// Transitions narrower than eps_deg are dropped from the up channel; the
// number of dropped transitions is reported through dropped_up (warning-level
// diagnostic). At T = 0 only the down operator is returned.
std::vector<JumpOperator> thermal_channels(const EigenSystem& eig,
                                           const Operator& coupling_op,
                                           double T, const WeightRule& rule,
                                           DecayChannel channel, double rate,
                                           double eps_deg = 1e-6,
                                           int* dropped_up = nullptr);

// Bose occupation at frequency omega > 0.
double bose_occupation(double omega, double T);

struct LiouvillianParts {
    SuperOperator l0;      // static part: -i[H,.] + dissipators
    SuperOperator lplus;   // coefficient of e^{+i omega_L t}
    SuperOperator lminus;  // coefficient of e^{-i omega_L t}
    double omega_L = 0.0;
    int dim = 0;           // Hilbert-space dimension the parts act on
};

// Core assembly in an energy eigenbasis truncated to the first m states.
// energies are the raw eigenvalues; jump matrices and the drive operator must
// already be expressed in that eigenbasis.
LiouvillianParts assemble_liouvillian(const Eigen::VectorXd& energies,
                                      const std::vector<JumpOperator>& jumps,
                                      const Operator& drive_eig,
                                      double drive_amplitude, double omega_L,
                                      int m);

// Model pipeline: dressed jump operators for the cavity, TLS and sensor
// channels. Temperature acts on the cavity and TLS baths; the sensor is a
// detector and stays cold. dropped_up counts up-transitions excluded by the
// near-degeneracy guard.
std::vector<JumpOperator> standard_jumps(const ModelParams& p,
                                         const EigenSystem& eig, int n_fock,
                                         int* dropped_up = nullptr);

// Full-model Liouvillian in the dressed basis truncated per
// resolve_n_dressed.
LiouvillianParts build_liouvillian(const ModelParams& p, const EigenSystem& eig,
                                   const std::vector<JumpOperator>& jumps,
                                   int n_fock);

}  // namespace ramanqed
