#include "ramanqed/floquet.hpp"

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace ramanqed {

namespace {

constexpr double kDegeneracyTol = 1e-8;
constexpr double kPositivityTol = 1e-8;
constexpr double kTraceTol = 1e-8;

// Real 2n x 2n representation of a complex n x n matrix acting on
// stacked [Re v; Im v] vectors.
Eigen::MatrixXd real_embedding(const SuperOperator& m) {
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = m.real();
    out.topRightCorner(n, n) = -m.imag();
    out.bottomLeftCorner(n, n) = m.imag();
    out.bottomRightCorner(n, n) = m.real();
    return out;
}

struct DrivenRhs {
    const Eigen::MatrixXd* l0;
    const Eigen::MatrixXd* ldrive;
    double omega_l;

    void operator()(const Eigen::VectorXd& x, Eigen::VectorXd& dxdt,
                    double t) const {
        if (dxdt.size() != x.size()) dxdt.resize(x.size());
        dxdt.noalias() = (*l0) * x;
        dxdt.noalias() += (2.0 * std::cos(omega_l * t)) * ((*ldrive) * x);
    }
};

// Augments the state with a running time integral so the final-period
// average comes out of the same adaptive integration.
struct AveragingRhs {
    DrivenRhs base;
    Eigen::Index n;

    void operator()(const Eigen::VectorXd& x, Eigen::VectorXd& dxdt,
                    double t) const {
        if (dxdt.size() != x.size()) dxdt.resize(x.size());
        dxdt.head(n).noalias() = (*base.l0) * x.head(n);
        dxdt.head(n).noalias() +=
            (2.0 * std::cos(base.omega_l * t)) * ((*base.ldrive) * x.head(n));
        dxdt.tail(n) = x.head(n);
    }
};

std::complex<double> embedded_trace(const Eigen::VectorXd& x, Eigen::Index d) {
    const Eigen::Index n = d * d;
    std::complex<double> tr(0.0, 0.0);
    for (Eigen::Index i = 0; i < d; ++i) {
        tr += std::complex<double>(x[i * (d + 1)], x[n + i * (d + 1)]);
    }
    return tr;
}

Operator embedded_state(const Eigen::VectorXd& x, Eigen::Index d) {
    const Eigen::Index n = d * d;
    StateVector v(n);
    v.real() = x.head(n);
    v.imag() = x.segment(n, n);
    return devectorize(v);
}

}  // namespace

FloquetOperators floquet_ladder(const LiouvillianParts& parts, int n_max) {
    if (n_max < 1) throw std::invalid_argument("floquet depth must be >= 1");
    const Eigen::Index n = parts.l0.rows();
    const SuperOperator id = SuperOperator::Identity(n, n);
    const Complex i_unit(0.0, 1.0);

    std::vector<SuperOperator> s_plus(static_cast<std::size_t>(n_max));
    std::vector<SuperOperator> s_minus(static_cast<std::size_t>(n_max));
    SuperOperator above_plus = SuperOperator::Zero(n, n);
    SuperOperator above_minus = SuperOperator::Zero(n, n);
    for (int k = n_max; k >= 1; --k) {
        const Complex shift = i_unit * (static_cast<double>(k) * parts.omega_L);
        SuperOperator a_plus = parts.l0 - shift * id;
        a_plus.noalias() += parts.lminus * above_plus;
        s_plus[k - 1] = Eigen::PartialPivLU<SuperOperator>(a_plus).solve(
            SuperOperator(-parts.lplus));

        SuperOperator a_minus = parts.l0 + shift * id;
        a_minus.noalias() += parts.lplus * above_minus;
        s_minus[k - 1] = Eigen::PartialPivLU<SuperOperator>(a_minus).solve(
            SuperOperator(-parts.lminus));

        above_plus = s_plus[k - 1];
        above_minus = s_minus[k - 1];
    }

    FloquetOperators out;
    out.l_eff = parts.l0;
    out.l_eff.noalias() += parts.lminus * s_plus[0];
    out.l_eff.noalias() += parts.lplus * s_minus[0];
    out.s_plus = std::move(s_plus);
    out.s_minus = std::move(s_minus);
    out.depth = n_max;
    return out;
}

NullspaceResult nullspace_state(const SuperOperator& generator) {
    const Eigen::Index n = generator.rows();
    if (generator.cols() != n) {
        throw std::invalid_argument("generator must be square");
    }
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(
        static_cast<double>(n))));
    if (d * d != n) {
        throw std::invalid_argument("generator dimension is not a square");
    }
    const double scale = generator.norm();
    if (!(scale > 0.0)) {
        throw std::invalid_argument("generator is identically zero");
    }

    // The generator is exactly singular, so factor a shifted copy; the
    // shift is far below the slowest relaxation rate and leaves the
    // kernel direction untouched to working precision.
    const double delta = 1e-12 * scale;
    SuperOperator shifted = generator;
    shifted.diagonal().array() += Complex(delta, 0.0);
    Eigen::PartialPivLU<SuperOperator> lu(shifted);

    // vec(identity) always overlaps the steady state: Tr rho = 1.
    StateVector v = vectorize(Operator::Identity(d, d));
    v /= v.norm();
    for (int it = 0; it < 3; ++it) {
        v = lu.solve(v);
        v /= v.norm();
    }

    // Second, deflated iteration: if it also lands on a kernel vector the
    // kernel is (at least) two-dimensional.
    Operator probe = Operator::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        probe(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    }
    StateVector w = vectorize(probe);
    w -= v * (v.adjoint() * w);
    w /= w.norm();
    for (int it = 0; it < 3; ++it) {
        w = lu.solve(w);
        w -= v * (v.adjoint() * w);
        w /= w.norm();
    }
    const double second_residual = (generator * w).norm();
    if (second_residual < kDegeneracyTol * scale) {
        throw std::runtime_error(
            "steady state is not unique: generator kernel is degenerate");
    }

    Operator rho = devectorize(v);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-10) {
        throw std::runtime_error(
            "kernel vector is traceless; cannot normalise steady state");
    }
    rho /= tr;

    NullspaceResult out;
    out.residual = (generator * vectorize(rho)).norm();
    if (out.residual > 1e-8 * std::max(scale, 1.0)) {
        throw std::runtime_error("steady-state residual exceeds tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(rho,
                                               Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    if (out.min_eigenvalue < -kPositivityTol) {
        throw std::runtime_error("steady state is not positive semidefinite");
    }
    out.rho = std::move(rho);
    return out;
}

FloquetSolution steady_state(const LiouvillianParts& parts, int n_start,
                             double tol, int n_cap) {
    if (n_start < 1) throw std::invalid_argument("floquet depth must be >= 1");
    if (n_cap < n_start + 1) n_cap = n_start + 1;

    NullspaceResult prev =
        nullspace_state(floquet_ladder(parts, n_start).l_eff);
    for (int depth = n_start + 1; depth <= n_cap; ++depth) {
        NullspaceResult cur =
            nullspace_state(floquet_ladder(parts, depth).l_eff);
        const double delta = trace_norm(cur.rho - prev.rho);
        if (delta < tol) {
            FloquetSolution out;
            out.rho0 = std::move(cur.rho);
            out.n_floquet_used = depth;
            out.residual = cur.residual;
            out.convergence_delta = delta;
            out.min_eigenvalue = cur.min_eigenvalue;
            return out;
        }
        prev = std::move(cur);
    }
    throw std::runtime_error(
        "floquet hierarchy did not converge; raise the depth cap");
}

PropagationResult propagate_oracle(const LiouvillianParts& parts, double t_end,
                                   int samples_per_period, double abs_tol,
                                   double rel_tol) {
    namespace ode = boost::numeric::odeint;
    if (samples_per_period < 1) {
        throw std::invalid_argument("samples_per_period must be >= 1");
    }
    const double period = 2.0 * M_PI / parts.omega_L;
    if (t_end < 20.0 * period) {
        throw std::invalid_argument(
            "propagation window too short to outlive the transient");
    }

    const Eigen::Index n = parts.l0.rows();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(
        static_cast<double>(n))));

    const Eigen::MatrixXd l0_re = real_embedding(parts.l0);
    const Eigen::MatrixXd ldrive_re = real_embedding(parts.lplus);
    const DrivenRhs rhs{&l0_re, &ldrive_re, parts.omega_L};

    const Operator rho_init = nullspace_state(parts.l0).rho;
    const StateVector v0 = vectorize(rho_init);
    Eigen::VectorXd x(2 * n);
    x.head(n) = v0.real();
    x.tail(n) = v0.imag();

    using Stepper = ode::runge_kutta_fehlberg78<Eigen::VectorXd>;
    auto ctrl = ode::make_controlled<Stepper>(abs_tol, rel_tol);

    PropagationResult out;
    const double sample_dt = period / samples_per_period;
    const auto total_samples =
        static_cast<long long>(std::llround(t_end / sample_dt));
    const auto average_start_sample =
        total_samples - static_cast<long long>(samples_per_period);

    double t = 0.0;
    double dt = 0.1 * period;
    Eigen::VectorXd x_aug;
    auto aug_ctrl = ode::make_controlled<Stepper>(abs_tol, rel_tol);
    const AveragingRhs aug_rhs{rhs, 2 * n};
    bool averaging = false;

    auto advance = [&](auto& stepper, auto& sys, Eigen::VectorXd& state,
                       double t_target) {
        while (t < t_target - 1e-9) {
            double step = std::min(dt, t_target - t);
            const auto res = stepper.try_step(sys, state, t, step);
            ++out.steps;
            if (res == ode::fail && step < 1e-12) {
                throw std::runtime_error(
                    "time step underflow in reference propagation");
            }
            dt = step;
        }
    };

    for (long long s = 1; s <= total_samples; ++s) {
        const double t_target = sample_dt * static_cast<double>(s);
        if (!averaging && s > average_start_sample) {
            // Entering the final period: switch to the augmented state.
            x_aug.resize(2 * n + 2 * n);
            x_aug.head(2 * n) = x;
            x_aug.tail(2 * n).setZero();
            averaging = true;
        }
        if (averaging) {
            advance(aug_ctrl, aug_rhs, x_aug, t_target);
            x = x_aug.head(2 * n);
        } else {
            advance(ctrl, rhs, x, t_target);
        }
        const double err = std::abs(embedded_trace(x, d) - Complex(1.0, 0.0));
        out.max_trace_error = std::max(out.max_trace_error, err);
        if (err > kTraceTol) {
            throw std::runtime_error(
                "trace drift in reference propagation exceeds tolerance");
        }
    }

    out.rho_final = embedded_state(x, d);
    Eigen::VectorXd integral = x_aug.tail(2 * n) / period;
    out.rho_average = embedded_state(integral, d);
    return out;
}

}  // namespace ramanqed
