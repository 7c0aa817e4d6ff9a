#include "ramanqed/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramanqed {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> ModelParams::validate() const {
    require(omega_c == 1.0, "ModelParams.omega_c: all frequencies are in cavity units; omega_c must be 1");
    require(omega_q > 0, "ModelParams.omega_q: must be > 0");
    require(omega_s > 0, "ModelParams.omega_s: must be > 0");
    require(std::isfinite(theta), "ModelParams.theta: must be finite");
    require(eta >= 0, "ModelParams.eta: must be >= 0");
    require(eta_s >= 0, "ModelParams.eta_s: must be >= 0");
    require(Omega >= 0, "ModelParams.Omega: must be >= 0");
    require(omega_L > 0, "ModelParams.omega_L: must be > 0");
    require(kappa >= 0, "ModelParams.kappa: must be >= 0");
    require(gamma >= 0, "ModelParams.gamma: must be >= 0");
    require(Gamma >= 0, "ModelParams.Gamma: must be >= 0");
    require(T >= 0, "ModelParams.T: must be >= 0");
    require(n_fock == 0 || n_fock >= 4, "ModelParams.n_fock: must be 0 (adaptive) or >= 4");
    require(n_floquet >= 1, "ModelParams.n_floquet: must be >= 1");
    require(n_dressed == 0 || n_dressed >= 2, "ModelParams.n_dressed: must be 0 (auto) or >= 2");

    std::vector<std::string> warnings;
    if (eta_s > 1e-3)
        warnings.push_back("eta_s > 1e-3: sensor back-action on the system is no longer negligible");
    return warnings;
}

Operator sigma_p(double theta) {
    return std::cos(theta) * pauli(Axis::x) + std::sin(theta) * pauli(Axis::z);
}

Operator build_hamiltonian(const ModelParams& p, bool with_sensor, int n_fock) {
    const Operator a = annihilation(n_fock);
    const Operator in = identity(n_fock);
    const Operator i2 = identity(2);
    const Complex im(0, 1);

    Operator A, SZ, SP, SZs, SXs;
    if (with_sensor) {
        A = embed({a, i2, i2});
        SZ = embed({in, pauli(Axis::z), i2});
        SP = embed({in, sigma_p(p.theta), i2});
        SZs = embed({in, i2, pauli(Axis::z)});
        SXs = embed({in, i2, pauli(Axis::x)});
    } else {
        A = embed({a, i2});
        SZ = embed({in, pauli(Axis::z)});
        SP = embed({in, sigma_p(p.theta)});
    }

    Operator h = p.omega_c * (A.adjoint() * A) + 0.5 * p.omega_q * SZ;
    h += im * p.eta * p.omega_c * ((A.adjoint() - A) * SP);
    if (with_sensor) {
        h += 0.5 * p.omega_s * SZs;
        h += p.omega_c * p.eta_s * ((im * (A.adjoint() - A) + 2.0 * p.eta * SP) * SXs);
    }

    const double scale = std::max(1.0, max_abs(h));
    if (max_abs(Operator(h - h.adjoint())) > 1e-12 * scale)
        throw std::runtime_error("build_hamiltonian: result not Hermitian");
    return h;
}

Operator drive_operator(const ModelParams& p, bool with_sensor, int n_fock) {
    const Operator a = annihilation(n_fock);
    const Operator i2 = identity(2);
    const Complex im(0, 1);
    Operator A, SX;
    if (with_sensor) {
        A = embed({a, i2, i2});
        SX = embed({identity(n_fock), pauli(Axis::x), i2});
    } else {
        A = embed({a, i2});
        SX = embed({identity(n_fock), pauli(Axis::x)});
    }
    return im * (A - A.adjoint()) - 2.0 * p.eta * SX;
}

Operator parity_operator(int n_fock) {
    Operator pc = Operator::Zero(n_fock, n_fock);
    for (int n = 0; n < n_fock; ++n)
        pc(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    Operator pq(2, 2);
    pq << 1, 0, 0, -1;
    return embed({pc, pq});
}

Operator tls_operator(const Operator& op2, bool with_sensor, int n_fock) {
    if (with_sensor)
        return embed({identity(n_fock), op2, identity(2)});
    return embed({identity(n_fock), op2});
}

Operator sensor_operator(const Operator& op2, int n_fock) {
    return embed({identity(n_fock), identity(2), op2});
}

namespace {

void fix_phases(Operator& states) {
    for (int c = 0; c < states.cols(); ++c) {
        int imax = 0;
        double best = -1.0;
        for (int r = 0; r < states.rows(); ++r) {
            const double m = std::abs(states(r, c));
            if (m > best) {
                best = m;
                imax = r;
            }
        }
        if (best > 0) {
            const Complex ph = states(imax, c) / best;
            states.col(c) *= std::conj(ph);
        }
    }
}

// Canonical order inside near-degenerate clusters: parity label first (even
// before odd before mixed), then lexicographic on (Re, Im) of the entries.
void canonical_order(Eigen::VectorXd& energies, Operator& states,
                     std::vector<Parity>* parity) {
    const int d = static_cast<int>(energies.size());
    const double tol = 1e-11 * std::max(1.0, energies.cwiseAbs().maxCoeff());
    auto rank = [&](int c) {
        if (!parity)
            return 1;
        switch ((*parity)[c]) {
            case Parity::even: return 0;
            case Parity::odd: return 1;
            case Parity::mixed: return 2;
        }
        return 2;
    };
    auto lex_less = [&](int a, int b) {
        for (int r = 0; r < d; ++r) {
            const Complex za = states(r, a), zb = states(r, b);
            if (std::abs(za.real() - zb.real()) > 1e-12)
                return za.real() < zb.real();
            if (std::abs(za.imag() - zb.imag()) > 1e-12)
                return za.imag() < zb.imag();
        }
        return false;
    };

    std::vector<int> order(d);
    for (int k = 0; k < d; ++k)
        order[k] = k;
    int lo = 0;
    while (lo < d) {
        int hi = lo + 1;
        while (hi < d && energies(hi) - energies(lo) < tol)
            ++hi;
        std::stable_sort(order.begin() + lo, order.begin() + hi, [&](int a, int b) {
            if (rank(a) != rank(b))
                return rank(a) < rank(b);
            return lex_less(a, b);
        });
        lo = hi;
    }

    Eigen::VectorXd e2(d);
    Operator s2(d, d);
    std::vector<Parity> p2;
    if (parity)
        p2.resize(d);
    for (int k = 0; k < d; ++k) {
        e2(k) = energies(order[k]);
        s2.col(k) = states.col(order[k]);
        if (parity)
            p2[k] = (*parity)[order[k]];
    }
    energies = e2;
    states = s2;
    if (parity)
        *parity = p2;
}

}  // namespace

EigenSystem diagonalize(const Operator& h) {
    const double scale = std::max(1.0, max_abs(h));
    if (max_abs(Operator(h - h.adjoint())) > 1e-10 * scale)
        throw std::runtime_error("diagonalize: matrix not Hermitian");

    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigensolver failed");

    EigenSystem eig;
    eig.energies = es.eigenvalues();
    eig.states = es.eigenvectors();
    eig.dim = static_cast<int>(h.rows());
    fix_phases(eig.states);
    canonical_order(eig.energies, eig.states, nullptr);
    eig.energies_shifted = eig.energies.array() - eig.energies(0);
    eig.parity.assign(eig.dim, Parity::mixed);
    return eig;
}

EigenSystem diagonalize(const Operator& h, const Operator& grading) {
    EigenSystem eig = diagonalize(h);
    assign_parity(eig, grading);
    canonical_order(eig.energies, eig.states, &eig.parity);
    eig.energies_shifted = eig.energies.array() - eig.energies(0);
    return eig;
}

void assign_parity(EigenSystem& eig, const Operator& grading, double tol) {
    if (grading.rows() != eig.dim)
        throw std::invalid_argument("assign_parity: grading dimension mismatch");
    for (int k = 0; k < eig.dim; ++k) {
        const Complex v = eig.states.col(k).dot(grading * eig.states.col(k));
        if (std::abs(v - Complex(1, 0)) < tol)
            eig.parity[k] = Parity::even;
        else if (std::abs(v + Complex(1, 0)) < tol)
            eig.parity[k] = Parity::odd;
        else
            eig.parity[k] = Parity::mixed;
    }
}

int resolve_n_fock(const ModelParams& p) {
    if (p.n_fock > 0)
        return p.n_fock;
    constexpr int n_max = 64;
    for (int n = 4; n <= n_max; n += 2) {
        const Operator h = build_hamiltonian(p, false, n);
        Eigen::SelfAdjointEigenSolver<Operator> es(h);
        const StateVector gs = es.eigenvectors().col(0);
        double pop = 0.0;
        for (int q = 0; q < 2; ++q) {
            pop += std::norm(gs(2 * (n - 1) + q));
            pop += std::norm(gs(2 * (n - 2) + q));
        }
        if (pop < 1e-10)
            return n;
    }
    throw std::runtime_error("resolve_n_fock: no convergence up to 64 Fock levels");
}

int resolve_n_dressed(const ModelParams& p, const EigenSystem& eig) {
    if (p.n_dressed > 0)
        return std::min(p.n_dressed, eig.dim);
    const double e_cut = std::max(2.0 * p.omega_L, p.omega_s) + 2.0 + 5.0 * p.T;
    int m = 0;
    while (m < eig.dim && eig.energies_shifted(m) <= e_cut)
        ++m;
    return std::max(std::min(8, eig.dim), m);
}

}  // namespace ramanqed
