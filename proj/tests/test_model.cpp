#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ramanqed/model.hpp"

using namespace ramanqed;

namespace {

ModelParams reference_point() {
    ModelParams p;
    p.theta = M_PI / 6.0;
    return p;
}

}  // namespace

TEST_CASE("decoupled limit reproduces the bare ladder exactly") {
    ModelParams p;
    p.eta = 0.0;
    p.eta_s = 0.0;
    p.theta = 0.0;
    p.n_fock = 8;
    const Operator h = build_hamiltonian(p, false, p.n_fock);
    const EigenSystem eig = diagonalize(h);

    std::vector<double> expected;
    for (int n = 0; n < p.n_fock; ++n) {
        expected.push_back(n - 0.5 * p.omega_q);
        expected.push_back(n + 0.5 * p.omega_q);
    }
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < eig.dim; ++k) {
        CHECK(std::abs(eig.energies[k] - expected[static_cast<std::size_t>(k)])
              < 1e-12);
    }
}

TEST_CASE("hamiltonian is hermitian with and without the sensor") {
    const ModelParams p = reference_point();
    const Operator h2 = build_hamiltonian(p, false, 8);
    const Operator h3 = build_hamiltonian(p, true, 8);
    CHECK(h2.rows() == 16);
    CHECK(h3.rows() == 32);
    CHECK(max_abs(Operator(h2 - h2.adjoint())) < 1e-12);
    CHECK(max_abs(Operator(h3 - h3.adjoint())) < 1e-12);
}

TEST_CASE("dipole axis interpolates between sigma_x and sigma_z") {
    CHECK(max_abs(Operator(sigma_p(0.0) - pauli(Axis::x))) < 1e-15);
    CHECK(max_abs(Operator(sigma_p(M_PI / 2.0) - pauli(Axis::z))) < 1e-15);
}

TEST_CASE("parity grading commutes with the untilted hamiltonian") {
    ModelParams p = reference_point();
    p.theta = 0.0;
    const Operator h = build_hamiltonian(p, false, 8);
    const Operator grading = parity_operator(8);
    CHECK(max_abs(Operator(h * grading - grading * h)) < 1e-12);
    CHECK(grading(0, 0) == Complex(1.0, 0.0));    // |0, g>
    CHECK(grading(1, 1) == Complex(-1.0, 0.0));   // |0, e>
    CHECK(grading(2, 2) == Complex(-1.0, 0.0));   // |1, g>
    CHECK(grading(3, 3) == Complex(1.0, 0.0));    // |1, e>

    // The tilt breaks the symmetry.
    const Operator ht = build_hamiltonian(reference_point(), false, 8);
    CHECK(max_abs(Operator(ht * grading - grading * ht)) > 1e-3);
}

TEST_CASE("eigensystem conventions: order, orthonormality, phase") {
    const ModelParams p = reference_point();
    const Operator h = build_hamiltonian(p, false, 10);
    const EigenSystem eig = diagonalize(h);

    for (int k = 1; k < eig.dim; ++k) {
        CHECK(eig.energies[k] >= eig.energies[k - 1]);
    }
    CHECK(max_abs(Operator(eig.states.adjoint() * eig.states -
                           identity(eig.dim))) < 1e-12);
    CHECK(eig.energies_shifted[0] == 0.0);

    for (int k = 0; k < eig.dim; ++k) {
        Eigen::Index imax = 0;
        eig.states.col(k).cwiseAbs().maxCoeff(&imax);
        const Complex top = eig.states(imax, k);
        CHECK(top.real() > 0.0);
        CHECK(std::abs(top.imag()) < 1e-12 * std::abs(top));
    }
}

TEST_CASE("parity labels alternate for the untilted coupled system") {
    ModelParams p = reference_point();
    p.theta = 0.0;
    p.n_fock = 10;
    const Operator h = build_hamiltonian(p, false, p.n_fock);
    const EigenSystem eig = diagonalize(h, parity_operator(p.n_fock));

    const std::vector<Parity> expected = {
        Parity::even, Parity::odd, Parity::odd,  Parity::even,
        Parity::even, Parity::odd, Parity::even, Parity::odd};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(eig.parity[k] == expected[k]);
    }

    // With the tilt on, low-lying states lose their parity label.
    const EigenSystem mixed =
        diagonalize(build_hamiltonian(reference_point(), false, 10),
                    parity_operator(10));
    CHECK(mixed.parity[0] == Parity::mixed);
}

TEST_CASE("fock truncation resolves adaptively at the reference point") {
    const ModelParams p = reference_point();
    const int n_fock = resolve_n_fock(p);
    CHECK(n_fock == 10);

    ModelParams fixed = p;
    fixed.n_fock = 12;
    CHECK(resolve_n_fock(fixed) == 12);
}

TEST_CASE("reference transition frequencies are reproducible") {
    const ModelParams p = reference_point();
    const int n_fock = resolve_n_fock(p);
    const Operator h = build_hamiltonian(p, false, n_fock);
    const EigenSystem eig = diagonalize(h);
    CHECK(std::abs(eig.transition(1, 0) - 0.7510057695768423) < 1e-10);
    CHECK(std::abs(eig.transition(2, 0) - 1.2333412929601395) < 1e-10);
    CHECK(std::abs(eig.transition(3, 0) - 1.6734828503102164) < 1e-10);
}

TEST_CASE("first doublet splitting matches the weak-coupling oracle") {
    ModelParams p;
    p.eta = 1e-3;
    p.theta = 0.0;
    p.n_fock = 8;
    const Operator h = build_hamiltonian(p, false, p.n_fock);
    const EigenSystem eig = diagonalize(h);
    const double splitting = eig.energies[2] - eig.energies[1];
    const double expected = 2.0 * p.eta * p.omega_c;
    CHECK(std::abs(splitting - expected) / expected < 5e-3);
}

TEST_CASE("dressed-basis window rule keeps a stable state count") {
    const ModelParams p = reference_point();
    const int n_fock = resolve_n_fock(p);
    const Operator h = build_hamiltonian(p, true, n_fock);
    const EigenSystem eig = diagonalize(h);
    const int m = resolve_n_dressed(p, eig);
    CHECK(m == 14);

    ModelParams fixed = p;
    fixed.n_dressed = 20;
    CHECK(resolve_n_dressed(fixed, eig) == 20);
}

TEST_CASE("parameter validation names the offending field") {
    ModelParams p;
    p.omega_c = 2.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("omega_c"),
                         std::invalid_argument);

    ModelParams q;
    q.kappa = -1e-3;
    CHECK_THROWS_WITH_AS(q.validate(), doctest::Contains("kappa"),
                         std::invalid_argument);

    ModelParams r;
    r.eta_s = 0.1;
    const auto warnings = r.validate();
    REQUIRE(!warnings.empty());
    CHECK(warnings[0].find("sensor back-action") != std::string::npos);
}
