#include <doctest.h>

#include <complex>
#include <random>

#include "ramanqed/operators.hpp"

using namespace ramanqed;

namespace {

Operator random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Operator m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return m;
}

Operator random_hermitian(int n, std::mt19937& rng) {
    const Operator m = random_matrix(n, rng);
    return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("annihilation operator has sqrt(n) ladder elements") {
    const Operator a = annihilation(5);
    REQUIRE(a.rows() == 5);
    for (int n = 1; n < 5; ++n) {
        CHECK(std::abs(a(n - 1, n) - std::sqrt(double(n))) < 1e-15);
    }
    CHECK(a.cwiseAbs().sum() == doctest::Approx(
        std::sqrt(1.0) + std::sqrt(2.0) + std::sqrt(3.0) + std::sqrt(4.0)));
    CHECK_THROWS_AS(annihilation(1), std::invalid_argument);
}

TEST_CASE("pauli matrices satisfy the algebra with ground state first") {
    const Operator sx = pauli(Axis::x);
    const Operator sy = pauli(Axis::y);
    const Operator sz = pauli(Axis::z);
    CHECK(sz(0, 0) == Complex(-1.0, 0.0));
    CHECK(sz(1, 1) == Complex(1.0, 0.0));
    const Complex i_unit(0.0, 1.0);
    CHECK(max_abs(Operator(sx * sy - i_unit * sz)) < 1e-15);
    CHECK(max_abs(Operator(sy * sz - i_unit * sx)) < 1e-15);
    CHECK(max_abs(Operator(sx * sx - identity(2))) < 1e-15);
}

TEST_CASE("embed builds tensor products in declared factor order") {
    std::mt19937 rng(1234);
    const Operator a = random_matrix(3, rng);
    const Operator b = random_matrix(2, rng);
    const Operator ab = embed({a, b});
    REQUIRE(ab.rows() == 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    CHECK(std::abs(ab(2 * i + k, 2 * j + l) -
                                   a(i, j) * b(k, l)) < 1e-14);
                }
            }
        }
    }
    const Operator abc = embed({a, b, identity(2)});
    CHECK(abc.rows() == 12);
    CHECK(max_abs(Operator(abc - embed({Operator(embed({a, b})), identity(2)})))
          < 1e-14);
}

TEST_CASE("vectorization is column stacking and invertible") {
    std::mt19937 rng(99);
    const Operator m = random_matrix(4, rng);
    const StateVector v = vectorize(m);
    REQUIRE(v.size() == 16);
    CHECK(v(1) == m(1, 0));
    CHECK(v(4) == m(0, 1));
    CHECK(max_abs(Operator(devectorize(v) - m)) == 0.0);
    CHECK_THROWS_AS(devectorize(StateVector::Zero(6)), std::invalid_argument);
}

TEST_CASE("left/right multiplication superoperators act as A rho B") {
    std::mt19937 rng(7);
    const Operator a = random_matrix(3, rng);
    const Operator b = random_matrix(3, rng);
    const Operator rho = random_matrix(3, rng);
    const Operator via_super =
        devectorize(SuperOperator(right_mult(b) * left_mult(a)) *
                    vectorize(rho));
    CHECK(max_abs(Operator(via_super - a * rho * b)) < 1e-13);
}

TEST_CASE("commutator superoperator gives -i[H, rho]") {
    std::mt19937 rng(21);
    const Operator h = random_hermitian(4, rng);
    const Operator rho = random_matrix(4, rng);
    const Complex i_unit(0.0, 1.0);
    const Operator direct = -i_unit * (h * rho - rho * h);
    const Operator via = devectorize(commutator_super(h) * vectorize(rho));
    CHECK(max_abs(Operator(via - direct)) < 1e-13);
}

TEST_CASE("dissipator superoperator matches the Lindblad form") {
    std::mt19937 rng(4321);
    const Operator o = random_matrix(4, rng);
    Operator rho = random_hermitian(4, rng);
    rho = rho * rho.adjoint();
    rho /= rho.trace();
    const Operator direct = o * rho * o.adjoint() -
                            0.5 * (o.adjoint() * o * rho +
                                   rho * o.adjoint() * o);
    const Operator via = devectorize(lindblad_dissipator(o) * vectorize(rho));
    CHECK(max_abs(Operator(via - direct)) < 1e-13);

    // Lindblad generators annihilate the trace and preserve Hermiticity.
    CHECK(std::abs(via.trace()) < 1e-13);
    CHECK(max_abs(Operator(via - via.adjoint())) < 1e-13);
}

TEST_CASE("trace norm sums singular values of Hermitian differences") {
    Operator d = Operator::Zero(3, 3);
    d(0, 0) = 0.5;
    d(1, 1) = -0.25;
    CHECK(trace_norm(d) == doctest::Approx(0.75).epsilon(1e-12));

    std::mt19937 rng(11);
    const Operator h = random_hermitian(5, rng);
    CHECK(trace_norm(h) >= std::abs(h.trace().real()) - 1e-12);
}
