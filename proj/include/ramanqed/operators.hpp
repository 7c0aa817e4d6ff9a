#pragma once

// Dense operator / superoperator algebra.
//
// Conventions used across the library:
//  - two-level systems are ordered (ground, excited), so sigma_z = diag(-1,+1)
//    and sigma^- = |g><e| sits in the strict upper triangle;
//  - density matrices are vectorized by column stacking, vec(A rho B) =
//    (B^T (x) A) vec(rho);
//  - tensor factors are ordered cavity (x) TLS (x) sensor.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ramanqed {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using SuperOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

enum class Axis { x, y, z };

// Bosonic annihilation operator truncated to n_fock levels (n_fock >= 2).
Operator annihilation(int n_fock);

// Pauli matrix in the (ground, excited) ordering; satisfies
// pauli(x) pauli(y) - pauli(y) pauli(x) = 2i pauli(z).
Operator pauli(Axis axis);

Operator identity(int dim);

// Kronecker product of the given factors, left to right.
Operator embed(const std::vector<Operator>& factors);

// Column-stacking vectorization and its inverse.
StateVector vectorize(const Operator& rho);
Operator devectorize(const StateVector& v);

// vec(A rho) = left_mult(A) vec(rho);  vec(rho B) = right_mult(B) vec(rho).
SuperOperator left_mult(const Operator& a);
SuperOperator right_mult(const Operator& b);

// Superoperator for -i[H, .].
SuperOperator commutator_super(const Operator& h);

// Lindblad dissipator D[O] rho = O rho O^dag - 1/2 {O^dag O, rho}.
SuperOperator lindblad_dissipator(const Operator& o);

// Trace norm ||A||_1 of a Hermitian matrix (sum of |eigenvalues|).
double trace_norm(const Operator& a);

// Largest absolute entry; used for cheap matrix-size checks.
double max_abs(const Operator& a);

}  // namespace ramanqed
