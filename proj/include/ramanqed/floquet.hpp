#pragma once

#include <cstddef>
#include <vector>

#include "ramanqed/dissipation.hpp"
#include "ramanqed/operators.hpp"

namespace ramanqed {

// Harmonic-balance ladder for a bichromatic Liouvillian
//   L(t) = L0 + e^{+i w_L t} L+ + e^{-i w_L t} L-.
// s_plus[n-1] maps the n-th harmonic onto the (n-1)-th via
// rho_{+n} = S_{+n} rho_{+(n-1)}, and likewise for s_minus.
// l_eff is the depth-truncated generator whose kernel is the
// period-averaged steady state rho_0.
struct FloquetOperators {
    SuperOperator l_eff;
    std::vector<SuperOperator> s_plus;
    std::vector<SuperOperator> s_minus;
    int depth = 0;
};

struct NullspaceResult {
    Operator rho;
    double residual = 0.0;
    double min_eigenvalue = 0.0;
};

struct FloquetSolution {
    Operator rho0;
    int n_floquet_used = 0;
    double residual = 0.0;
    double convergence_delta = 0.0;
    double min_eigenvalue = 0.0;
};

struct PropagationResult {
    Operator rho_final;
    Operator rho_average;
    std::size_t steps = 0;
    double max_trace_error = 0.0;
};

FloquetOperators floquet_ladder(const LiouvillianParts& parts, int n_max);

// Kernel vector of a singular generator via shifted inverse iteration.
// Throws if the kernel is not one-dimensional (the model then has
// disconnected sectors and "the" steady state is meaningless) or if the
// resulting state violates trace/Hermiticity/positivity tolerances.
NullspaceResult nullspace_state(const SuperOperator& generator);

// Solves for rho_0 at increasing harmonic depth until the trace-norm
// difference between consecutive depths drops below tol.
FloquetSolution steady_state(const LiouvillianParts& parts, int n_start,
                             double tol = 1e-8, int n_cap = 24);

// Brute-force time integration of the driven master equation starting
// from the undriven steady state. Used as a cross-check on the
// harmonic-balance solver, never in the production path. The returned
// average is taken over the final drive period.
PropagationResult propagate_oracle(const LiouvillianParts& parts, double t_end,
                                   int samples_per_period,
                                   double abs_tol = 1e-12,
                                   double rel_tol = 1e-10);

}  // namespace ramanqed
