#pragma once

#include <string>
#include <vector>

#include "ramanqed/model.hpp"

namespace ramanqed {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Cross-validations of the solver stack against independent routes to the
// same quantity. These are the `verify` subcommand's building blocks; the
// stand-alone acceptance suite reuses the first one at tighter settings.
CheckResult check_steady_vs_propagation(const ModelParams& p,
                                        double n_periods, double tol);
CheckResult check_gibbs_balance(const ModelParams& p, double T,
                                double rel_tol);
CheckResult check_parity_structure(const ModelParams& p);
CheckResult check_depth_convergence(const ModelParams& p);
CheckResult check_truncation_insensitivity(const ModelParams& p);

std::vector<CheckResult> run_verification(const ModelParams& base);

}  // namespace ramanqed
