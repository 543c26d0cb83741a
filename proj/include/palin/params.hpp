#ifndef PALIN_PARAMS_HPP
#define PALIN_PARAMS_HPP

#include <cstdint>

#include "palin/table.hpp"

// The three parameterizations of a joint Bernoulli distribution and the
// conversions among them:
//
//   lambda (log-linear): contrasts of log cell probabilities, the canonical
//       parameters; lambda = 2^-d H log(pi).
//   xi (moment/linear):  xi = H pi; xi_b is the expectation of the product
//       of the (+1,-1)-coded variables in b, a marginal parameter.
//   eta (multivariate logistic): eta_b is the top-order log-linear
//       parameter of the marginal distribution on b.
//
// lambda_empty is a derived normalizing constant, not a free parameter:
// pi_from_lambda ignores the supplied value and renormalizes.  eta_empty
// stores the joint lambda_empty and is excluded from all comparisons.

namespace palin {

ParamVector lambda_from_pi(const ProbabilityTable& t);
ProbabilityTable pi_from_lambda(const ParamVector& lambda);

ParamVector xi_from_pi(const ProbabilityTable& t);
ProbabilityTable pi_from_xi(const ParamVector& xi);

/// Marginal distribution over the variables in `keep` (a nonempty subset
/// mask), in the same first-index-fastest order, dimension |keep|.
ProbabilityTable marginal_table(const ProbabilityTable& t, std::uint32_t keep);

/// eta by direct marginalization: for each nonempty b, sums cells of t
/// into the marginal on b and extracts its top-order log-linear parameter.
ParamVector eta_from_pi(const ProbabilityTable& t);

/// eta by the stepwise composition of mixed-parameterization swaps: first
/// the full vector switches to moments below V (keeping lambda_V), then
/// each T_M, taken in decreasing subset order, rebuilds the marginal on M
/// from the moments below it and replaces xi_M with eta_M.  Agrees with
/// eta_from_pi(pi_from_lambda(lambda)) to solver precision; the two code
/// paths are independent (moments route vs direct summation).
ParamVector eta_via_stepwise(const ParamVector& lambda);

struct EtaSolverOptions {
    double tol = 1e-9;       // sup-norm tolerance on the eta residual
    int max_iter = 200;
    double fd_step = 1e-6;   // finite-difference step for the Jacobian
    bool central = false;    // central instead of forward differences
};

/// Inverts the multivariate logistic map.  Closed forms for d <= 2 (the
/// d=2 case is the classic two-margins-plus-odds-ratio root); otherwise a
/// damped Newton iteration in lambda-space with a finite-difference
/// Jacobian.  Non-convergence signals an eta outside the compatible set
/// and raises numeric_error carrying the best residual reached.
ProbabilityTable pi_from_eta(const ParamVector& eta, EtaSolverOptions opts = {});

} // namespace palin

#endif
