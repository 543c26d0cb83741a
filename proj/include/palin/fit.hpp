#ifndef PALIN_FIT_HPP
#define PALIN_FIT_HPP

#include <utility>
#include <vector>

#include "palin/graphs.hpp"
#include "palin/symmetry.hpp"
#include "palin/table.hpp"

// Fitting palindromic concentration-graph models.  The free canonical
// parameters of such a model are the even-order subsets of size >= 2 that
// are complete in the graph: odd orders vanish under central symmetry,
// non-complete even subsets under the Markov constraints.  Estimation runs
// on the symmetrized counts; the fitted table is exactly palindromic.

namespace palin {

struct ModelDf {
    int symmetry = 0;     // #odd-order subsets = 2^(d-1)
    int independence = 0; // #even-order subsets of size >= 2 not complete in g
    int total = 0;
};

ModelDf model_df(const Graph& g);

struct ModelFit {
    CountTable fitted;
    double wilks_total = 0.0;
    double wilks_symmetry = 0.0;
    double wilks_independence = 0.0;
    int df_total = 0;
    int df_symmetry = 0;
    int df_independence = 0;
    ParamVector lambda_hat;                  // empty when a fitted cell is zero
    std::vector<std::uint32_t> free_subsets; // even-order complete, |b| >= 2
    std::vector<double> se_lambda;           // aligned with free_subsets
    std::vector<double> studentized;         // lambda_hat / se
};

/// Closed-form MLE for a chordal graph: symmetrize, then multiply the
/// clique marginals and divide by the separator marginals along the
/// running-intersection ordering.  Throws input_error on non-chordal
/// graphs (use fit_ipf there).
ModelFit fit_decomposable(const CountTable& c, const Graph& g);

struct IpfOptions {
    double tol = 1e-10; // sup-norm over generator marginals, count scale
    int max_iter = 5000;
};

/// Classical iterative proportional fitting on the symmetrized counts.
/// Generators must cover every variable.  Agrees with fit_decomposable
/// when the generators are the cliques of a chordal graph.
ModelFit fit_ipf(const CountTable& c, const std::vector<std::uint32_t>& generators,
                 IpfOptions opts = {});
ModelFit fit_ipf(const CountTable& c, const Graph& g, IpfOptions opts = {});

/// Goodness of fit of `fit` to the observed counts:
/// w = 2 sum n(a) log(n(a)/m(a)) over observed-positive cells, df_total.
std::pair<double, int> wilks_model(const CountTable& c, const ModelFit& fit);

/// lambda_hat_b / se(lambda_hat_b) over the free subsets, with standard
/// errors from the Fisher information of the constrained family evaluated
/// at the fitted table: I[b][c] = xi(b xor c) - xi(b) xi(c), cov = (n I)^-1.
std::vector<double> studentized_lambda(const CountTable& c, const ModelFit& fit);

/// Stratumwise factorization test: true iff, for every level combination
/// of C, max_ab |p(ab|c) - p(a|c) p(b|c)| <= tol.  A, B, C are disjoint
/// masks; A and B nonempty; C may be empty (marginal independence).
bool check_ci(const ProbabilityTable& t, std::uint32_t a_set, std::uint32_t b_set,
              std::uint32_t c_set, double tol = 1e-9);

/// Palindromic Ising: palindromic and no log-linear interaction of order
/// three or higher exceeds tol.
bool is_palindromic_ising(const ProbabilityTable& t, double tol = 1e-9);

} // namespace palin

#endif
