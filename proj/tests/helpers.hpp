#ifndef PALIN_TESTS_HELPERS_HPP
#define PALIN_TESTS_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "palin/fit.hpp"
#include "palin/kernels.hpp"
#include "palin/linalg.hpp"
#include "palin/params.hpp"
#include "palin/rng.hpp"
#include "palin/table.hpp"

namespace testutil {

inline palin::ProbabilityTable random_table(palin::SplitMix64& rng, int d,
                                            double floor_mass = 0.05) {
    std::vector<double> v(palin::cell_count(d));
    for (double& x : v) x = rng.next_double() + floor_mass;
    return palin::ProbabilityTable::normalized(d, std::move(v));
}

inline palin::ProbabilityTable random_palindromic(palin::SplitMix64& rng, int d) {
    std::vector<double> v(palin::cell_count(d));
    for (double& x : v) x = rng.next_double() + 0.05;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double avg = (v[k] + v[n - 1 - k]) / 2.0;
        v[k] = avg;
        v[n - 1 - k] = avg;
    }
    return palin::ProbabilityTable::normalized(d, std::move(v));
}

inline palin::CountTable random_counts(palin::SplitMix64& rng, int d, double scale = 50.0) {
    std::vector<double> v(palin::cell_count(d));
    for (double& x : v) x = std::floor(rng.next_double() * scale) + 1.0;
    return palin::CountTable::of(d, std::move(v));
}

/// Random palindromic Ising table: pairwise log-linear interactions only.
inline palin::ProbabilityTable random_ising(palin::SplitMix64& rng, int d, double lo,
                                            double hi) {
    std::vector<double> lam(palin::cell_count(d), 0.0);
    for (std::uint32_t b = 1; b < lam.size(); ++b)
        if (palin::subset_order(b) == 2) lam[b] = lo + (hi - lo) * rng.next_double();
    return palin::pi_from_lambda(
        palin::ParamVector{d, palin::ParamKind::log_linear, std::move(lam)});
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Independent oracle for the symmetrize/fit compatibility claim: the MLE
/// of the exponential family spanned by the given subsets, matching their
/// observed moments, found by Newton with the exact Fisher Jacobian.
inline std::vector<double> constrained_mle_counts(const palin::CountTable& c,
                                                  const std::vector<std::uint32_t>& free) {
    const std::size_t n = palin::cell_count(c.d);
    std::vector<double> xi_obs = c.counts;
    palin::kernel::walsh_hadamard(xi_obs);
    for (double& x : xi_obs) x /= c.total;

    const int m = static_cast<int>(free.size());
    std::vector<double> lam(m, 0.0);
    for (int it = 0; it < 200; ++it) {
        std::vector<double> full(n, 0.0);
        for (int i = 0; i < m; ++i) full[free[i]] = lam[i];
        palin::kernel::walsh_hadamard(full);
        double mx = full[0];
        for (double x : full) mx = std::max(mx, x);
        double tot = 0.0;
        for (double& x : full) { x = std::exp(x - mx); tot += x; }
        for (double& x : full) x /= tot;
        std::vector<double> xi = full;
        palin::kernel::walsh_hadamard(xi);

        std::vector<double> resid(m);
        double rmax = 0.0;
        for (int i = 0; i < m; ++i) {
            resid[i] = xi[free[i]] - xi_obs[free[i]];
            rmax = std::max(rmax, std::abs(resid[i]));
        }
        if (rmax < 1e-13) {
            for (double& x : full) x *= c.total;
            return full;
        }
        std::vector<double> jac(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                jac[static_cast<std::size_t>(i) * m + j] =
                    xi[free[i] ^ free[j]] - xi[free[i]] * xi[free[j]];
        const std::vector<double> step =
            palin::linalg::lu_solve(palin::linalg::lu_factor(m, jac), resid);
        for (int i = 0; i < m; ++i) lam[i] -= step[i];
    }
    throw std::runtime_error("constrained_mle_counts: no convergence");
}

} // namespace testutil

#endif
