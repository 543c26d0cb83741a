#include "palin/symmetry.hpp"

#include <cmath>

#include "palin/errors.hpp"
#include "palin/kernels.hpp"
#include "palin/params.hpp"

namespace palin {

bool is_palindromic(const ProbabilityTable& t, double tol) {
    if (tol < 0.0) throw input_error("is_palindromic: negative tolerance");
    const std::size_t n = t.size();
    for (std::size_t k = 0; k < n / 2; ++k)
        if (std::abs(t.pi[k] - t.pi[n - 1 - k]) > tol) return false;
    return true;
}

bool is_palindromic_by_moments(const ProbabilityTable& t, double tol) {
    if (tol < 0.0) throw input_error("is_palindromic_by_moments: negative tolerance");
    const ParamVector xi = xi_from_pi(t);
    for (std::uint32_t b = 1; b < xi.values.size(); ++b)
        if (subset_order(b) % 2 == 1 && std::abs(xi.values[b]) > tol) return false;
    return true;
}

ProbabilityTable reverse_complement(const ProbabilityTable& t) {
    std::vector<double> out(t.size());
    kernel::mirror_complement(t.pi, out);
    return ProbabilityTable{t.d, std::move(out)};
}

std::pair<double, int> wilks_palindromic(const CountTable& c) {
    if (c.total <= 0.0) throw input_error("wilks_palindromic: empty count table");
    const std::size_t n = c.counts.size();
    double w = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double obs = c.counts[k];
        if (obs > 0.0) w += obs * std::log(2.0 * obs / (obs + c.counts[n - 1 - k]));
    }
    return {2.0 * w, 1 << (c.d - 1)};
}

PalindromicFit symmetrize(const CountTable& c) {
    if (c.total <= 0.0) throw input_error("symmetrize: empty count table");
    const std::size_t n = c.counts.size();
    std::vector<double> fitted(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double avg = (c.counts[k] + c.counts[n - 1 - k]) / 2.0;
        fitted[k] = avg;
        fitted[n - 1 - k] = avg;
    }

    // xi_hat: the observed even-order moments; odd orders are exactly zero.
    std::vector<double> xi = c.counts;
    kernel::walsh_hadamard(xi);
    kernel::scale_inplace(xi, 1.0 / c.total);
    xi[0] = 1.0;
    for (std::uint32_t b = 1; b < n; ++b)
        if (subset_order(b) % 2 == 1) xi[b] = 0.0;

    const auto [w, df] = wilks_palindromic(c);
    PalindromicFit fit;
    fit.p_hat = ProbabilityTable::fitted(c.d, fitted);
    fit.fitted = CountTable{c.d, std::move(fitted), c.total};
    fit.wilks = w;
    fit.df = df;
    fit.xi_hat = ParamVector{c.d, ParamKind::moment, std::move(xi)};
    return fit;
}

} // namespace palin
