#include "palin/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "palin/errors.hpp"
#include "palin/kernels.hpp"
#include "palin/linalg.hpp"
#include "palin/params.hpp"

namespace palin {

namespace {

std::vector<double> marginal_values(const std::vector<double>& v, std::uint32_t keep) {
    const int dm = subset_order(keep);
    std::vector<double> out(std::size_t{1} << dm, 0.0);
    for (std::uint32_t k = 0; k < v.size(); ++k)
        out[compress_bits(k, keep)] += v[k];
    return out;
}

double wilks_against(const std::vector<double>& observed, const std::vector<double>& expected) {
    double w = 0.0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        if (observed[k] <= 0.0) continue;
        if (expected[k] <= 0.0)
            throw numeric_error("degenerate fit: zero fitted count with positive observation");
        w += observed[k] * std::log(observed[k] / expected[k]);
    }
    return 2.0 * w;
}

// Standard errors of the free lambda coordinates from the Fisher
// information of the constrained family at the fitted table.  The product
// of two effect contrasts is the contrast of their symmetric difference,
// so I[b][c] = xi(b xor c) - xi(b) xi(c), and cov(lambda_hat) = (n I)^-1.
std::vector<double> restricted_se(double total, const std::vector<double>& fitted_counts,
                                  const std::vector<std::uint32_t>& free_subsets) {
    const std::size_t nf = free_subsets.size();
    if (nf == 0) return {};
    std::vector<double> xi = fitted_counts;
    kernel::walsh_hadamard(xi);
    kernel::scale_inplace(xi, 1.0 / total);
    xi[0] = 1.0;
    std::vector<double> info(nf * nf);
    for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t j = 0; j < nf; ++j) {
            const std::uint32_t b = free_subsets[i], c = free_subsets[j];
            info[i * nf + j] = total * (xi[b ^ c] - xi[b] * xi[c]);
        }
    std::vector<double> cov;
    try {
        cov = linalg::inverse(static_cast<int>(nf), info);
    } catch (const numeric_error&) {
        throw numeric_error("studentized_lambda: singular Fisher information");
    }
    std::vector<double> se(nf);
    for (std::size_t i = 0; i < nf; ++i) se[i] = std::sqrt(cov[i * nf + i]);
    return se;
}

std::vector<std::uint32_t> free_even_complete(const Graph& g) {
    std::vector<std::uint32_t> out;
    const std::uint32_t n = static_cast<std::uint32_t>(cell_count(g.d));
    for (std::uint32_t b = 1; b < n; ++b)
        if (subset_order(b) >= 2 && subset_order(b) % 2 == 0 && g.is_complete_subset(b))
            out.push_back(b);
    return out;
}

// Fills the statistics shared by both fitting routes.
ModelFit finalize_fit(const CountTable& c, const PalindromicFit& sym,
                      std::vector<double> fitted_counts, const Graph& g) {
    ModelFit fit;
    fit.wilks_symmetry = sym.wilks;
    fit.wilks_independence = wilks_against(sym.fitted.counts, fitted_counts);
    fit.wilks_total = wilks_against(c.counts, fitted_counts);
    const ModelDf df = model_df(g);
    fit.df_symmetry = df.symmetry;
    fit.df_independence = df.independence;
    fit.df_total = df.total;
    fit.free_subsets = free_even_complete(g);
    fit.fitted = CountTable{c.d, std::move(fitted_counts), c.total};

    const bool positive =
        std::all_of(fit.fitted.counts.begin(), fit.fitted.counts.end(),
                    [](double x) { return x > 0.0; });
    if (positive) {
        fit.lambda_hat = lambda_from_pi(fit.fitted.to_probabilities());
        fit.se_lambda = restricted_se(c.total, fit.fitted.counts, fit.free_subsets);
        fit.studentized.resize(fit.free_subsets.size());
        for (std::size_t i = 0; i < fit.free_subsets.size(); ++i)
            fit.studentized[i] =
                fit.lambda_hat.values[fit.free_subsets[i]] / fit.se_lambda[i];
    }
    return fit;
}

void mirror_pairs(std::vector<double>& v) {
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double avg = (v[k] + v[n - 1 - k]) / 2.0;
        v[k] = avg;
        v[n - 1 - k] = avg;
    }
}

Graph induced_graph(int d, const std::vector<std::uint32_t>& generators) {
    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t g : generators) {
        const std::vector<int> vars = vars_from_mask(g);
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                edges.emplace_back(vars[i], vars[j]);
    }
    return Graph::of(d, edges);
}

} // namespace

ModelDf model_df(const Graph& g) {
    ModelDf df;
    df.symmetry = 1 << (g.d - 1);
    const std::uint32_t n = static_cast<std::uint32_t>(cell_count(g.d));
    for (std::uint32_t b = 1; b < n; ++b)
        if (subset_order(b) >= 2 && subset_order(b) % 2 == 0 && !g.is_complete_subset(b))
            ++df.independence;
    df.total = df.symmetry + df.independence;
    return df;
}

ModelFit fit_decomposable(const CountTable& c, const Graph& g) {
    if (g.d != c.d) throw input_error("fit_decomposable: graph and table dimensions differ");
    const std::optional<CliqueDecomposition> decomp = decompose(g);
    if (!decomp)
        throw input_error("fit_decomposable: graph is not chordal, use fit_ipf");

    const PalindromicFit sym = symmetrize(c);
    const std::vector<double>& p = sym.p_hat.pi;

    std::vector<std::vector<double>> clique_marg, sep_marg;
    for (std::uint32_t cl : decomp->cliques) clique_marg.push_back(marginal_values(p, cl));
    for (std::uint32_t s : decomp->separators) sep_marg.push_back(marginal_values(p, s));

    const std::size_t n = cell_count(c.d);
    std::vector<double> fitted(n);
    for (std::uint32_t k = 0; k < n / 2; ++k) {
        double val = 1.0;
        for (std::size_t t = 0; t < decomp->cliques.size(); ++t)
            val *= clique_marg[t][compress_bits(k, decomp->cliques[t])];
        for (std::size_t t = 0; t < decomp->separators.size(); ++t) {
            const double den = sep_marg[t][compress_bits(k, decomp->separators[t])];
            if (den <= 0.0) { val = 0.0; break; } // empty slice: clique factor is 0 too
            val /= den;
        }
        fitted[k] = val * c.total;
        fitted[n - 1 - k] = fitted[k]; // marginals of a symmetric table are symmetric
    }
    return finalize_fit(c, sym, std::move(fitted), g);
}

ModelFit fit_ipf(const CountTable& c, const std::vector<std::uint32_t>& generators,
                 IpfOptions opts) {
    if (generators.empty()) throw input_error("fit_ipf: no generators");
    std::uint32_t covered = 0;
    const std::uint32_t full = static_cast<std::uint32_t>(cell_count(c.d) - 1);
    for (std::uint32_t g : generators) {
        if (g == 0 || g > full) throw input_error("fit_ipf: generator out of range");
        covered |= g;
    }
    if (covered != full)
        throw input_error("fit_ipf: generators must cover every variable");

    const PalindromicFit sym = symmetrize(c);
    std::vector<std::vector<double>> target;
    for (std::uint32_t g : generators) target.push_back(marginal_values(sym.fitted.counts, g));

    const std::size_t n = cell_count(c.d);
    std::vector<double> m(n, c.total / static_cast<double>(n));
    double dev = 0.0;
    bool converged = false;
    for (int iter = 0; iter < opts.max_iter && !converged; ++iter) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            const std::vector<double> cur = marginal_values(m, generators[gi]);
            for (std::uint32_t k = 0; k < n; ++k) {
                const std::uint32_t idx = compress_bits(k, generators[gi]);
                if (cur[idx] > 0.0)
                    m[k] *= target[gi][idx] / cur[idx];
            }
        }
        dev = 0.0;
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            const std::vector<double> cur = marginal_values(m, generators[gi]);
            for (std::size_t i = 0; i < cur.size(); ++i)
                dev = std::max(dev, std::abs(cur[i] - target[gi][i]));
        }
        converged = dev <= opts.tol;
    }
    if (!converged)
        throw numeric_error("fit_ipf: no convergence after " + std::to_string(opts.max_iter) +
                            " iterations (max marginal deviation " + std::to_string(dev) + ")");
    mirror_pairs(m); // iterates are palindromic; make it exact against rounding
    return finalize_fit(c, sym, std::move(m), induced_graph(c.d, generators));
}

ModelFit fit_ipf(const CountTable& c, const Graph& g, IpfOptions opts) {
    if (g.d != c.d) throw input_error("fit_ipf: graph and table dimensions differ");
    return fit_ipf(c, cliques(g), opts);
}

std::pair<double, int> wilks_model(const CountTable& c, const ModelFit& fit) {
    if (c.counts.size() != fit.fitted.counts.size())
        throw input_error("wilks_model: fit does not match the table");
    return {wilks_against(c.counts, fit.fitted.counts), fit.df_total};
}

std::vector<double> studentized_lambda(const CountTable& c, const ModelFit& fit) {
    for (double x : fit.fitted.counts)
        if (!(x > 0.0))
            throw numeric_error("studentized_lambda: fitted counts must be positive");
    const std::vector<double> se = restricted_se(c.total, fit.fitted.counts, fit.free_subsets);
    const ParamVector lam = fit.lambda_hat.values.empty()
                                ? lambda_from_pi(fit.fitted.to_probabilities())
                                : fit.lambda_hat;
    std::vector<double> out(se.size());
    for (std::size_t i = 0; i < se.size(); ++i)
        out[i] = lam.values[fit.free_subsets[i]] / se[i];
    return out;
}

bool check_ci(const ProbabilityTable& t, std::uint32_t a_set, std::uint32_t b_set,
              std::uint32_t c_set, double tol) {
    if (a_set == 0 || b_set == 0)
        throw input_error("check_ci: A and B must be nonempty");
    if ((a_set & b_set) || (a_set & c_set) || (b_set & c_set))
        throw input_error("check_ci: A, B, C must be disjoint");
    const std::uint32_t all = a_set | b_set | c_set;
    if (all >= cell_count(t.d)) throw input_error("check_ci: subset out of range");

    const std::vector<double> q = marginal_values(t.pi, all);
    const std::uint32_t a_in = compress_bits(a_set, all);
    const std::uint32_t b_in = compress_bits(b_set, all);
    const std::uint32_t c_in = compress_bits(c_set, all);
    const std::size_t na = cell_count(subset_order(a_set));
    const std::size_t nb = cell_count(subset_order(b_set));
    const std::size_t nc = c_set ? cell_count(subset_order(c_set)) : 1;

    for (std::uint32_t ic = 0; ic < nc; ++ic) {
        std::vector<double> joint(na * nb, 0.0), pa(na, 0.0), pb(nb, 0.0);
        double total = 0.0;
        for (std::uint32_t k = 0; k < q.size(); ++k) {
            if (compress_bits(k, c_in) != ic) continue;
            const std::uint32_t ia = compress_bits(k, a_in);
            const std::uint32_t ib = compress_bits(k, b_in);
            joint[ia * nb + ib] += q[k];
            pa[ia] += q[k];
            pb[ib] += q[k];
            total += q[k];
        }
        if (total <= 0.0) continue; // empty stratum cannot violate factorization
        for (std::uint32_t ia = 0; ia < na; ++ia)
            for (std::uint32_t ib = 0; ib < nb; ++ib) {
                const double dev =
                    joint[ia * nb + ib] / total - (pa[ia] / total) * (pb[ib] / total);
                if (std::abs(dev) > tol) return false;
            }
    }
    return true;
}

bool is_palindromic_ising(const ProbabilityTable& t, double tol) {
    if (!is_palindromic(t, tol)) return false;
    const ParamVector lam = lambda_from_pi(t);
    for (std::uint32_t b = 0; b < lam.values.size(); ++b)
        if (subset_order(b) >= 3 && std::abs(lam.values[b]) > tol) return false;
    return true;
}

} // namespace palin
