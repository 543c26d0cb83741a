#include "palin/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "palin/errors.hpp"
#include "palin/kernels.hpp"
#include "palin/linalg.hpp"

namespace palin {

namespace {

void require_kind(const ParamVector& p, ParamKind k, const char* where) {
    if (p.kind != k)
        throw input_error(std::string(where) + ": expected a " + to_string(k) +
                          " parameter vector, got " + to_string(p.kind));
    if (p.values.size() != cell_count(p.d))
        throw input_error(std::string(where) + ": parameter vector has wrong length");
}

std::vector<double> log_values(const std::vector<double>& pi) {
    std::vector<double> v(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (pi[i] <= 0.0)
            throw numeric_error("log-linear parameters require strictly positive cells");
        v[i] = std::log(pi[i]);
    }
    return v;
}

// Marginal cell sums of a raw value vector; works for counts and probabilities.
std::vector<double> marginal_values(const std::vector<double>& v, std::uint32_t keep) {
    const int dm = subset_order(keep);
    std::vector<double> out(std::size_t{1} << dm, 0.0);
    for (std::uint32_t k = 0; k < v.size(); ++k)
        out[compress_bits(k, keep)] += v[k];
    return out;
}

// pi = exp(H lambda) renormalized, with the max subtracted before exp for
// overflow safety; lambda[0] is ignored.
std::vector<double> prob_values_from_lambda(int d, std::vector<double> lambda) {
    lambda[0] = 0.0;
    kernel::walsh_hadamard(lambda);
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : lambda) {
        if (!std::isfinite(x)) throw numeric_error("pi_from_lambda: non-finite exponent");
        mx = std::max(mx, x);
    }
    for (double& x : lambda) x = std::exp(x - mx);
    const double total = kernel::sum(lambda);
    if (!(total > 0.0) || !std::isfinite(total))
        throw numeric_error("pi_from_lambda: overflow on extreme parameters");
    kernel::scale_inplace(lambda, 1.0 / total);
    return lambda;
}

// eta for every nonempty subset, computed from lambda via the moments
// route: pi -> xi once, then each marginal is rebuilt from the moment
// subvector on M (the moments of a marginal coincide with those of the
// joint).  Returns false instead of throwing when an intermediate value
// degenerates, so the Newton solver can reject a trial step.
bool eta_values_from_lambda(int d, const std::vector<double>& lambda,
                            std::vector<double>& eta_out) {
    const std::size_t n = cell_count(d);
    std::vector<double> xi;
    try {
        xi = prob_values_from_lambda(d, lambda);
    } catch (const numeric_error&) {
        return false;
    }
    kernel::walsh_hadamard(xi);
    xi[0] = 1.0;
    eta_out.assign(n, 0.0);
    std::vector<double> sub;
    for (std::uint32_t m = static_cast<std::uint32_t>(n) - 1; m >= 1; --m) {
        const int dm = subset_order(m);
        const std::size_t nm = std::size_t{1} << dm;
        sub.resize(nm);
        for (std::uint32_t i = 0; i < nm; ++i) sub[i] = xi[expand_bits(i, m)];
        kernel::walsh_hadamard(sub);                       // 2^dm * marginal pi
        double top = 0.0;
        const double scale = static_cast<double>(nm);
        for (std::uint32_t i = 0; i < nm; ++i) {
            const double cell = sub[i] / scale;
            if (!(cell > 0.0)) return false;
            top += (subset_order(i) % 2 == 0 ? 1.0 : -1.0) * std::log(cell);
        }
        eta_out[m] = top / scale;                          // top-order contrast
    }
    return true;
}

} // namespace

ParamVector lambda_from_pi(const ProbabilityTable& t) {
    std::vector<double> v = log_values(t.pi);
    kernel::walsh_hadamard_inverse(v);
    return ParamVector{t.d, ParamKind::log_linear, std::move(v)};
}

ProbabilityTable pi_from_lambda(const ParamVector& lambda) {
    require_kind(lambda, ParamKind::log_linear, "pi_from_lambda");
    return ProbabilityTable::normalized(lambda.d,
                                        prob_values_from_lambda(lambda.d, lambda.values));
}

ParamVector xi_from_pi(const ProbabilityTable& t) {
    std::vector<double> v = t.pi;
    kernel::walsh_hadamard(v);
    v[0] = 1.0; // sum of probabilities, exact by convention
    return ParamVector{t.d, ParamKind::moment, std::move(v)};
}

ProbabilityTable pi_from_xi(const ParamVector& xi) {
    require_kind(xi, ParamKind::moment, "pi_from_xi");
    if (std::abs(xi.values[0] - 1.0) > 1e-9)
        throw input_error("pi_from_xi: xi at the empty set must equal 1");
    std::vector<double> v = xi.values;
    v[0] = 1.0;
    kernel::walsh_hadamard_inverse(v);
    for (double p : v)
        if (!(p > 0.0))
            throw numeric_error("pi_from_xi: moment vector lies outside the feasible body");
    return ProbabilityTable::normalized(xi.d, std::move(v));
}

ProbabilityTable marginal_table(const ProbabilityTable& t, std::uint32_t keep) {
    if (keep == 0) throw input_error("marginal_table: empty margin");
    if (keep >= cell_count(t.d)) throw input_error("marginal_table: subset out of range");
    return ProbabilityTable::fitted(subset_order(keep), marginal_values(t.pi, keep));
}

ParamVector eta_from_pi(const ProbabilityTable& t) {
    const std::size_t n = cell_count(t.d);
    std::vector<double> eta(n, 0.0);
    {
        const std::vector<double> lv = log_values(t.pi);
        eta[0] = kernel::sum(lv) / static_cast<double>(n); // joint lambda_empty
    }
    for (std::uint32_t b = 1; b < n; ++b) {
        const ProbabilityTable pm = marginal_table(t, b);
        const ParamVector lm = lambda_from_pi(pm);
        eta[b] = lm.values.back();
    }
    return ParamVector{t.d, ParamKind::mv_logistic, std::move(eta)};
}

ParamVector eta_via_stepwise(const ParamVector& lambda) {
    require_kind(lambda, ParamKind::log_linear, "eta_via_stepwise");
    std::vector<double> eta;
    if (!eta_values_from_lambda(lambda.d, lambda.values, eta))
        throw numeric_error("eta_via_stepwise: degenerate intermediate marginal");
    const std::vector<double> pi = prob_values_from_lambda(lambda.d, lambda.values);
    const std::vector<double> lv = log_values(pi);
    eta[0] = kernel::sum(lv) / static_cast<double>(pi.size());
    return ParamVector{lambda.d, ParamKind::mv_logistic, std::move(eta)};
}

namespace {

ProbabilityTable pi_from_eta_d1(const ParamVector& eta) {
    const double x = std::tanh(eta.values[1]);
    return ProbabilityTable::normalized(1, {(1.0 + x) / 2.0, (1.0 - x) / 2.0});
}

// Two uniform-free margins plus an odds ratio determine the 2x2 table via
// the standard quadratic root (the smaller root of the Plackett equation).
ProbabilityTable pi_from_eta_d2(const ParamVector& eta) {
    const double m1 = (1.0 + std::tanh(eta.values[1])) / 2.0; // P(A1 = 0)
    const double m2 = (1.0 + std::tanh(eta.values[2])) / 2.0; // P(A2 = 0)
    const double psi = std::exp(4.0 * eta.values[3]);
    if (!std::isfinite(psi)) throw numeric_error("pi_from_eta: odds ratio overflow");
    double x; // P(A1 = 0, A2 = 0)
    if (std::abs(psi - 1.0) < 1e-12) {
        x = m1 * m2;
    } else {
        const double s = 1.0 + (m1 + m2) * (psi - 1.0);
        const double disc = s * s - 4.0 * m1 * m2 * psi * (psi - 1.0);
        x = (s - std::sqrt(std::max(disc, 0.0))) / (2.0 * (psi - 1.0));
    }
    std::vector<double> cells{x, m2 - x, m1 - x, 1.0 - m1 - m2 + x};
    for (double c : cells)
        if (!(c > 0.0)) throw numeric_error("pi_from_eta: eta incompatible with a table");
    return ProbabilityTable::normalized(2, std::move(cells));
}

} // namespace

ProbabilityTable pi_from_eta(const ParamVector& eta, EtaSolverOptions opts) {
    require_kind(eta, ParamKind::mv_logistic, "pi_from_eta");
    for (double x : eta.values)
        if (!std::isfinite(x)) throw input_error("pi_from_eta: non-finite eta");
    if (eta.d == 1) return pi_from_eta_d1(eta);
    if (eta.d == 2) return pi_from_eta_d2(eta);

    const int d = eta.d;
    const std::size_t n = cell_count(d);
    const int m = static_cast<int>(n) - 1; // unknowns: lambda_b, b nonempty

    std::vector<double> lam = eta.values; // initial guess: the map is near-identity at 0
    lam[0] = 0.0;

    std::vector<double> cur_eta;
    if (!eta_values_from_lambda(d, lam, cur_eta)) {
        lam.assign(n, 0.0);
        eta_values_from_lambda(d, lam, cur_eta); // uniform start always valid
    }
    auto residual_norm = [&](const std::vector<double>& ev) {
        double mx = 0.0;
        for (std::uint32_t b = 1; b < n; ++b)
            mx = std::max(mx, std::abs(ev[b] - eta.values[b]));
        return mx;
    };
    double rnorm = residual_norm(cur_eta);

    std::vector<double> trial_eta, jac(static_cast<std::size_t>(m) * m);
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        if (rnorm <= opts.tol)
            return pi_from_lambda(ParamVector{d, ParamKind::log_linear, lam});

        // finite-difference Jacobian of the residual w.r.t. lambda
        const double h = opts.fd_step;
        std::vector<double> pert = lam;
        for (int j = 0; j < m; ++j) {
            pert[j + 1] = lam[j + 1] + h;
            if (!eta_values_from_lambda(d, pert, trial_eta))
                throw numeric_error("pi_from_eta: Jacobian evaluation failed");
            if (opts.central) {
                std::vector<double> back;
                pert[j + 1] = lam[j + 1] - h;
                if (!eta_values_from_lambda(d, pert, back))
                    throw numeric_error("pi_from_eta: Jacobian evaluation failed");
                for (int i = 0; i < m; ++i)
                    jac[static_cast<std::size_t>(i) * m + j] =
                        (trial_eta[i + 1] - back[i + 1]) / (2.0 * h);
            } else {
                for (int i = 0; i < m; ++i)
                    jac[static_cast<std::size_t>(i) * m + j] =
                        (trial_eta[i + 1] - cur_eta[i + 1]) / h;
            }
            pert[j + 1] = lam[j + 1];
        }

        std::vector<double> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = eta.values[i + 1] - cur_eta[i + 1];
        const linalg::Lu f = linalg::lu_factor(m, jac);
        if (f.singular) throw numeric_error("pi_from_eta: singular Jacobian");
        const std::vector<double> step = linalg::lu_solve(f, rhs);

        // backtracking line search on the sup-norm
        bool accepted = false;
        for (double alpha = 1.0; alpha > 1e-12; alpha *= 0.5) {
            std::vector<double> cand = lam;
            for (int j = 0; j < m; ++j) cand[j + 1] += alpha * step[j];
            if (!eta_values_from_lambda(d, cand, trial_eta)) continue;
            const double tn = residual_norm(trial_eta);
            if (tn < rnorm) {
                lam = std::move(cand);
                cur_eta = trial_eta;
                rnorm = tn;
                accepted = true;
                break;
            }
        }
        if (!accepted) break; // stalled
    }
    if (rnorm <= opts.tol)
        return pi_from_lambda(ParamVector{d, ParamKind::log_linear, lam});
    throw numeric_error("pi_from_eta: no compatible table found (best residual " +
                        std::to_string(rnorm) + ")");
}

} // namespace palin
