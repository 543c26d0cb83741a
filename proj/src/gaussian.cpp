#include "palin/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "palin/errors.hpp"
#include "palin/linalg.hpp"
#include "palin/rng.hpp"

namespace palin {

DataMatrix DataMatrix::of(int n, int d, std::vector<double> row_major) {
    if (n < 2) throw input_error("data matrix needs at least two observations");
    checked_dim(d);
    if (row_major.size() != static_cast<std::size_t>(n) * d)
        throw input_error("data matrix size mismatch");
    for (double x : row_major)
        if (!std::isfinite(x)) throw input_error("data matrix has a non-finite value");
    return DataMatrix{n, d, std::move(row_major)};
}

CorrMatrix CorrMatrix::of(int d, std::vector<double> row_major) {
    checked_dim(d);
    if (row_major.size() != static_cast<std::size_t>(d) * d)
        throw input_error("correlation matrix size mismatch");
    for (int s = 0; s < d; ++s) {
        if (std::abs(row_major[static_cast<std::size_t>(s) * d + s] - 1.0) > 1e-9)
            throw input_error("correlation matrix diagonal must be 1");
        for (int t = 0; t < s; ++t) {
            const double a = row_major[static_cast<std::size_t>(s) * d + t];
            const double b = row_major[static_cast<std::size_t>(t) * d + s];
            if (std::abs(a - b) > 1e-9)
                throw input_error("correlation matrix must be symmetric");
            if (std::abs(a) > 1.0 + 1e-9)
                throw input_error("correlation entries must lie in [-1, 1]");
        }
    }
    return CorrMatrix{d, std::move(row_major)};
}

CorrMatrix CorrMatrix::identity(int d) {
    checked_dim(d);
    std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
    for (int s = 0; s < d; ++s) m[static_cast<std::size_t>(s) * d + s] = 1.0;
    return CorrMatrix{d, std::move(m)};
}

bool CorrMatrix::positive_definite(double tol) const {
    std::vector<double> lower;
    return linalg::cholesky(d, m, lower, tol);
}

CorrMatrix corr_from_data(const DataMatrix& data) {
    const int n = data.n, d = data.d;
    std::vector<double> mean(d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) mean[j] += data.at(i, j);
    for (double& x : mean) x /= n;

    std::vector<double> cov(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < d; ++s) {
            const double xs = data.at(i, s) - mean[s];
            for (int t = 0; t <= s; ++t)
                cov[static_cast<std::size_t>(s) * d + t] += xs * (data.at(i, t) - mean[t]);
        }
    for (int s = 0; s < d; ++s)
        if (cov[static_cast<std::size_t>(s) * d + s] <= 0.0)
            throw numeric_error("corr_from_data: column " + std::to_string(s + 1) +
                                " has zero variance");
    CorrMatrix out = CorrMatrix::identity(d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < s; ++t) {
            const double r = cov[static_cast<std::size_t>(s) * d + t] /
                             std::sqrt(cov[static_cast<std::size_t>(s) * d + s] *
                                       cov[static_cast<std::size_t>(t) * d + t]);
            out.set(s, t, r);
        }
    return out;
}

CorrMatrix partial_corr(const CorrMatrix& r) {
    std::vector<double> k;
    try {
        k = linalg::inverse(r.d, r.m);
    } catch (const numeric_error&) {
        throw numeric_error("partial_corr: singular correlation matrix");
    }
    CorrMatrix out = CorrMatrix::identity(r.d);
    for (int s = 0; s < r.d; ++s)
        for (int t = 0; t < s; ++t) {
            const double v = -k[static_cast<std::size_t>(s) * r.d + t] /
                             std::sqrt(k[static_cast<std::size_t>(s) * r.d + s] *
                                       k[static_cast<std::size_t>(t) * r.d + t]);
            out.set(s, t, v);
        }
    return out;
}

std::vector<double> concentration_diagonal(const CorrMatrix& r) {
    const std::vector<double> k = linalg::inverse(r.d, r.m);
    std::vector<double> out(r.d);
    for (int s = 0; s < r.d; ++s) out[s] = k[static_cast<std::size_t>(s) * r.d + s];
    return out;
}

CountTable median_dichotomize(const DataMatrix& data, std::uint64_t seed) {
    const int n = data.n, d = data.d;
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> cell(n, 0);
    std::vector<double> col(n);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < n; ++i) col[i] = data.at(i, j);

        std::vector<double> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        double gap = 0.0;
        for (int i = 1; i < n; ++i) {
            const double g = sorted[i] - sorted[i - 1];
            if (g > 0.0 && (gap == 0.0 || g < gap)) gap = g;
        }
        if (gap == 0.0) gap = 1.0; // constant column: any amplitude breaks ties
        const double amp = gap * 1e-3;

        for (int i = 0; i < n; ++i) col[i] += (rng.next_double() - 0.5) * amp;

        sorted = col;
        std::sort(sorted.begin(), sorted.end());
        const double median = (n % 2 == 0)
                                  ? (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
                                  : sorted[(n - 1) / 2];
        for (int i = 0; i < n; ++i)
            if (col[i] > median) cell[i] |= std::uint32_t{1} << j;
    }
    std::vector<double> counts(cell_count(d), 0.0);
    for (int i = 0; i < n; ++i) counts[cell[i]] += 1.0;
    return CountTable::of(d, std::move(counts));
}

double xi_from_rho(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
        throw input_error("xi_from_rho: correlation outside [-1, 1]");
    return 2.0 / std::numbers::pi * std::asin(rho);
}

double rho_from_xi(double xi) {
    if (!(xi >= -1.0 && xi <= 1.0))
        throw input_error("rho_from_xi: moment outside [-1, 1]");
    return std::sin(std::numbers::pi / 2.0 * xi);
}

ProbabilityTable equicorrelation_table(double xi) {
    if (!(xi > -1.0 / 3.0 && xi < 1.0))
        throw numeric_error("equicorrelation_table: xi outside (-1/3, 1)");
    std::vector<double> cells(8, (1.0 - xi) / 8.0);
    cells[0] = cells[7] = (1.0 + 3.0 * xi) / 8.0;
    return ProbabilityTable::normalized(3, std::move(cells));
}

namespace {

std::vector<double> submatrix(const CorrMatrix& r, const std::vector<int>& idx0) {
    const int m = static_cast<int>(idx0.size());
    std::vector<double> out(static_cast<std::size_t>(m) * m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) out[static_cast<std::size_t>(s) * m + t] = r.at(idx0[s], idx0[t]);
    return out;
}

} // namespace

GaussianFit fit_gaussian_decomposable(const CorrMatrix& r, const Graph& g, int n) {
    if (r.d != g.d)
        throw input_error("fit_gaussian_decomposable: dimension mismatch");
    const std::optional<CliqueDecomposition> decomp = decompose(g);
    if (!decomp)
        throw input_error("fit_gaussian_decomposable: graph is not chordal");
    if (!r.positive_definite())
        throw numeric_error("fit_gaussian_decomposable: R is not positive definite");

    const int d = r.d;
    // K_hat = sum of padded clique inverses minus padded separator inverses
    std::vector<double> khat(static_cast<std::size_t>(d) * d, 0.0);
    auto accumulate = [&](std::uint32_t mask, double sign) {
        const std::vector<int> idx0 = [&] {
            std::vector<int> v = vars_from_mask(mask);
            for (int& x : v) --x;
            return v;
        }();
        if (idx0.empty()) return;
        const int m = static_cast<int>(idx0.size());
        const std::vector<double> inv = linalg::inverse(m, submatrix(r, idx0));
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t)
                khat[static_cast<std::size_t>(idx0[s]) * d + idx0[t]] +=
                    sign * inv[static_cast<std::size_t>(s) * m + t];
    };
    for (std::uint32_t cl : decomp->cliques) accumulate(cl, 1.0);
    for (std::uint32_t sp : decomp->separators) accumulate(sp, -1.0);

    std::vector<double> rhat = linalg::inverse(d, khat);
    for (int s = 0; s < d; ++s) {
        rhat[static_cast<std::size_t>(s) * d + s] = 1.0;
        for (int t = 0; t < s; ++t) {
            const double v = (rhat[static_cast<std::size_t>(s) * d + t] +
                              rhat[static_cast<std::size_t>(t) * d + s]) / 2.0;
            rhat[static_cast<std::size_t>(s) * d + t] = v;
            rhat[static_cast<std::size_t>(t) * d + s] = v;
        }
    }
    GaussianFit fit;
    fit.r_hat = CorrMatrix{d, std::move(rhat)};
    fit.wilks = n * std::log(linalg::determinant(d, fit.r_hat.m) /
                             linalg::determinant(d, r.m));
    fit.df = g.missing_edge_count();
    return fit;
}

EquicorrFit fit_equicorrelation(const CorrMatrix& r, const std::vector<int>& block_1based,
                                int n) {
    const int m = static_cast<int>(block_1based.size());
    if (m < 3) throw input_error("fit_equicorrelation: block needs at least 3 variables");
    std::vector<int> idx0;
    for (int v : block_1based) {
        if (v < 1 || v > r.d) throw input_error("fit_equicorrelation: variable out of range");
        idx0.push_back(v - 1);
    }
    const std::vector<double> sub = submatrix(r, idx0);
    double rho = 0.0;
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < s; ++t) rho += sub[static_cast<std::size_t>(s) * m + t];
    rho /= m * (m - 1) / 2.0;
    if (!(rho > -1.0 / (m - 1) && rho < 1.0))
        throw numeric_error("fit_equicorrelation: average correlation infeasible");

    std::vector<double> eq(static_cast<std::size_t>(m) * m, rho);
    for (int s = 0; s < m; ++s) eq[static_cast<std::size_t>(s) * m + s] = 1.0;
    EquicorrFit fit;
    fit.rho_hat = rho;
    fit.wilks = n * std::log(linalg::determinant(m, eq) / linalg::determinant(m, sub));
    fit.df = m * (m - 1) / 2 - 1;
    return fit;
}

} // namespace palin
