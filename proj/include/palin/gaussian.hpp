#ifndef PALIN_GAUSSIAN_HPP
#define PALIN_GAUSSIAN_HPP

#include <cstdint>
#include <vector>

#include "palin/graphs.hpp"
#include "palin/table.hpp"

// The continuous side: correlation and partial-correlation matrices,
// median dichotomization with deterministic jitter, the quadrant / arcsin
// bridge between a Gaussian correlation and the moment parameter of the
// dichotomized pair, and two small Gaussian model fits.

namespace palin {

/// n x d observation matrix, row-major, no missing values.
struct DataMatrix {
    int n = 0;
    int d = 0;
    std::vector<double> values;

    static DataMatrix of(int n, int d, std::vector<double> row_major);
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * d + j]; }
};

/// Symmetric d x d correlation matrix with unit diagonal.
struct CorrMatrix {
    int d = 0;
    std::vector<double> m;

    static CorrMatrix of(int d, std::vector<double> row_major);
    static CorrMatrix identity(int d);
    double at(int s, int t) const { return m[static_cast<std::size_t>(s) * d + t]; }
    void set(int s, int t, double v) {
        m[static_cast<std::size_t>(s) * d + t] = v;
        m[static_cast<std::size_t>(t) * d + s] = v;
    }
    /// Cholesky-based check; `tol` bounds the smallest admissible pivot.
    bool positive_definite(double tol = 1e-10) const;
};

/// Pearson product-moment correlations of the columns.
CorrMatrix corr_from_data(const DataMatrix& m);

/// Partial correlations given all remaining variables, from the inverse:
/// rho_{st.rest} = -K_st / sqrt(K_ss K_tt).
CorrMatrix partial_corr(const CorrMatrix& r);

/// Diagonal of the inverse correlation matrix (the concentrations).
std::vector<double> concentration_diagonal(const CorrMatrix& r);

/// Splits every column at its sample median after adding deterministic
/// seeded jitter (uniform noise at 1e-3 of the smallest gap between
/// distinct column values), tabulating strictly-above-median as level 1.
/// Margins are exactly (n/2, n/2) for even n.  Jitter draws are consumed
/// column by column, row by row.
CountTable median_dichotomize(const DataMatrix& m, std::uint64_t seed);

/// xi = (2/pi) arcsin(rho), the quadrant moment of a median-dichotomized
/// Gaussian pair.
double xi_from_rho(double rho);

/// rho = sin(pi/2 xi), exact inverse of xi_from_rho.
double rho_from_xi(double xi);

/// The trivariate table with all three pairwise moments equal to xi:
/// 8 pi = (1+3xi, 1-xi, ..., 1-xi, 1+3xi).  Its log-linear two-factor
/// parameters equal log((1+3xi)/(1-xi))/4 and its logistic ones atanh(xi).
ProbabilityTable equicorrelation_table(double xi);

struct GaussianFit {
    CorrMatrix r_hat;
    double wilks = 0.0;
    int df = 0; // number of missing edges
};

/// Clique-marginal-preserving completion of R along the junction tree of a
/// chordal graph (missing entries filled by the separator product rule);
/// w = n log(det R_hat / det R).
GaussianFit fit_gaussian_decomposable(const CorrMatrix& r, const Graph& g, int n);

struct EquicorrFit {
    double rho_hat = 0.0;
    double wilks = 0.0;
    int df = 0; // distinct pairs - 1
};

/// Replaces the within-block correlations by their average and measures
/// the determinant-ratio deviance of the block submatrix.
EquicorrFit fit_equicorrelation(const CorrMatrix& r, const std::vector<int>& block_1based,
                                int n);

} // namespace palin

#endif
