// Acceptance suite: runs every top-level verification at its pinned
// tolerance and prints one pass/fail line per criterion.  Exit code is the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "palin/casestudy.hpp"
#include "palin/fit.hpp"
#include "palin/gaussian.hpp"
#include "palin/generate.hpp"
#include "palin/params.hpp"
#include "palin/reference.hpp"
#include "palin/rng.hpp"
#include "palin/symmetry.hpp"

using namespace palin;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void finish() const {
        std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", name.c_str());
        for (const std::string& n : notes) std::printf("     - %s\n", n.c_str());
        if (!ok) ++failures;
    }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// pairwise correlation matrix of a binary table via the moment parameters
// (uniform margins make the moments the correlations of the sign coding)
CorrMatrix corr_of_table(const ProbabilityTable& t) {
    const ParamVector xi = xi_from_pi(t);
    CorrMatrix r = CorrMatrix::identity(t.d);
    for (int s = 1; s <= t.d; ++s)
        for (int u = s + 1; u <= t.d; ++u)
            r.set(s - 1, u - 1, xi.values[mask_from_vars({s, u}, t.d)]);
    return r;
}

void criterion1_reference_rows() {
    Criterion c{"1: reference 2^3 table parameter rows"};
    const ProbabilityTable t = fixtures::reference_d3();

    const ParamVector xi = xi_from_pi(t);
    const double expected_xi[8] = {1, 0, 0, 0.5, 0, -0.2, 0.2, 0};
    for (int b = 1; b < 8; ++b)
        c.require(near(xi.values[b], expected_xi[b], 1e-12),
                  "xi[" + subset_label(b, 3) + "]");

    const ParamVector lam = lambda_from_pi(t);
    c.require(near(lam.values[0b011], std::log(5.0) / 2, 1e-12), "lambda[12] = log(5)/2");
    // the remaining two-factor terms, corrected for the transposed print:
    // lambda carries +-log(3)/2, eta carries +-log(3/2)/2
    c.require(near(lam.values[0b101], -std::log(3.0) / 2, 1e-12), "lambda[13]");
    c.require(near(lam.values[0b110], std::log(3.0) / 2, 1e-12), "lambda[23]");
    for (std::uint32_t b : {0b001u, 0b010u, 0b100u, 0b111u})
        c.require(std::abs(lam.values[b]) <= 1e-12, "odd lambda vanishes");

    const ParamVector eta = eta_from_pi(t);
    c.require(near(eta.values[0b011], std::log(3.0) / 2, 1e-9), "eta[12] = log(3)/2");
    c.require(near(eta.values[0b101], -std::log(1.5) / 2, 1e-9), "eta[13]");
    c.require(near(eta.values[0b110], std::log(1.5) / 2, 1e-9), "eta[23]");
    for (std::uint32_t b : {0b001u, 0b010u, 0b100u, 0b111u})
        c.require(std::abs(eta.values[b]) <= 1e-9, "odd eta vanishes");

    const ParamVector eta2 = eta_via_stepwise(lam);
    for (std::uint32_t b = 1; b < 8; ++b)
        c.require(near(eta2.values[b], eta.values[b], 1e-9), "stepwise eta agrees");
    const ProbabilityTable back = pi_from_eta(eta);
    c.require(testutil::max_abs_diff(back.pi, t.pi) <= 1e-8, "eta inverts to the table");
    c.finish();
}

void criterion2_binary_case_study() {
    Criterion c{"2: case-study binary fits"};
    const CountTable& counts = casestudy::dichotomized_counts();
    const Graph graph = casestudy::concentration_graph();

    const auto [w_pal, df_pal] = wilks_palindromic(counts);
    c.require(near(w_pal, 9.1, 0.05), "palindromic w = 9.1 +- 0.05");
    c.require(df_pal == 8, "palindromic df = 8");

    const ModelFit fit = fit_decomposable(counts, graph);
    const auto [w_model, df_model] = wilks_model(counts, fit);
    c.require(near(w_model, 10.3, 0.05), "model w = 10.3 +- 0.05");
    c.require(df_model == 11, "model df = 11");
    c.require(near(fit.wilks_independence, 1.2, 0.1), "independence w = 1.2 +- 0.1");
    c.require(fit.df_independence == 3, "independence df = 3");

    const double printed[16] = {21.2, 2.5, 2.5, 1.8, 0.7, 1.0, 1.0, 8.3,
                                8.3,  1.0, 1.0, 0.7, 1.8, 2.5, 2.5, 21.2};
    for (int k = 0; k < 16; ++k)
        c.require(near(fit.fitted.counts[k], printed[k], 0.05),
                  "fitted cell " + std::to_string(k));

    const double ratios[4] = {2.5, 3.5, 3.5, 3.7};
    for (int i = 0; i < 4; ++i)
        c.require(near(fit.studentized[i], ratios[i], 0.2),
                  "studentized interaction " + std::to_string(i));

    double below = 0, geo = 0;
    for (std::uint32_t k = 0; k < 16; ++k) {
        if ((k >> 2) & 1u) continue;
        geo += fit.fitted.counts[k];
        if (!((k >> 3) & 1u)) below += fit.fitted.counts[k];
    }
    c.require(near(below / geo, 0.72, 0.01), "P(A4=0 | A3=0) = 0.72 +- 0.01");
    c.finish();
}

void criterion3_gaussian_case_study() {
    Criterion c{"3: case-study Gaussian fits"};
    const CorrMatrix r = corr_from_data(casestudy::grades());
    const int pairs[6][2] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    const double printed_r[6] = {0.72, 0.76, 0.80, 0.62, 0.60, 0.71};
    const double printed_p[6] = {0.27, 0.34, 0.51, 0.17, 0.04, 0.38};
    for (int i = 0; i < 6; ++i)
        c.require(near(r.at(pairs[i][0], pairs[i][1]), printed_r[i], 0.005),
                  "correlation " + std::to_string(i));
    const CorrMatrix part = partial_corr(r);
    for (int i = 0; i < 6; ++i)
        c.require(near(part.at(pairs[i][0], pairs[i][1]), printed_p[i], 0.005),
                  "partial correlation " + std::to_string(i));

    const GaussianFit gf = fit_gaussian_decomposable(r, casestudy::concentration_graph(), 78);
    c.require(near(gf.wilks, 2.8, 0.3), "Gaussian w = 2.8 +- 0.3");
    c.require(gf.df == 2, "Gaussian df = 2");

    const EquicorrFit ef = fit_equicorrelation(r, {1, 2, 3}, 78);
    c.require(near(ef.rho_hat, 0.76, 0.005), "equicorrelation 0.76 +- 0.005");
    c.require(near(ef.wilks, 3.4, 0.3), "equicorrelation w = 3.4 +- 0.3");
    c.require(ef.df == 2, "equicorrelation df = 2");
    c.finish();
}

void criterion4_independence_fixtures() {
    Criterion c{"4: conditional-independence fixtures"};

    struct Case {
        ProbabilityTable t;
        double r[3];       // 12, 13, 23
        double partial[3]; // 12.3, 13.2, 23.1
    };
    const Case cases[3] = {
        {fixtures::ci_given_o(), {0.36, 0.60, 0.60}, {0.0, 0.51, 0.51}},
        {fixtures::marginal_ci(), {0.0, 0.30, 0.50}, {-0.18, 0.35, 0.52}},
        {fixtures::sign_reversal(), {0.10, 0.40, 0.50}, {-0.13, 0.41, 0.50}},
    };
    for (int i = 0; i < 3; ++i) {
        const CorrMatrix r = corr_of_table(cases[i].t);
        const CorrMatrix p = partial_corr(r);
        const int pr[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (int k = 0; k < 3; ++k) {
            c.require(near(r.at(pr[k][0], pr[k][1]), cases[i].r[k], 0.005),
                      "fixture " + std::to_string(i) + " correlation " + std::to_string(k));
            c.require(near(p.at(pr[k][0], pr[k][1]), cases[i].partial[k], 0.005),
                      "fixture " + std::to_string(i) + " partial " + std::to_string(k));
        }
    }

    c.require(check_ci(fixtures::ci_given_o(), 0b001, 0b010, 0b100),
              "fixture A: 1 indep 2 given 3");
    c.require(!check_ci(fixtures::ci_given_o(), 0b001, 0b010, 0),
              "fixture A: marginal dependence");
    c.require(check_ci(fixtures::marginal_ci(), 0b001, 0b010, 0),
              "fixture B: marginal independence");
    c.require(!check_ci(fixtures::marginal_ci(), 0b001, 0b010, 0b100),
              "fixture B: conditional dependence");
    const ProbabilityTable ud = fixtures::uncorrelated_dependent();
    c.require(check_ci(ud, 0b0011, 0b0100, 0), "fixture C: pair indep 3");
    c.require(check_ci(ud, 0b0011, 0b1000, 0), "fixture C: pair indep 4");
    c.require(!check_ci(ud, 0b0011, 0b1100, 0), "fixture C: pair dep {3,4}");

    // sign reversal: marginal association positive, conditional negative,
    // with the conditional log odds-ratio equal across strata
    {
        const ProbabilityTable t = fixtures::sign_reversal();
        const ParamVector xi = xi_from_pi(t);
        c.require(xi.values[0b011] > 0, "reversal: marginal moment positive");
        const auto lor = [&](int level) {
            double cells[4];
            for (std::uint32_t k = 0; k < 8; ++k)
                if (static_cast<int>((k >> 2) & 1u) == level)
                    cells[k & 3u] = t.pi[k];
            return std::log(cells[0] * cells[3] / (cells[1] * cells[2]));
        };
        c.require(near(lor(0), lor(1), 1e-12), "reversal: stratum odds ratios equal");
        c.require(lor(0) < 0, "reversal: conditional association negative");
        const CorrMatrix p = partial_corr(corr_of_table(t));
        c.require(near(p.at(0, 1), -0.13, 0.005), "reversal: partial = -0.13");
    }
    c.finish();
}

void criterion5_property_suites() {
    Criterion c{"5: property suites"};
    SplitMix64 rng(20250810);

    { // (a) round trips on 200 random tables
        bool ok = true;
        double worst = 0.0;
        for (int d = 2; d <= 6; ++d)
            for (int rep = 0; rep < 40; ++rep) {
                const ProbabilityTable t = testutil::random_table(rng, d);
                worst = std::max(worst,
                                 testutil::max_abs_diff(pi_from_lambda(lambda_from_pi(t)).pi, t.pi));
                worst = std::max(worst,
                                 testutil::max_abs_diff(pi_from_xi(xi_from_pi(t)).pi, t.pi));
                worst = std::max(worst,
                                 testutil::max_abs_diff(pi_from_eta(eta_from_pi(t)).pi, t.pi));
                ok = ok && worst <= 1e-9;
            }
        c.require(ok, "(a) parameter round trips within 1e-9");
        std::printf("     (a) worst round-trip deviation: %.3e\n", worst);
    }
    { // (b) fast transform vs dense oracle
        bool ok = true;
        for (int d = 1; d <= 10; ++d) {
            std::vector<double> v(cell_count(d));
            for (double& x : v) x = rng.next_double() * 2 - 1;
            const std::vector<double> fast = hadamard_apply(d, v);
            const std::vector<double> dense = ref::hadamard_dense_apply(d, v);
            double scale = 1.0;
            for (double x : dense) scale = std::max(scale, std::abs(x));
            ok = ok && testutil::max_abs_diff(fast, dense) <= 1e-12 * scale;
        }
        c.require(ok, "(b) transform matches dense oracle to 1e-12");
    }
    { // (c) palindromic characterizations on 200 random palindromic tables
        bool ok = true;
        for (int d = 2; d <= 6; ++d)
            for (int rep = 0; rep < 40; ++rep) {
                const ProbabilityTable t = testutil::random_palindromic(rng, d);
                ok = ok && is_palindromic(t, 1e-12);
                for (std::uint32_t keep = 1; ok && keep < cell_count(d); ++keep)
                    ok = is_palindromic(marginal_table(t, keep), 1e-12);
                const ParamVector lam = lambda_from_pi(t);
                const ParamVector xi = xi_from_pi(t);
                for (std::uint32_t b = 1; ok && b < cell_count(d); ++b)
                    if (subset_order(b) % 2 == 1)
                        ok = std::abs(lam.values[b]) <= 1e-9 && std::abs(xi.values[b]) <= 1e-9;
                if (d <= 4 && ok) {
                    const ParamVector eta = eta_from_pi(t);
                    for (std::uint32_t b = 1; ok && b < cell_count(d); ++b)
                        if (subset_order(b) % 2 == 1) ok = std::abs(eta.values[b]) <= 1e-9;
                }
                // a perturbed table must fail the characterizations
                std::vector<double> v = t.pi;
                v[0] += 0.02;
                const ProbabilityTable bad = ProbabilityTable::normalized(d, std::move(v));
                ok = ok && !is_palindromic(bad, 1e-6) && !is_palindromic_by_moments(bad, 1e-6);
            }
        c.require(ok, "(c) palindromic characterizations (marginals, odd orders)");
    }
    { // (d) triangular systems
        bool ok = true;
        for (int rep = 0; rep < 100; ++rep) {
            const int d = 2 + static_cast<int>(rng.next() % 5);
            std::vector<double> beta;
            for (int s = 2; s <= d; ++s) {
                double mass = 0.0;
                std::vector<double> row(s - 1);
                for (double& x : row) {
                    x = rng.next_double() * 2 - 1;
                    mass += std::abs(x);
                }
                const double target = 0.85 * rng.next_double();
                for (double& x : row) x *= (mass > 0 ? target / mass : 0.0);
                beta.insert(beta.end(), row.begin(), row.end());
            }
            const TriangularSystem sys = TriangularSystem::of(d, beta);
            const ProbabilityTable t = exact_table(sys);
            ok = ok && is_palindromic(t, 1e-12);
            ok = ok && testutil::max_abs_diff(xi_recursion(sys).values,
                                              xi_from_pi(t).values) <= 1e-12;
        }
        c.require(ok, "(d) 100 triangular systems: palindromic, recursion agrees");
    }
    { // (e) arcsin/sin round trip
        bool ok = true;
        for (int i = 0; i <= 100; ++i) {
            const double rho = -1.0 + 0.02 * i;
            ok = ok && std::abs(rho_from_xi(xi_from_rho(rho)) - rho) <= 1e-12;
            const double x = -1.0 + 0.02 * i;
            ok = ok && std::abs(xi_from_rho(rho_from_xi(x)) - x) <= 1e-12;
        }
        c.require(ok, "(e) arcsin/sine round trip to 1e-12");
    }
    { // (f) decomposable vs IPF on chordal generators
        bool ok = true;
        int tested = 0;
        while (tested < 12) {
            const int d = 3 + static_cast<int>(rng.next() % 3);
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    if (rng.next_double() < 0.5) edges.emplace_back(i, j);
            const Graph g = Graph::of(d, edges);
            if (!decompose(g)) continue;
            const CountTable counts = testutil::random_counts(rng, d);
            const ModelFit a = fit_decomposable(counts, g);
            const ModelFit b = fit_ipf(counts, g);
            ok = ok && testutil::max_abs_diff(a.fitted.counts, b.fitted.counts) <= 1e-8;
            ++tested;
        }
        c.require(ok, "(f) decomposable vs IPF within 1e-8");
    }
    { // (g) max-clique <= 3 yields Ising fits
        bool ok = true;
        int tested = 0;
        while (tested < 25) {
            const int d = 3 + static_cast<int>(rng.next() % 3); // 3..5
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    if (rng.next_double() < 0.45) edges.emplace_back(i, j);
            const Graph g = Graph::of(d, edges);
            int maxcl = 0;
            for (std::uint32_t cl : cliques(g)) maxcl = std::max(maxcl, subset_order(cl));
            if (maxcl > 3) continue;
            const CountTable counts = testutil::random_counts(rng, d);
            const ModelFit fit =
                decompose(g) ? fit_decomposable(counts, g) : fit_ipf(counts, g);
            ok = ok && is_palindromic_ising(fit.fitted.to_probabilities(), 1e-6);
            ++tested;
        }
        c.require(ok, "(g) max-clique-3 fits are palindromic Ising");
    }
    { // (h) no effect reversal over >= 1000 nonnegative-interaction models
        int violations = 0;
        int models = 0;
        for (int rep = 0; rep < 1050; ++rep) {
            const int d = 2 + static_cast<int>(rng.next() % 3); // 2..4
            const ProbabilityTable t = testutil::random_ising(rng, d, 0.0, 0.6);
            ++models;
            const ParamVector xi = xi_from_pi(t);
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) {
                    const std::uint32_t ij = mask_from_vars({i, j}, d);
                    if (xi.values[ij] < -1e-9) ++violations;
                    const std::uint32_t others =
                        static_cast<std::uint32_t>(cell_count(d) - 1) & ~ij;
                    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
                        const ProbabilityTable m = marginal_table(t, ij | sub);
                        const std::uint32_t bi =
                            compress_bits(mask_from_vars({i}, d), ij | sub);
                        const std::uint32_t bj =
                            compress_bits(mask_from_vars({j}, d), ij | sub);
                        const std::uint32_t cc = compress_bits(sub, ij | sub);
                        for (std::uint32_t s = 0; s < m.size(); ++s) {
                            if ((s & (bi | bj)) != 0 || (s & cc) != s) continue;
                            const double lor = std::log(
                                m.pi[s] * m.pi[s | bi | bj] / (m.pi[s | bi] * m.pi[s | bj]));
                            if (lor < -1e-9) ++violations;
                        }
                        if (sub == 0) break;
                    }
                }
        }
        c.require(models >= 1000 && violations == 0,
                  "(h) no reversal in " + std::to_string(models) + " sampled models");
    }
    c.finish();
}

void criterion6_monte_carlo_bridge() {
    Criterion c{"6: dichotomized Gaussian bridge"};
    SplitMix64 rng(424242);
    const int n = 100000;
    const double rho = 0.5;
    std::vector<double> v(2 * n);
    for (int i = 0; i < n; ++i) {
        const double z1 = rng.next_gaussian();
        const double z2 = rng.next_gaussian();
        v[2 * i] = z1;
        v[2 * i + 1] = rho * z1 + std::sqrt(1 - rho * rho) * z2;
    }
    const CountTable counts = median_dichotomize(DataMatrix::of(n, 2, std::move(v)), 99);
    const PalindromicFit fit = symmetrize(counts);
    const double xi12 = fit.xi_hat.values[0b11];
    c.require(near(xi12, 1.0 / 3, 0.02), "xi estimate " + std::to_string(xi12));
    c.finish();
}

} // namespace

int main() {
    criterion1_reference_rows();
    criterion2_binary_case_study();
    criterion3_gaussian_case_study();
    criterion4_independence_fixtures();
    criterion5_property_suites();
    criterion6_monte_carlo_bridge();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
