#include "palin/generate.hpp"

#include <cmath>
#include <string>

#include "palin/errors.hpp"
#include "palin/rng.hpp"

namespace palin {

TriangularSystem TriangularSystem::of(int d, std::vector<double> beta) {
    checked_dim(d);
    const std::size_t expected = static_cast<std::size_t>(d) * (d - 1) / 2;
    if (beta.size() != expected)
        throw input_error("triangular system for d=" + std::to_string(d) + " needs " +
                          std::to_string(expected) + " coefficients");
    std::size_t at = 0;
    for (int s = 2; s <= d; ++s) {
        double row = 0.0;
        for (int j = 1; j < s; ++j) row += std::abs(beta[at++]);
        if (!(row < 1.0))
            throw numeric_error("triangular system row " + std::to_string(s) +
                                " infeasible: sum of |beta| must be below 1");
    }
    return TriangularSystem{d, std::move(beta)};
}

double TriangularSystem::coeff(int s, int j) const {
    return beta[static_cast<std::size_t>(s - 2) * (s - 1) / 2 + (j - 1)];
}

ProbabilityTable exact_table(const TriangularSystem& sys) {
    const int d = sys.d;
    const std::size_t n = cell_count(d);
    std::vector<double> p(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        double prob = 0.5; // uniform first variable
        for (int s = 2; s <= d; ++s) {
            const int as = (k >> (s - 1)) & 1;
            double acc = 0.0;
            for (int j = 1; j < s; ++j) {
                const int aj = (k >> (j - 1)) & 1;
                acc += sys.coeff(s, j) * (((as + aj) & 1) ? -1.0 : 1.0);
            }
            prob *= 0.5 * (1.0 + acc);
        }
        p[k] = prob;
    }
    return ProbabilityTable::normalized(d, std::move(p));
}

ParamVector xi_recursion(const TriangularSystem& sys) {
    const int d = sys.d;
    std::vector<double> cur{1.0, 0.0}; // moments over subsets of {1}
    for (int s = 2; s <= d; ++s) {
        const std::uint32_t sbit = std::uint32_t{1} << (s - 1);
        std::vector<double> next(std::size_t{1} << s, 0.0);
        for (std::uint32_t b = 0; b < cur.size(); ++b) next[b] = cur[b];
        for (std::uint32_t b = sbit; b < next.size(); ++b) {
            if (!(b & sbit)) continue;
            if (subset_order(b) % 2 == 1) continue; // odd orders stay zero
            const std::uint32_t rest = b & ~sbit;
            double acc = 0.0;
            for (int j = 1; j < s; ++j)
                acc += sys.coeff(s, j) * cur[rest ^ (std::uint32_t{1} << (j - 1))];
            next[b] = acc;
        }
        cur = std::move(next);
    }
    return ParamVector{d, ParamKind::moment, std::move(cur)};
}

CountTable sample(const TriangularSystem& sys, std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw input_error("sample: n must be at least 1");
    const int d = sys.d;
    SplitMix64 rng(seed);
    std::vector<double> counts(cell_count(d), 0.0);
    for (std::int64_t rep = 0; rep < n; ++rep) {
        std::uint32_t cell = 0;
        if (rng.next_double() >= 0.5) cell |= 1u;
        for (int s = 2; s <= d; ++s) {
            double acc = 0.0;
            for (int j = 1; j < s; ++j) {
                const int aj = (cell >> (j - 1)) & 1;
                acc += sys.coeff(s, j) * (aj ? -1.0 : 1.0);
            }
            const double p0 = 0.5 * (1.0 + acc); // P(A_s = 0 | history)
            if (rng.next_double() >= p0) cell |= std::uint32_t{1} << (s - 1);
        }
        counts[cell] += 1.0;
    }
    return CountTable::of(d, std::move(counts));
}

} // namespace palin
