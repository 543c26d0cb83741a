#ifndef PALIN_GENERATE_HPP
#define PALIN_GENERATE_HPP

#include <cstdint>

#include "palin/table.hpp"

// Linear triangular systems with main effects only and no constant term:
//
//   P(A_s = a_s | a_1..a_{s-1}) = (1 + sum_j beta_sj (-1)^(a_s + a_j)) / 2,
//
// with A_1 uniform.  Every feasible system generates a palindromic table;
// the even-order moments are linear in the coefficients and satisfy an
// exact recursion over the build-up dimension.

namespace palin {

struct TriangularSystem {
    int d = 0;
    std::vector<double> beta; // rows s = 2..d, entries j = 1..s-1, row-major

    /// Validates the strict row condition sum_j |beta_sj| < 1 (for this
    /// conditional form it is equivalent to every conditional probability
    /// lying in (0,1) over all histories).
    static TriangularSystem of(int d, std::vector<double> beta);

    double coeff(int s, int j) const; // 1-based, j < s
};

/// Builds the exact 2^d table from the recursive factorization.
ProbabilityTable exact_table(const TriangularSystem& sys);

/// Moment vector by the build-up recursion: a new even-order subset b
/// containing s collects sum_j beta_sj xi((b \ s) xor {j}); new odd orders
/// are identically zero.  Matches xi_from_pi(exact_table(sys)).
ParamVector xi_recursion(const TriangularSystem& sys);

/// n forward draws of the system; reproducible from the seed (one uniform
/// per variable per observation, in variable order).
CountTable sample(const TriangularSystem& sys, std::int64_t n, std::uint64_t seed);

} // namespace palin

#endif
