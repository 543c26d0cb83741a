#ifndef PALIN_SYMMETRY_HPP
#define PALIN_SYMMETRY_HPP

#include <utility>

#include "palin/table.hpp"

// The palindromic (centrally symmetric) family: p(a) = p(~a) for every
// cell.  Closed-form maximum likelihood estimation by complement-pair
// averaging and the likelihood-ratio test of the symmetry hypothesis.

namespace palin {

struct PalindromicFit {
    CountTable fitted;      // complement-pair averages, exactly symmetric
    ProbabilityTable p_hat; // fitted / n
    double wilks = 0.0;
    int df = 0;             // 2^(d-1)
    ParamVector xi_hat;     // odd orders exactly zero
};

/// True iff |p(a) - p(~a)| <= tol for every cell.
bool is_palindromic(const ProbabilityTable& t, double tol = 1e-9);

/// Equivalent route through the moment parameters: true iff every odd-order
/// xi_b is within tol of zero.  Kept separate so the two characterizations
/// can be cross-checked.
bool is_palindromic_by_moments(const ProbabilityTable& t, double tol = 1e-9);

/// The permutation a -> ~a; a table is palindromic iff it is a fixed point.
ProbabilityTable reverse_complement(const ProbabilityTable& t);

/// Maximum likelihood fit of the palindromic family:
/// n_hat(a) = (n(a) + n(~a)) / 2, p_hat = n_hat / n.
PalindromicFit symmetrize(const CountTable& c);

/// Wilks statistic w = 2 sum n(a) log(2 n(a) / (n(a) + n(~a))) with the
/// 0 log 0 = 0 convention, and its degrees of freedom 2^(d-1).
std::pair<double, int> wilks_palindromic(const CountTable& c);

} // namespace palin

#endif
