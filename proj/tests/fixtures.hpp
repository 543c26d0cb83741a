#ifndef PALIN_TESTS_FIXTURES_HPP
#define PALIN_TESTS_FIXTURES_HPP

#include <vector>

#include "palin/table.hpp"

// Small reference tables used across the test suites, in the
// first-index-fastest cell order.

namespace fixtures {

/// The three-variable reference table 80*pi = (15,9,1,15,15,1,9,15) whose
/// parameter rows are known in closed form.
inline palin::ProbabilityTable reference_d3() {
    return palin::ProbabilityTable::normalized(3, {15, 9, 1, 15, 15, 1, 9, 15});
}

/// Conditional independence holds given the third variable, but the
/// marginal pair is dependent: 100*pi = (32,8,8,2,2,8,8,32).
inline palin::ProbabilityTable ci_given_o() {
    return palin::ProbabilityTable::normalized(3, {32, 8, 8, 2, 2, 8, 8, 32});
}

/// Marginal independence holds but the conditional pair is dependent:
/// 400*pi = (90,60,40,10,10,40,60,90).
inline palin::ProbabilityTable marginal_ci() {
    return palin::ProbabilityTable::normalized(3, {90, 60, 40, 10, 10, 40, 60, 90});
}

/// Sign reversal: marginally positive association, conditionally negative.
/// 400*pi = (100,50,40,10,10,40,50,100).
inline palin::ProbabilityTable sign_reversal() {
    return palin::ProbabilityTable::normalized(3, {100, 50, 40, 10, 10, 40, 50, 100});
}

inline std::vector<double> mirrored(std::vector<double> half) {
    const std::size_t h = half.size();
    half.resize(2 * h);
    for (std::size_t k = 0; k < h; ++k) half[2 * h - 1 - k] = half[k];
    return half;
}

/// Four variables, identity correlation matrix, yet jointly dependent
/// (only the four-factor interaction is nonzero): 880*pi.
inline palin::ProbabilityTable uncorrelated_dependent() {
    return palin::ProbabilityTable::normalized(
        4, mirrored({100, 10, 10, 100, 10, 100, 100, 10}));
}

/// Four variables with a four-factor log-linear interaction; not an Ising
/// table: 9200*pi.
inline palin::ProbabilityTable four_factor() {
    return palin::ProbabilityTable::normalized(
        4, mirrored({4095, 91, 91, 47, 91, 47, 47, 91}));
}

/// Chordless-four-cycle Ising tables (edges 13, 14, 23, 24); the first has
/// all positive interactions, the second all negative, the third adds the
/// covariance-graph independences: 336*pi each.
inline palin::ProbabilityTable ising_cycle_positive() {
    return palin::ProbabilityTable::normalized(
        4, mirrored({75, 15, 15, 3, 15, 15, 15, 15}));
}
inline palin::ProbabilityTable ising_cycle_negative() {
    return palin::ProbabilityTable::normalized(
        4, mirrored({3, 15, 15, 75, 15, 15, 15, 15}));
}
inline palin::ProbabilityTable ising_cycle_covariance() {
    return palin::ProbabilityTable::normalized(
        4, mirrored({35, 35, 7, 7, 7, 35, 7, 35}));
}

inline palin::CountTable ising_cycle_positive_counts() {
    return palin::CountTable::of(4, mirrored({75, 15, 15, 3, 15, 15, 15, 15}));
}

} // namespace fixtures

#endif
