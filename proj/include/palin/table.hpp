#ifndef PALIN_TABLE_HPP
#define PALIN_TABLE_HPP

#include <cstdint>
#include <vector>

#include "palin/cells.hpp"

namespace palin {

/// Smallest admissible cell probability in a strictly positive table.
inline constexpr double probability_floor = 1e-12;

/// A joint Bernoulli distribution as 2^d cell probabilities in
/// first-index-fastest lexicographic order.
struct ProbabilityTable {
    int d = 0;
    std::vector<double> pi;

    /// Strict construction: every cell must stay above `floor` after
    /// renormalization to sum one; violations are rejected.
    static ProbabilityTable normalized(int d, std::vector<double> cells,
                                       double floor = probability_floor);

    /// Lenient construction for fitted tables, where zero cells can occur
    /// legitimately; still renormalizes and rejects negatives.
    static ProbabilityTable fitted(int d, std::vector<double> cells);

    double at(std::uint32_t k) const { return pi[k]; }
    std::size_t size() const { return pi.size(); }
};

/// Observed (or fitted) cell counts; fractional values are allowed.
struct CountTable {
    int d = 0;
    std::vector<double> counts;
    double total = 0.0;

    static CountTable of(int d, std::vector<double> counts);

    /// counts/total as a lenient probability table.
    ProbabilityTable to_probabilities() const;
};

enum class ParamKind { log_linear, moment, mv_logistic };

const char* to_string(ParamKind k);

/// A 2^d vector of interaction parameters indexed by subset masks,
/// tagged with the parameterization it belongs to.
struct ParamVector {
    int d = 0;
    ParamKind kind = ParamKind::log_linear;
    std::vector<double> values;

    double at(std::uint32_t b) const { return values[b]; }
};

} // namespace palin

#endif
