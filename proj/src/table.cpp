#include "palin/table.hpp"

#include <cmath>
#include <string>

#include "palin/errors.hpp"
#include "palin/kernels.hpp"

namespace palin {

namespace {

void check_length(int d, std::size_t got) {
    if (got != cell_count(d))
        throw input_error("table for d=" + std::to_string(d) + " needs " +
                          std::to_string(cell_count(d)) + " cells, got " +
                          std::to_string(got));
}

} // namespace

ProbabilityTable ProbabilityTable::normalized(int d, std::vector<double> cells,
                                              double floor) {
    check_length(d, cells.size());
    double total = 0.0;
    for (double p : cells) {
        if (!std::isfinite(p) || p <= 0.0)
            throw numeric_error("probability table requires strictly positive cells");
        total += p;
    }
    kernel::scale_inplace(cells, 1.0 / total);
    for (double p : cells)
        if (p < floor)
            throw numeric_error("cell probability below floor " + std::to_string(floor));
    return ProbabilityTable{d, std::move(cells)};
}

ProbabilityTable ProbabilityTable::fitted(int d, std::vector<double> cells) {
    check_length(d, cells.size());
    double total = 0.0;
    for (double p : cells) {
        if (!std::isfinite(p) || p < 0.0)
            throw numeric_error("fitted table requires nonnegative cells");
        total += p;
    }
    if (total <= 0.0) throw numeric_error("fitted table sums to zero");
    kernel::scale_inplace(cells, 1.0 / total);
    return ProbabilityTable{d, std::move(cells)};
}

CountTable CountTable::of(int d, std::vector<double> counts) {
    check_length(d, counts.size());
    double total = 0.0;
    for (double c : counts) {
        if (!std::isfinite(c) || c < 0.0)
            throw input_error("counts must be nonnegative");
        total += c;
    }
    return CountTable{d, std::move(counts), total};
}

ProbabilityTable CountTable::to_probabilities() const {
    if (total <= 0.0) throw numeric_error("empty count table");
    return ProbabilityTable::fitted(d, counts);
}

const char* to_string(ParamKind k) {
    switch (k) {
        case ParamKind::log_linear: return "lambda";
        case ParamKind::moment: return "xi";
        case ParamKind::mv_logistic: return "eta";
    }
    return "?";
}

} // namespace palin
