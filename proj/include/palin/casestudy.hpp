#ifndef PALIN_CASESTUDY_HPP
#define PALIN_CASESTUDY_HPP

#include <optional>
#include <string>
#include <vector>

#include "palin/fit.hpp"
#include "palin/gaussian.hpp"
#include "palin/io.hpp"

// The bundled case study: summed exam grades (Analysis, Algebra, Geometry,
// Physics) for 78 students, the median-dichotomized 2^4 count table, and
// the concentration graph {12, 13, 23, 34}.  The count fixture is shipped
// explicitly because dichotomization depends on the jitter realization.

namespace palin::casestudy {

const DataMatrix& grades();              // 78 x 4
const CountTable& dichotomized_counts(); // the shipped 2^4 fixture
Graph concentration_graph();             // edges 12, 13, 23, 34
const std::vector<std::string>& subjects();

struct Report {
    int n = 0;
    CorrMatrix corr;
    CorrMatrix partial;
    std::vector<double> concentrations;
    GaussianFit gauss;
    EquicorrFit equi;
    double r_geometry_physics = 0.0;
    double r_sumscore_physics = 0.0;
    CountTable counts;
    PalindromicFit sym;
    ModelFit model;
    double predict_concordant = 0.0; // P(A4=0 | A3=0) = P(A4=1 | A3=1) under the fit
};

/// Runs the full analysis; an explicit count table replaces the shipped
/// binary fixture (the Gaussian side always uses the grades).
Report run(const std::optional<CountTable>& counts_override = std::nullopt);

std::string render_text(const Report& r);
json render_json(const Report& r);

} // namespace palin::casestudy

#endif
