#include "palin/casestudy.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "palin/params.hpp"

namespace palin::casestudy {

namespace {

// Grade sums per student, grouped in blocks of four subject rows
// (Analysis, Algebra, Geometry, Physics), 26 students per block.
constexpr int grade_rows[12][26] = {
    {78, 78, 74, 80, 88, 77, 79, 85, 82, 82, 74, 89, 85, 77, 93, 85, 79, 85, 74, 69, 78, 88, 67, 92, 85, 69},
    {76, 75, 71, 77, 81, 79, 77, 90, 79, 72, 62, 90, 75, 83, 92, 88, 80, 88, 68, 80, 75, 88, 70, 89, 88, 75},
    {82, 81, 74, 71, 85, 74, 81, 83, 73, 73, 71, 86, 84, 84, 93, 82, 78, 90, 70, 79, 71, 89, 68, 91, 91, 62},
    {85, 77, 80, 80, 79, 80, 75, 82, 71, 71, 72, 87, 82, 69, 90, 75, 75, 82, 70, 78, 72, 77, 69, 93, 87, 68},
    {79, 92, 76, 88, 73, 91, 76, 71, 65, 74, 80, 71, 78, 77, 70, 83, 89, 72, 82, 77, 91, 92, 75, 90, 90, 93},
    {78, 92, 78, 87, 68, 85, 78, 79, 68, 76, 89, 74, 81, 74, 68, 89, 81, 76, 81, 74, 92, 92, 69, 79, 82, 93},
    {71, 92, 84, 88, 64, 83, 82, 69, 71, 75, 80, 71, 85, 69, 67, 88, 83, 75, 83, 82, 93, 92, 72, 90, 89, 93},
    {79, 90, 86, 78, 69, 75, 82, 71, 63, 72, 78, 74, 81, 67, 66, 72, 82, 75, 79, 76, 92, 87, 75, 79, 78, 89},
    {92, 87, 81, 82, 76, 86, 92, 87, 79, 91, 88, 90, 90, 92, 89, 83, 77, 69, 89, 92, 86, 76, 68, 79, 76, 88},
    {93, 83, 69, 70, 75, 71, 80, 70, 70, 77, 88, 92, 85, 92, 84, 83, 82, 74, 83, 92, 74, 71, 62, 68, 66, 89},
    {93, 87, 74, 67, 80, 69, 87, 77, 69, 92, 83, 91, 82, 91, 86, 83, 80, 83, 83, 90, 78, 71, 65, 74, 83, 91},
    {89, 77, 81, 79, 84, 72, 80, 81, 70, 79, 77, 72, 88, 81, 86, 81, 78, 76, 77, 79, 73, 69, 69, 72, 80, 85},
};

constexpr double fixture_counts[16] = {22, 3, 3, 0, 1, 0, 1, 9, 6, 2, 2, 1, 3, 2, 1, 22};

std::string fmt(double v, int prec = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string join_counts(const std::vector<double>& v, int prec) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += fmt(v[i], prec);
    }
    return out;
}

} // namespace

const std::vector<std::string>& subjects() {
    static const std::vector<std::string> names{"Analysis", "Algebra", "Geometry", "Physics"};
    return names;
}

const DataMatrix& grades() {
    static const DataMatrix data = [] {
        std::vector<double> values;
        values.reserve(78 * 4);
        for (int block = 0; block < 3; ++block)
            for (int student = 0; student < 26; ++student)
                for (int subject = 0; subject < 4; ++subject)
                    values.push_back(grade_rows[4 * block + subject][student]);
        return DataMatrix::of(78, 4, std::move(values));
    }();
    return data;
}

const CountTable& dichotomized_counts() {
    static const CountTable counts =
        CountTable::of(4, std::vector<double>(fixture_counts, fixture_counts + 16));
    return counts;
}

Graph concentration_graph() {
    return Graph::of(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

Report run(const std::optional<CountTable>& counts_override) {
    Report r;
    const DataMatrix& data = grades();
    const Graph graph = concentration_graph();
    r.n = data.n;
    r.corr = corr_from_data(data);
    r.partial = partial_corr(r.corr);
    r.concentrations = concentration_diagonal(r.corr);
    r.gauss = fit_gaussian_decomposable(r.corr, graph, data.n);
    r.equi = fit_equicorrelation(r.corr, {1, 2, 3}, data.n);
    r.r_geometry_physics = r.corr.at(2, 3);
    {
        // correlation of the grade-1..3 sum score with physics
        std::vector<double> two;
        two.reserve(static_cast<std::size_t>(data.n) * 2);
        for (int i = 0; i < data.n; ++i) {
            two.push_back(data.at(i, 0) + data.at(i, 1) + data.at(i, 2));
            two.push_back(data.at(i, 3));
        }
        r.r_sumscore_physics =
            corr_from_data(DataMatrix::of(data.n, 2, std::move(two))).at(0, 1);
    }

    r.counts = counts_override.value_or(dichotomized_counts());
    if (r.counts.d != 4) throw input_error("case study needs a 2^4 count table");
    r.sym = symmetrize(r.counts);
    r.model = fit_decomposable(r.counts, graph);

    double below = 0.0, geo_below = 0.0;
    for (std::uint32_t k = 0; k < 16; ++k) {
        if ((k >> 2) & 1u) continue; // geometry above median
        geo_below += r.model.fitted.counts[k];
        if (!((k >> 3) & 1u)) below += r.model.fitted.counts[k];
    }
    r.predict_concordant = below / geo_below;
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    const auto& names = subjects();
    out << "Grades case study (n = " << r.n << ")\n\n";
    out << "Correlations (below diagonal), partial correlations (above), "
           "concentrations (diagonal):\n";
    for (int s = 0; s < 4; ++s) {
        out << "  " << s + 1 << " " << names[s];
        for (std::size_t pad = names[s].size(); pad < 9; ++pad) out << ' ';
        for (int t = 0; t < 4; ++t) {
            const double v = (s == t)   ? r.concentrations[s]
                             : (s > t)  ? r.corr.at(s, t)
                                        : r.partial.at(s, t);
            out << ' ' << fmt(v);
        }
        out << '\n';
    }
    out << "\nGaussian concentration-graph fit {12,13,23,34}: w = " << fmt(r.gauss.wilks)
        << " on " << r.gauss.df << " df\n";
    out << "  completed r14 = " << fmt(r.gauss.r_hat.at(0, 3))
        << ", r24 = " << fmt(r.gauss.r_hat.at(1, 3)) << '\n';
    out << "Equicorrelation fit for grades {1,2,3}: rho_hat = " << fmt(r.equi.rho_hat)
        << ", w = " << fmt(r.equi.wilks) << " on " << r.equi.df << " df\n";
    out << "r(Geometry, Physics) = " << fmt(r.r_geometry_physics)
        << "; r(sum score 1-3, Physics) = " << fmt(r.r_sumscore_physics) << "\n\n";

    out << "Median-dichotomized counts (order " << cell_order_tag << "):\n  "
        << join_counts(r.counts.counts, 0) << '\n';
    out << "Palindromic fit: w = " << fmt(r.sym.wilks) << " on " << r.sym.df << " df\n";
    out << "  symmetrized counts: " << join_counts(r.sym.fitted.counts, 1) << '\n';
    out << "Palindromic concentration-graph fit: w = " << fmt(r.model.wilks_total) << " on "
        << r.model.df_total << " df\n";
    out << "  decomposition: symmetry " << fmt(r.model.wilks_symmetry) << " ("
        << r.model.df_symmetry << " df) + independence " << fmt(r.model.wilks_independence)
        << " (" << r.model.df_independence << " df)\n";
    out << "  fitted counts: " << join_counts(r.model.fitted.counts, 1) << '\n';
    out << "  lambda_hat / studentized over free interactions:\n";
    for (std::size_t i = 0; i < r.model.free_subsets.size(); ++i)
        out << "    " << subset_label(r.model.free_subsets[i], 4) << ": "
            << fmt(r.model.lambda_hat.values[r.model.free_subsets[i]]) << " / "
            << fmt(r.model.studentized[i], 2) << '\n';
    out << "Prediction: P(Physics below median | Geometry below median) = "
        << fmt(r.predict_concordant, 2) << '\n';
    out << "            P(Physics above median | Geometry above median) = "
        << fmt(r.predict_concordant, 2) << '\n';
    return out.str();
}

json render_json(const Report& r) {
    json j;
    j["n"] = r.n;
    j["subjects"] = subjects();
    auto matrix = [](const CorrMatrix& m) {
        json rows = json::array();
        for (int s = 0; s < m.d; ++s) {
            json row = json::array();
            for (int t = 0; t < m.d; ++t) row.push_back(m.at(s, t));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["correlations"] = matrix(r.corr);
    j["partial_correlations"] = matrix(r.partial);
    j["concentrations"] = r.concentrations;
    j["gaussian_fit"] = {{"w", r.gauss.wilks},
                         {"df", r.gauss.df},
                         {"r_hat", matrix(r.gauss.r_hat)}};
    j["equicorrelation_fit"] = {{"rho_hat", r.equi.rho_hat},
                                {"w", r.equi.wilks},
                                {"df", r.equi.df}};
    j["r_geometry_physics"] = r.r_geometry_physics;
    j["r_sumscore_physics"] = r.r_sumscore_physics;

    j["counts"] = counts_to_json(r.counts);
    j["palindromic_fit"] = {{"w", r.sym.wilks},
                            {"df", r.sym.df},
                            {"fitted", r.sym.fitted.counts}};
    json lambda;
    for (std::size_t i = 0; i < r.model.free_subsets.size(); ++i)
        lambda[subset_label(r.model.free_subsets[i], 4)] =
            r.model.lambda_hat.values[r.model.free_subsets[i]];
    json stud;
    for (std::size_t i = 0; i < r.model.free_subsets.size(); ++i)
        stud[subset_label(r.model.free_subsets[i], 4)] = r.model.studentized[i];
    j["graph_fit"] = {{"graph", graph_to_json(concentration_graph())},
                      {"w_total", r.model.wilks_total},
                      {"df_total", r.model.df_total},
                      {"w_symmetry", r.model.wilks_symmetry},
                      {"df_symmetry", r.model.df_symmetry},
                      {"w_independence", r.model.wilks_independence},
                      {"df_independence", r.model.df_independence},
                      {"fitted", r.model.fitted.counts},
                      {"lambda_hat", std::move(lambda)},
                      {"studentized", std::move(stud)}};
    j["predict_concordant"] = r.predict_concordant;
    return j;
}

} // namespace palin::casestudy
