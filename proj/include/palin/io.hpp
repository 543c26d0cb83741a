#ifndef PALIN_IO_HPP
#define PALIN_IO_HPP

#include <string>

#include "json.hpp"

#include "palin/gaussian.hpp"
#include "palin/generate.hpp"
#include "palin/graphs.hpp"
#include "palin/table.hpp"

// File formats.  Every table file carries the mandatory cell-order tag
// "lex-first-fastest"; files without it are rejected, so a table can never
// be silently read in a transposed order.
//
//   table:  {"d": 3, "order": "lex-first-fastest", "counts": [...]}
//           (or "probabilities", or "values" + "kind" for parameters)
//   graph:  {"d": 4, "edges": [[1,2],[1,3],[2,3],[3,4]]}
//   system: {"d": 3, "beta": [b21, b31, b32]}   (row-major lower triangle)
//   data:   CSV, one observation per row, optional header line

namespace palin {

inline constexpr const char* cell_order_tag = "lex-first-fastest";

using json = nlohmann::ordered_json;

struct TableFile {
    int d = 0;
    enum class Payload { counts, probabilities, parameters } payload = Payload::counts;
    ParamKind kind = ParamKind::log_linear; // meaningful for parameters only
    std::vector<double> cells;

    CountTable to_counts() const;
    ProbabilityTable to_probabilities() const; // lenient (zeros allowed)
    ParamVector to_params() const;
};

TableFile parse_table(const json& j);
TableFile read_table_file(const std::string& path);
json counts_to_json(const CountTable& c);
json probabilities_to_json(const ProbabilityTable& t);
json params_to_json_values(const ParamVector& p); // flat "values" layout

Graph parse_graph(const json& j);
Graph read_graph_file(const std::string& path);
json graph_to_json(const Graph& g);

TriangularSystem parse_system(const json& j);
TriangularSystem read_system_file(const std::string& path);
json system_to_json(const TriangularSystem& s);

/// Parameter listing keyed by subset labels ("{}", "1", "12", ...).
json param_vector_to_json(const ParamVector& p);

DataMatrix read_csv(const std::string& path);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

ParamKind param_kind_from_string(const std::string& s);

} // namespace palin

#endif
