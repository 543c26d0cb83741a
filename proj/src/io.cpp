#include "palin/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "palin/errors.hpp"

namespace palin {

namespace {

std::vector<double> number_array(const json& j, const char* field, std::size_t expected) {
    if (!j.contains(field) || !j[field].is_array())
        throw input_error(std::string("table file: missing array field '") + field + "'");
    std::vector<double> out;
    out.reserve(j[field].size());
    for (const auto& x : j[field]) {
        if (!x.is_number()) throw input_error(std::string(field) + " must contain numbers");
        out.push_back(x.get<double>());
    }
    if (out.size() != expected)
        throw input_error(std::string(field) + ": expected " + std::to_string(expected) +
                          " entries, got " + std::to_string(out.size()));
    return out;
}

int read_dim(const json& j) {
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw input_error("file is missing the integer field 'd'");
    return checked_dim(j["d"].get<int>());
}

void check_order_tag(const json& j) {
    if (!j.contains("order") || !j["order"].is_string())
        throw input_error("table file must carry the cell-order tag 'order'");
    if (j["order"].get<std::string>() != cell_order_tag)
        throw input_error("unsupported cell order '" + j["order"].get<std::string>() +
                          "' (expected " + std::string(cell_order_tag) + ")");
}

} // namespace

ParamKind param_kind_from_string(const std::string& s) {
    if (s == "lambda" || s == "log-linear") return ParamKind::log_linear;
    if (s == "xi" || s == "moment") return ParamKind::moment;
    if (s == "eta" || s == "logistic") return ParamKind::mv_logistic;
    throw input_error("unknown parameter kind '" + s + "'");
}

CountTable TableFile::to_counts() const {
    if (payload == Payload::parameters)
        throw input_error("expected a counts table, got a parameter file");
    return CountTable::of(d, cells);
}

ProbabilityTable TableFile::to_probabilities() const {
    if (payload == Payload::parameters)
        throw input_error("expected a table of cells, got a parameter file");
    return ProbabilityTable::fitted(d, cells);
}

ParamVector TableFile::to_params() const {
    if (payload != Payload::parameters)
        throw input_error("expected a parameter file with a 'values' array");
    return ParamVector{d, kind, cells};
}

TableFile parse_table(const json& j) {
    TableFile out;
    out.d = read_dim(j);
    check_order_tag(j);
    const std::size_t n = cell_count(out.d);
    const int have = j.contains("counts") + j.contains("probabilities") + j.contains("values");
    if (have != 1)
        throw input_error("table file needs exactly one of counts/probabilities/values");
    if (j.contains("counts")) {
        out.payload = TableFile::Payload::counts;
        out.cells = number_array(j, "counts", n);
    } else if (j.contains("probabilities")) {
        out.payload = TableFile::Payload::probabilities;
        out.cells = number_array(j, "probabilities", n);
    } else {
        out.payload = TableFile::Payload::parameters;
        if (!j.contains("kind") || !j["kind"].is_string())
            throw input_error("parameter file needs a string field 'kind'");
        out.kind = param_kind_from_string(j["kind"].get<std::string>());
        out.cells = number_array(j, "values", n);
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

TableFile read_table_file(const std::string& path) { return parse_table(read_json_file(path)); }

json counts_to_json(const CountTable& c) {
    json j;
    j["d"] = c.d;
    j["order"] = cell_order_tag;
    j["counts"] = c.counts;
    return j;
}

json probabilities_to_json(const ProbabilityTable& t) {
    json j;
    j["d"] = t.d;
    j["order"] = cell_order_tag;
    j["probabilities"] = t.pi;
    return j;
}

json params_to_json_values(const ParamVector& p) {
    json j;
    j["d"] = p.d;
    j["order"] = cell_order_tag;
    j["kind"] = to_string(p.kind);
    j["values"] = p.values;
    return j;
}

Graph parse_graph(const json& j) {
    const int d = read_dim(j);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw input_error("graph file needs an 'edges' array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("graph edges must be [i, j] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::of(d, edges);
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_json_file(path)); }

json graph_to_json(const Graph& g) {
    json j;
    j["d"] = g.d;
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

TriangularSystem parse_system(const json& j) {
    const int d = read_dim(j);
    return TriangularSystem::of(
        d, number_array(j, "beta", static_cast<std::size_t>(d) * (d - 1) / 2));
}

TriangularSystem read_system_file(const std::string& path) {
    return parse_system(read_json_file(path));
}

json system_to_json(const TriangularSystem& s) {
    json j;
    j["d"] = s.d;
    j["beta"] = s.beta;
    return j;
}

json param_vector_to_json(const ParamVector& p) {
    json j;
    j["d"] = p.d;
    j["kind"] = to_string(p.kind);
    j["order"] = cell_order_tag;
    json values;
    for (std::uint32_t b = 0; b < p.values.size(); ++b)
        values[subset_label(b, p.d)] = p.values[b];
    j["values"] = std::move(values);
    return j;
}

DataMatrix read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::vector<double> values;
    int cols = -1, rows = 0, lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        // strip whitespace-only lines
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
        if (blank) continue;

        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        bool numeric = true;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                while (used < field.size() &&
                       std::isspace(static_cast<unsigned char>(field[used])))
                    ++used;
                if (used != field.size()) { numeric = false; break; }
                row.push_back(v);
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (rows == 0 && cols < 0) continue; // header line
            throw input_error("csv line " + std::to_string(lineno) + ": not a number");
        }
        if (cols < 0) cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols)
            throw input_error("csv line " + std::to_string(lineno) + ": expected " +
                              std::to_string(cols) + " columns, got " +
                              std::to_string(row.size()));
        values.insert(values.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0 || cols <= 0) throw input_error("csv file " + path + " has no data");
    return DataMatrix::of(rows, cols, std::move(values));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

} // namespace palin
