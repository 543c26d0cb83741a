// Command-line front end: parameter transforms, palindromic and graphical
// model fits, median dichotomization, triangular-system generation, and the
// bundled grades case study.
//
// Exit codes: 0 success, 2 input error, 3 numerical/infeasibility error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "palin/casestudy.hpp"
#include "palin/fit.hpp"
#include "palin/io.hpp"
#include "palin/params.hpp"

namespace {

using palin::json;

void emit(const json& j, const std::string& output_path) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        palin::write_text_file(output_path, text);
}

palin::ProbabilityTable table_as_probabilities(const palin::TableFile& tf,
                                               const std::string& from) {
    if (tf.payload == palin::TableFile::Payload::parameters) {
        const palin::ParamVector p = tf.to_params();
        if (!from.empty() && palin::param_kind_from_string(from) != p.kind)
            throw palin::input_error("--from disagrees with the file's parameter kind");
        switch (p.kind) {
            case palin::ParamKind::log_linear: return palin::pi_from_lambda(p);
            case palin::ParamKind::moment: return palin::pi_from_xi(p);
            case palin::ParamKind::mv_logistic: return palin::pi_from_eta(p);
        }
    }
    if (!from.empty() && from != "pi" && from != "counts" && from != "probabilities")
        throw palin::input_error("--from " + from + " needs a parameter file with 'values'");
    return tf.to_probabilities();
}

int cmd_transform(const std::string& input, const std::string& from, const std::string& to,
                  const std::string& output) {
    const palin::TableFile tf = palin::read_table_file(input);
    const palin::ProbabilityTable t = table_as_probabilities(tf, from);
    json j;
    if (to == "pi" || to == "probabilities") {
        j = palin::probabilities_to_json(t);
    } else {
        switch (palin::param_kind_from_string(to)) {
            case palin::ParamKind::log_linear:
                j = palin::param_vector_to_json(palin::lambda_from_pi(t));
                break;
            case palin::ParamKind::moment:
                j = palin::param_vector_to_json(palin::xi_from_pi(t));
                break;
            case palin::ParamKind::mv_logistic:
                j = palin::param_vector_to_json(palin::eta_from_pi(t));
                break;
        }
    }
    emit(j, output);
    return 0;
}

json fit_report(const palin::CountTable& counts, const palin::ModelFit& fit,
                const palin::Graph& graph, const std::string& method) {
    json j;
    j["d"] = counts.d;
    j["order"] = palin::cell_order_tag;
    j["n"] = counts.total;
    j["graph"] = palin::graph_to_json(graph);
    j["method"] = method;
    j["fitted_counts"] = fit.fitted.counts;
    j["wilks"] = {{"symmetry", fit.wilks_symmetry},
                  {"independence", fit.wilks_independence},
                  {"total", fit.wilks_total}};
    j["df"] = {{"symmetry", fit.df_symmetry},
               {"independence", fit.df_independence},
               {"total", fit.df_total}};
    json lambda, se, stud;
    for (std::size_t i = 0; i < fit.free_subsets.size(); ++i) {
        const std::string key = palin::subset_label(fit.free_subsets[i], counts.d);
        if (!fit.lambda_hat.values.empty())
            lambda[key] = fit.lambda_hat.values[fit.free_subsets[i]];
        if (!fit.se_lambda.empty()) se[key] = fit.se_lambda[i];
        if (!fit.studentized.empty()) stud[key] = fit.studentized[i];
    }
    j["lambda_hat"] = std::move(lambda);
    j["se_lambda"] = std::move(se);
    j["studentized"] = std::move(stud);
    return j;
}

int cmd_fit(const std::string& input, const std::string& graph_arg,
            const std::string& method, double tol, const std::string& output) {
    const palin::CountTable counts = palin::read_table_file(input).to_counts();
    const palin::Graph graph = (graph_arg.empty() || graph_arg == "saturated")
                                   ? palin::Graph::complete(counts.d)
                                   : palin::read_graph_file(graph_arg);
    const bool chordal = palin::decompose(graph).has_value();
    std::string used = method;
    if (method == "auto") used = chordal ? "decomposable" : "ipf";
    palin::ModelFit fit;
    if (used == "decomposable") {
        fit = palin::fit_decomposable(counts, graph);
    } else if (used == "ipf") {
        palin::IpfOptions opts;
        if (tol > 0.0) opts.tol = tol;
        fit = palin::fit_ipf(counts, graph, opts);
    } else {
        throw palin::input_error("unknown fit method '" + method + "'");
    }
    emit(fit_report(counts, fit, graph, used), output);
    return 0;
}

int cmd_test(const std::string& input, const std::string& output) {
    const palin::CountTable counts = palin::read_table_file(input).to_counts();
    const palin::PalindromicFit fit = palin::symmetrize(counts);
    json j;
    j["d"] = counts.d;
    j["order"] = palin::cell_order_tag;
    j["n"] = counts.total;
    j["w"] = fit.wilks;
    j["df"] = fit.df;
    j["fitted_counts"] = fit.fitted.counts;
    j["xi_hat"] = palin::param_vector_to_json(fit.xi_hat)["values"];
    emit(j, output);
    return 0;
}

int cmd_dichotomize(const std::string& input, std::uint64_t seed, const std::string& output) {
    const palin::DataMatrix data = palin::read_csv(input);
    const palin::CountTable counts = palin::median_dichotomize(data, seed);
    json j = palin::counts_to_json(counts);
    j["seed"] = seed;
    json margins = json::array();
    for (int v = 0; v < counts.d; ++v) {
        double ones = 0.0;
        for (std::uint32_t k = 0; k < counts.counts.size(); ++k)
            if ((k >> v) & 1u) ones += counts.counts[k];
        margins.push_back({counts.total - ones, ones});
    }
    j["margins"] = std::move(margins);
    const palin::PalindromicFit sym = palin::symmetrize(counts);
    json xi;
    for (int s = 1; s <= counts.d; ++s)
        for (int t = s + 1; t <= counts.d; ++t) {
            const std::uint32_t b = palin::mask_from_vars({s, t}, counts.d);
            xi[palin::subset_label(b, counts.d)] = sym.xi_hat.values[b];
        }
    j["xi_hat_pairs"] = std::move(xi);
    emit(j, output);
    return 0;
}

int cmd_generate(const std::string& system_path, bool exact, std::int64_t n,
                 std::uint64_t seed, const std::string& output) {
    const palin::TriangularSystem sys = palin::read_system_file(system_path);
    if (exact) {
        emit(palin::probabilities_to_json(palin::exact_table(sys)), output);
    } else {
        json j = palin::counts_to_json(palin::sample(sys, n, seed));
        j["seed"] = seed;
        emit(j, output);
    }
    return 0;
}

int cmd_casestudy(bool as_json, const std::string& counts_path, const std::string& output) {
    std::optional<palin::CountTable> override_counts;
    if (!counts_path.empty())
        override_counts = palin::read_table_file(counts_path).to_counts();
    const palin::casestudy::Report report = palin::casestudy::run(override_counts);
    if (as_json) {
        emit(palin::casestudy::render_json(report), output);
    } else {
        const std::string text = palin::casestudy::render_text(report);
        if (output.empty())
            std::cout << text;
        else
            palin::write_text_file(output, text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"palin: palindromic joint Bernoulli distributions"};
    app.require_subcommand(1);

    std::string input, output, graph_arg, from, to, method = "auto", counts_path, system_path;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    bool exact = false, as_json = false;

    auto* transform = app.add_subcommand("transform", "convert a table between parameterizations");
    transform->add_option("--input", input, "table file (JSON)")->required();
    transform->add_option("--to", to, "target: lambda|xi|eta|pi")->required();
    transform->add_option("--from", from, "source kind (default: inferred from the file)");
    transform->add_option("--output", output, "write to file instead of stdout");

    auto* fit = app.add_subcommand("fit", "fit a palindromic concentration-graph model");
    fit->add_option("--input", input, "count table file (JSON)")->required();
    fit->add_option("--graph", graph_arg, "graph file or 'saturated'");
    fit->add_option("--method", method, "auto|decomposable|ipf")->default_str("auto");
    fit->add_option("--tol", tol, "IPF marginal tolerance");
    fit->add_option("--output", output, "write to file instead of stdout");

    auto* test = app.add_subcommand("test", "Wilks test of the palindromic hypothesis");
    test->add_option("--input", input, "count table file (JSON)")->required();
    test->add_option("--output", output, "write to file instead of stdout");

    auto* dich = app.add_subcommand("dichotomize", "median-split CSV data into a count table");
    dich->add_option("--input", input, "CSV data file")->required();
    dich->add_option("--seed", seed, "jitter seed")->default_val(0);
    dich->add_option("--output", output, "write to file instead of stdout");

    auto* gen = app.add_subcommand("generate", "table from a linear triangular system");
    gen->add_option("--system", system_path, "system file (JSON)")->required();
    gen->add_flag("--exact", exact, "exact probabilities instead of sampling");
    gen->add_option("--n", n, "number of draws when sampling");
    gen->add_option("--seed", seed, "sampler seed")->default_val(0);
    gen->add_option("--output", output, "write to file instead of stdout");

    auto* cs = app.add_subcommand("casestudy", "run the bundled grades case study");
    cs->add_flag("--json", as_json, "JSON report instead of text");
    cs->add_option("--counts", counts_path, "replace the bundled binary count fixture");
    cs->add_option("--output", output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (transform->parsed()) return cmd_transform(input, from, to, output);
        if (fit->parsed()) return cmd_fit(input, graph_arg, method, tol, output);
        if (test->parsed()) return cmd_test(input, output);
        if (dich->parsed()) return cmd_dichotomize(input, seed, output);
        if (gen->parsed()) {
            if (!exact && n <= 0)
                throw palin::input_error("generate: pass --exact or a positive --n");
            return cmd_generate(system_path, exact, n, seed, output);
        }
        if (cs->parsed()) return cmd_casestudy(as_json, counts_path, output);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const palin::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const palin::numeric_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
