// Exercises the CLI binary end to end via popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "json.hpp"

#ifndef PALIN_CLI_PATH
#define PALIN_CLI_PATH "palin"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PALIN_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

const char* reference_table =
    R"({"d": 3, "order": "lex-first-fastest", "counts": [15, 9, 1, 15, 15, 1, 9, 15]})";
const char* casestudy_counts =
    R"({"d": 4, "order": "lex-first-fastest",
        "counts": [22, 3, 3, 0, 1, 0, 1, 9, 6, 2, 2, 1, 3, 2, 1, 22]})";
const char* casestudy_graph = R"({"d": 4, "edges": [[1,2],[1,3],[2,3],[3,4]]})";

} // namespace

TEST_CASE("cli transform") {
    write_file("cli_ref.json", reference_table);
    SUBCASE("moment parameters") {
        const RunResult r = run_cli("transform --input cli_ref.json --to xi");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["kind"] == "xi");
        CHECK(std::abs(j["values"]["12"].get<double>() - 0.5) <= 1e-12);
        CHECK(std::abs(j["values"]["13"].get<double>() + 0.2) <= 1e-12);
        CHECK(std::abs(j["values"]["23"].get<double>() - 0.2) <= 1e-12);
        CHECK(std::abs(j["values"]["1"].get<double>()) <= 1e-12);
    }
    SUBCASE("logistic parameters") {
        const RunResult r = run_cli("transform --input cli_ref.json --to eta");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["values"]["12"].get<double>() - 0.5493061443340549) <= 1e-9);
        CHECK(std::abs(j["values"]["13"].get<double>() + 0.2027325540540822) <= 1e-9);
    }
    SUBCASE("uniform to lambda is all zeros") {
        write_file("cli_uniform.json",
                   R"({"d":2,"order":"lex-first-fastest","counts":[5,5,5,5]})");
        const RunResult r = run_cli("transform --input cli_uniform.json --to lambda");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["values"]["1"].get<double>()) <= 1e-12);
        CHECK(std::abs(j["values"]["12"].get<double>()) <= 1e-12);
    }
    SUBCASE("parameter file back to probabilities") {
        write_file("cli_xi.json",
                   R"({"d":2,"order":"lex-first-fastest","kind":"xi","values":[1,0,0,0.5]})");
        const RunResult r = run_cli("transform --input cli_xi.json --to pi");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["probabilities"][0].get<double>() - 0.375) <= 1e-12);
        CHECK(j["order"] == "lex-first-fastest");
    }
}

TEST_CASE("cli fit") {
    write_file("cli_counts.json", casestudy_counts);
    write_file("cli_graph.json", casestudy_graph);
    SUBCASE("saturated") {
        const RunResult r = run_cli("fit --input cli_counts.json --graph saturated");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["wilks"]["total"].get<double>() - 9.123186708746896) <= 1e-9);
        CHECK(j["df"]["total"] == 8);
        CHECK(j["method"] == "decomposable");
    }
    SUBCASE("concentration graph, auto method") {
        const RunResult r = run_cli("fit --input cli_counts.json --graph cli_graph.json");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["wilks"]["total"].get<double>() - 10.358677423126213) <= 1e-9);
        CHECK(j["df"]["total"] == 11);
        CHECK(j["df"]["symmetry"] == 8);
        CHECK(j["df"]["independence"] == 3);
        CHECK(std::abs(j["studentized"]["12"].get<double>() - 2.5319977672) <= 1e-6);
        CHECK(j["order"] == "lex-first-fastest");
    }
    SUBCASE("ipf agrees") {
        const RunResult r =
            run_cli("fit --input cli_counts.json --graph cli_graph.json --method ipf");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["wilks"]["total"].get<double>() - 10.358677423126213) <= 1e-6);
        CHECK(j["method"] == "ipf");
    }
    SUBCASE("symmetric counts fit a complete graph perfectly") {
        write_file("cli_sym.json",
                   R"({"d":2,"order":"lex-first-fastest","counts":[4,2,2,4]})");
        const RunResult r = run_cli("fit --input cli_sym.json --graph saturated");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["wilks"]["total"].get<double>()) <= 1e-12);
    }
}

TEST_CASE("cli test subcommand") {
    write_file("cli_counts.json", casestudy_counts);
    const RunResult r = run_cli("test --input cli_counts.json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["w"].get<double>() - 9.123186708746896) <= 1e-9);
    CHECK(j["df"] == 8);
    CHECK(j["fitted_counts"][0] == 22.0);
}

TEST_CASE("cli dichotomize") {
    std::string csv = "a,b\n";
    for (int i = 0; i < 20; ++i)
        csv += std::to_string(i + 1) + "," + std::to_string((i * 7) % 20) + "\n";
    write_file("cli_data.csv", csv);
    const RunResult r1 = run_cli("dichotomize --input cli_data.csv --seed 3");
    const RunResult r2 = run_cli("dichotomize --input cli_data.csv --seed 3");
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    const auto j = nlohmann::json::parse(r1.out);
    CHECK(j["d"] == 2);
    CHECK(j["margins"][0][0] == 10.0);
    CHECK(j["margins"][0][1] == 10.0);
    double total = 0;
    for (const auto& x : j["counts"]) total += x.get<double>();
    CHECK(total == 20.0);
}

TEST_CASE("cli generate") {
    write_file("cli_sys.json", R"({"d": 2, "beta": [0.5]})");
    SUBCASE("exact") {
        const RunResult r = run_cli("generate --system cli_sys.json --exact");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(std::abs(j["probabilities"][0].get<double>() - 0.375) <= 1e-12);
        CHECK(std::abs(j["probabilities"][1].get<double>() - 0.125) <= 1e-12);
    }
    SUBCASE("sampling is reproducible") {
        const RunResult a = run_cli("generate --system cli_sys.json --n 1000 --seed 4");
        const RunResult b = run_cli("generate --system cli_sys.json --n 1000 --seed 4");
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
        const auto j = nlohmann::json::parse(a.out);
        double total = 0;
        for (const auto& x : j["counts"]) total += x.get<double>();
        CHECK(total == 1000.0);
    }
    SUBCASE("infeasible system exits 3") {
        write_file("cli_bad_sys.json", R"({"d": 2, "beta": [1.0]})");
        const RunResult r = run_cli("generate --system cli_bad_sys.json --exact");
        CHECK(r.exit_code == 3);
    }
}

TEST_CASE("cli casestudy") {
    const RunResult a = run_cli("casestudy");
    REQUIRE(a.exit_code == 0);
    const RunResult b = run_cli("casestudy");
    CHECK(a.out == b.out); // byte-identical reruns
    CHECK(a.out.find("w = 10.359 on 11 df") != std::string::npos);
    CHECK(a.out.find("w = 9.123 on 8 df") != std::string::npos);
    CHECK(a.out.find("rho_hat = 0.760") != std::string::npos);
    CHECK(a.out.find("= 0.72") != std::string::npos);

    // explicit counts equal the embedded fixture
    write_file("cli_counts.json", casestudy_counts);
    const RunResult c = run_cli("casestudy --counts cli_counts.json");
    CHECK(c.out == a.out);

    const RunResult j = run_cli("casestudy --json");
    REQUIRE(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(std::abs(parsed["predict_concordant"].get<double>() - 28.0 / 39.0) <= 1e-9);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("transform --input missing.json --to xi").exit_code == 2);
    write_file("cli_junk.json", "{not json");
    CHECK(run_cli("transform --input cli_junk.json --to xi").exit_code == 2);
    write_file("cli_noorder.json", R"({"d":1,"counts":[1,1]})");
    CHECK(run_cli("test --input cli_noorder.json").exit_code == 2);
    // infeasible moment vector: numerical error
    write_file("cli_badxi.json",
               R"({"d":2,"order":"lex-first-fastest","kind":"xi","values":[1,0.5,0,1]})");
    CHECK(run_cli("transform --input cli_badxi.json --to pi").exit_code == 3);
}
