#include "chroma/errors.hpp"
#include "chroma_cli/cli.hpp"
#include "chroma_cli/json_io.hpp"
#include "corpus.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace chroma;
using namespace chroma::cli;

namespace {

std::string data_path(const std::string& name) { return std::string(CHROMA_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& name) {
    std::ifstream in(data_path(name));
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_on(const std::string& command, const std::string& file, const std::string& format = "json") {
    JobSpec job;
    job.command = command;
    job.format = format;
    return run_text(job, slurp(file));
}

json report(const RunResult& r) {
    REQUIRE(r.exit_code != 2);
    return json::parse(r.report);
}

}  // namespace

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("q") == corpus::S("q"));
    CHECK(parse_scalar("-1*q^-1") == Scalar::minus_one() * corpus::S("q^-1"));
    CHECK(parse_scalar("zeta(3,1)*q") == Scalar::zeta(3, 1) * corpus::S("q"));
    CHECK(parse_scalar("1").is_one());
    CHECK_THROWS_AS(parse_scalar("q*&"), ParseError);
}

TEST_CASE("datum JSON round trip") {
    for (const Datum& d : {corpus::nuestro(), corpus::c2xc2(), corpus::yamane()}) {
        Datum back = datum_from_json(datum_to_json(d));
        CHECK(back.q() == d.q());
        CHECK(back.t() == d.t());
        CHECK(back.beta() == d.beta());
        CHECK(datum_to_json(back).dump() == datum_to_json(d).dump());
    }
}

TEST_CASE("diagram JSON round trip") {
    for (bool r : {false, true}) {
        for (const Diagram& d : {corpus::nuestro_generalized(r), corpus::nuestro_colored(r)}) {
            Diagram back = diagram_from_json(diagram_to_json(d));
            CHECK(isomorphic(back, d));
            CHECK(diagram_to_json(back).dump() == diagram_to_json(d).dump());
        }
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (auto [cmd, file] : std::vector<std::pair<std::string, std::string>>{{"orbit", "nuestro.json"},
                                                                            {"check-extension", "matchedpair.json"},
                                                                            {"aut-ext", "forpro1.json"},
                                                                            {"check-double", "nuestro.json"},
                                                                            {"verify", "sweedler.json"}}) {
        RunResult a = run_on(cmd, file), b = run_on(cmd, file);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.report == b.report);
        CHECK(report(a)["schema"] == 1);
        CHECK(report(a)["command"] == cmd);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_on("verify", "kc2.json").exit_code == 0);
    CHECK(run_on("verify", "super_line_plain.json").exit_code == 1);
    CHECK(run_on("check-extension", "matchedpair_mutated.json").exit_code == 1);
    CHECK(run_on("triangular", "bad_bicharacter.json").exit_code == 2);
    JobSpec job;
    job.command = "orbit";
    CHECK(run_text(job, "{not json").exit_code == 2);
    CHECK(run_text(job, R"({"q": [["1"]], "group": {"orders": [1]}, "beta": [["0/1"]], "t": [[0]]})").exit_code == 2);
    job.command = "verify";
    job.format = "dot";
    CHECK(run_text(job, slurp("kc2.json")).exit_code == 2);
}

TEST_CASE("orbit of a rank-one datum") {
    json j = report(run_on("orbit", "rank1.json"));
    CHECK(j["nodes"].size() == 1);
    CHECK(j["truncated"] == false);
}

TEST_CASE("orbit of the C3 example") {
    json j = report(run_on("orbit", "nuestro.json"));
    CHECK(j["distinct_generalized"] == 2);
    CHECK(j["consistent_coloring"] == true);
}

TEST_CASE("text diagram of the C3 example") {
    RunResult r = run_on("diagram", "nuestro.json", "text");
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("generalized: ○^ω —q^-1— ○^q\n") != std::string::npos);
    CHECK(r.report.find("●^1 —q^-1— ○^q") != std::string::npos);
}

TEST_CASE("dot output parses back") {
    RunResult r = run_on("diagram", "rank1.json", "dot");
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("graph generalized {") != std::string::npos);
}

TEST_CASE("color matched pair from a file") {
    json j = report(run_on("check-extension", "matchedpair.json"));
    CHECK(j["is_color"] == true);
    CHECK(j["action"]["agrees"] == true);
}

TEST_CASE("graded extension from ring data") {
    RunResult r = run_on("check-extension", "sommer_z3.json");
    CHECK(r.exit_code == 0);
    json j = report(r);
    CHECK(j["graded"]["holds"] == true);
    CHECK(j["graded"]["agrees"] == true);
}

TEST_CASE("extension automorphisms from a file") {
    json j = report(run_on("aut-ext", "forpro.json"));
    CHECK(j["all_certified"] == true);
    CHECK(j["solution_count"].get<long long>() >= 6);
    JobSpec job;
    job.command = "aut-ext";
    job.root_bound = 3;
    json k = json::parse(run_text(job, slurp("forpro.json")).report);
    CHECK(k["bound_too_small"] == true);
}

TEST_CASE("double of the C3 example") {
    json j = report(run_on("check-double", "nuestro.json"));
    CHECK(j["retraction_count"] == 9);
    CHECK(j["color_retraction_count"] == 1);
}

TEST_CASE("triangular reduction from a file") {
    RunResult r = run_on("triangular", "triangular.json");
    CHECK(r.exit_code == 0);
    CHECK(report(r)["gamma_prime_valid"] == true);
}
