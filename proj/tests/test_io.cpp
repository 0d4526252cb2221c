#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hgm/errors.hpp"
#include "hgm/io.hpp"
#include "hgm/random.hpp"
#include "hgm/runner.hpp"

using namespace hgm;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / (std::string("hgm_test_") + name)).string();
}

}  // namespace

TEST_CASE("matrix round trip is exact") {
    Rng rng(17);
    const auto a = random_matrix(rng, 6, 0.7);
    const auto path = temp_path("roundtrip.json");
    write_matrix(a, path);
    CHECK(load_matrix(path) == a);
    std::remove(path.c_str());
}

TEST_CASE("malformed matrix files") {
    CHECK(parse_matrix(R"({"n": 2, "data": [[1, 2], [3, 4]]})").n() == 2);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "data": [[1, -2], [3, 4]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 3, "data": [[1, 2], [3, 4], [5, 6]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "data": [[1, 2], [3, 4]])"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 3, "data": [[1, 2], [3, 4]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"data": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "data": [["x"]]})"), ParseError);
    CHECK_THROWS_AS(load_matrix("/nonexistent/file.json"), ParseError);
}

TEST_CASE("report JSON shape and stability") {
    SweepConfig c;
    c.trials = 3;
    c.seed = 5;
    const auto run = run_suite("cor35", c);
    const auto text = to_json(run);
    CHECK(text == to_json(run_suite("cor35", c)));
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["suite"] == "cor35");
    CHECK(doc["trials"].size() == 3);
    CHECK(doc["summary"]["pass"] == 3);
    CHECK(doc["summary"]["fail"] == 0);
    const auto& t0 = doc["trials"][0];
    CHECK(t0["digest"]["seed"].is_number_unsigned());
    CHECK(t0["quantities"][0].size() == 2);
    CHECK(t0["verdicts"][0].size() == 4);
    CHECK(t0["verdicts"][0][2].is_boolean());

    // 17 significant digits reproduce every double.
    const double v = t0["quantities"][0][1].get<double>();
    CHECK(v == run.trials[0].quantities[0].value);

    const auto all = nlohmann::json::parse(to_json(std::vector<SuiteRun>{run, run}));
    CHECK(all.is_array());
    CHECK(all.size() == 2);
}

TEST_CASE("csv report") {
    SweepConfig c;
    c.trials = 2;
    const auto csv = to_csv({run_suite("thm31", c)});
    CHECK(csv.rfind("suite,trial,left,right,pass,slack,left_value,right_value\n", 0) == 0);
    CHECK(csv.find("thm31,1,rho(B_1...B_m),rho(A_1...A_m),true,") != std::string::npos);
    CHECK_THROWS_AS(parse_report_format("xml"), ConfigError);
}
