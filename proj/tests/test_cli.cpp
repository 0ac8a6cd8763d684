#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zsum/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::vector<const char*> argv = {"zsum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = zsum::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("gen then verify round trip") {
    auto gen = run_cli({"gen", "--kind", "wide-range", "--n", "7", "--a", "3"});
    REQUIRE(gen.code == 0);

    // byte-identical re-serialization
    auto parsed = nlohmann::json::parse(gen.out);
    CHECK(parsed.dump() + "\n" == gen.out);
    CHECK(parsed["n"] == 7);
    CHECK(parsed["r"] == 2);
    CHECK(parsed["weights"].size() == 21);

    auto verify = run_cli({"verify", "--m", "4"}, gen.out);
    REQUIRE(verify.code == 0);
    auto cert = nlohmann::json::parse(verify.out);
    CHECK(cert["kind"] == "NONE_EXISTS");
    CHECK(cert["m"] == 4);
    CHECK(cert["witness"].is_null());
}

TEST_CASE("verify reports a witness") {
    auto gen = run_cli({"gen", "--kind", "clique-neg", "--n", "21", "--a", "15"});
    REQUIRE(gen.code == 0);
    auto verify = run_cli({"verify", "--m", "4"}, gen.out);
    REQUIRE(verify.code == 0);
    auto cert = nlohmann::json::parse(verify.out);
    CHECK(cert["kind"] == "ZERO_SUM_WITNESS");
    CHECK(cert["witness"] == nlohmann::json::array({0, 1, 2, 15}));
}

TEST_CASE("gen validates its arguments") {
    CHECK(run_cli({"gen", "--kind", "clique-neg", "--n", "4"}).code == 1); // missing --a
    CHECK(run_cli({"gen", "--kind", "extremal-k4", "--n", "6", "--j", "k1"}).code == 1);
    CHECK(run_cli({"gen", "--kind", "nonsense", "--n", "4", "--a", "2"}).code == 1);
    CHECK(run_cli({"gen", "--n", "4"}).code == 1); // missing --kind

    auto ok = run_cli({"gen", "--kind", "extremal-k4", "--n", "5", "--j", "k1"});
    CHECK(ok.code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["r"] == 1);
}

TEST_CASE("verify rejects malformed JSON") {
    CHECK(run_cli({"verify", "--m", "4"}, "this is not json").code == 1);
    CHECK(run_cli({"verify", "--m", "4"}, "{\"n\": 4, \"r\": 1}").code == 1);
    // weights inconsistent with n
    CHECK(run_cli({"verify", "--m", "2"}, "{\"n\": 4, \"r\": 1, \"weights\": [1, 1]}").code == 1);
}

TEST_CASE("pell streams") {
    auto res = run_cli({"pell", "--family", "bal-clique", "--count", "3"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["family"] == "bal-clique");
    REQUIRE(j["solutions"].size() == 3);
    CHECK(j["solutions"][0]["x"] == "1");
    CHECK(j["solutions"][0]["y"] == "1");
    CHECK(j["solutions"][1]["x"] == "3");
    CHECK(j["solutions"][1]["y"] == "7");
    CHECK(j["solutions"][2]["x"] == "15");
    CHECK(j["solutions"][2]["y"] == "41");

    auto neg = run_cli({"pell", "--family", "neg-pell", "--count", "4"});
    REQUIRE(neg.code == 0);
    auto jn = nlohmann::json::parse(neg.out);
    CHECK(jn["solutions"][3]["x"] == "169");
    CHECK(jn["solutions"][3]["y"] == "239");

    CHECK(run_cli({"pell", "--family", "neg-pell", "--count", "0"}).code == 1);
}

TEST_CASE("threshold audit command") {
    auto res = run_cli({"threshold", "--n", "5"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["violation_count"] == 0);
    CHECK(j["violations"].empty());
    CHECK(j["statistics"]["sharpness_witnesses_e1"] == 15);

    // the 2^28 sweep needs an explicit opt-in
    CHECK(run_cli({"threshold", "--n", "8"}).code == 3);
    // out-of-range n is refused
    CHECK(run_cli({"threshold", "--n", "4"}).code == 3);
}

TEST_CASE("audit output is independent of the worker count") {
    auto one = run_cli({"--parallelism", "1", "threshold", "--n", "6"});
    auto two = run_cli({"--parallelism", "2", "threshold", "--n", "6"});
    REQUIRE(one.code == 0);
    REQUIRE(two.code == 0);
    CHECK(one.out == two.out);

    auto e1 = run_cli({"--parallelism", "1", "extremal", "--n", "5"});
    auto e4 = run_cli({"--parallelism", "4", "extremal", "--n", "5"});
    CHECK(e1.out == e4.out);
}

TEST_CASE("extremal audit command") {
    auto res = run_cli({"extremal", "--n", "6"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["violation_count"] == 0);
    CHECK(j["statistics"]["zero_sum_k4_free_supports"] == 45);
}

TEST_CASE("balanced audit command") {
    auto res = run_cli({"balanced", "--kind", "bipartition", "--n", "9", "--m-max", "8"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["violation_count"] == 0);
    CHECK(j["budget_exceeded"] == false);

    CHECK(run_cli({"balanced", "--kind", "bipartition", "--n", "8", "--m-max", "4"}).code == 1);
}

TEST_CASE("intersect command") {
    auto res = run_cli({"intersect", "--limit", "1000000"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["intersection"] == nlohmann::json::array({"1", "4"}));
    CHECK(j["violation_count"] == 0);

    CHECK(run_cli({"intersect", "--limit", "xyz"}).code == 1);
}

TEST_CASE("pretty goes to stderr, JSON stays on stdout") {
    auto res = run_cli({"--pretty", "threshold", "--n", "5"});
    REQUIRE(res.code == 0);
    CHECK(res.err.find("scanned 1024, violations 0") != std::string::npos);
    CHECK(nlohmann::json::parse(res.out).is_object()); // stdout parses on its own
    CHECK(res.out.find('\n') == res.out.size() - 1);   // exactly one JSON line
}

TEST_CASE("file input and output paths") {
    std::string dir = std::filesystem::temp_directory_path().string();
    std::string wfile = dir + "/zsum_test_weighting.json";
    std::string cfile = dir + "/zsum_test_cert.json";

    auto gen = run_cli({"--output", wfile, "gen", "--kind", "clique-neg", "--n", "5", "--a", "3"});
    REQUIRE(gen.code == 0);
    CHECK(gen.out.empty());

    auto verify = run_cli({"--output", cfile, "verify", "--m", "4", "--input", wfile});
    REQUIRE(verify.code == 0);
    std::ifstream in(cfile);
    auto cert = nlohmann::json::parse(in);
    CHECK(cert["kind"] == "ZERO_SUM_WITNESS");

    std::filesystem::remove(wfile);
    std::filesystem::remove(cfile);

    CHECK(run_cli({"verify", "--m", "4", "--input", dir + "/zsum_does_not_exist.json"}).code == 1);
}

TEST_CASE("no subcommand is an input error") {
    CHECK(run_cli({}).code == 1);
}
