#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "clifford/cli.hpp"
#include "golden_cases.hpp"

using namespace clifford;
using nlohmann::json;

namespace {

void check_golden(const std::string& file, const std::string& actual) {
    const std::string path = std::string(GOLDEN_DIR) + "/" + file;
    if (std::getenv("UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path) << actual;
        return;
    }
    INFO("golden file " << path);
    CHECK(testing::read_golden(file) == actual);
}

} // namespace

TEST_CASE("golden text and json reports") {
    for (const testing::GoldenCase& c : testing::golden_cases()) {
        const cli::Outcome text = cli::run(c.args);
        INFO(c.name << ": " << text.err);
        REQUIRE(text.exit_code == 0);
        check_golden(std::string(c.name) + ".txt", text.out);

        std::vector<std::string> args = c.args;
        args.insert(args.begin(), "--json");
        const cli::Outcome machine = cli::run(args);
        REQUIRE(machine.exit_code == 0);
        check_golden(std::string(c.name) + ".json", testing::stable_json(machine.out));
    }
}

TEST_CASE("json schema and round trip") {
    const cli::Outcome out = cli::run({"-s", "+-0", "--json", "primes"});
    REQUIRE(out.exit_code == 0);
    const json j = json::parse(out.out);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"command", "elapsed_ms", "result", "signature"});
    CHECK(j["result"]["primes"].size() == 1);
    CHECK(j["result"]["primes"][0]["dim"] == 4);
    CHECK(j["signature"]["relabel"] == json{0, 1, 2});

    const cli::Report report = cli::report_from_json(j);
    CHECK(cli::to_json(report) == j);
    CHECK(cli::report_from_json(cli::to_json(report)) == report);
}

TEST_CASE("verbs dispatch to the library") {
    auto json_of = [](std::vector<std::string> args) {
        args.push_back("--json");
        const cli::Outcome out = cli::run(args);
        REQUIRE(out.exit_code == 0);
        return json::parse(out.out)["result"];
    };
    const json info = json_of({"-s", "1,0,0", "signature-info"});
    CHECK(info["class"] == "Split");
    CHECK(info["idempotents"] == json{"1/2 + 1/2*e0", "1/2 - 1/2*e0"});
    CHECK(json_of({"-s", "1,1,1", "eval", "(1+e2)*(1-e2)"})["value"] == "1");
    const json chains = json_of({"-s", "0,0,3", "chains", "--k", "3"});
    CHECK(chains["descending"][2]["dim"] == 1);
    CHECK(chains["ascending"][2]["dim"] == 7);
    CHECK_FALSE(json_of({"-s", "0,0,3", "chains", "--k", "2", "--ascending"}).contains("descending"));
    CHECK(json_of({"-s", "1,1,0", "nilpotency", "--gens", "1"})["index"].is_null());
}

TEST_CASE("errors become exit codes") {
    CHECK(cli::run({"-s", "1,1", "primes"}).exit_code == 2);
    CHECK(cli::run({"primes"}).exit_code == 2);
    CHECK(cli::run({"-s", "1,1,1", "frobnicate"}).exit_code == 2);
    CHECK(cli::run({"-s", "1,1,1", "chains", "--k", "2"}).exit_code == 1);
    CHECK(cli::run({"-s", "1,1,1", "support", "--gens", "1 + e2"}).exit_code == 1);
    const cli::Outcome parse = cli::run({"-s", "1,1,1", "eval", "e0e1"});
    CHECK(parse.exit_code == 1);
    CHECK(parse.err.find("position 2") != std::string::npos);
    CHECK(cli::run({"-s", "1,1,1", "eval", "e9"}).exit_code == 1);
    CHECK(cli::run({"-s", "1,1,1", "ideal", "classify", "--gens", ";"}).exit_code == 1);
    CHECK(cli::run({"--help"}).exit_code == 0);
}
