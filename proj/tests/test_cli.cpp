#include <doctest.h>

#include <algorithm>
#include <regex>
#include <sstream>

#include "qsync/cli.hpp"
#include "qsync/errors.hpp"

using namespace qsync;
using namespace qsync::cli;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output run_config(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(Command command, std::uint64_t q, std::uint64_t r = 0, bool json = true) {
    RunConfig cfg;
    cfg.command = command;
    cfg.q = q;
    cfg.r = r;
    cfg.json = json;
    return cfg;
}

std::multiset<std::string> numbers(const std::string& text) {
    std::multiset<std::string> out;
    const std::regex number("[0-9]+");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
        out.insert(it->str());
    return out;
}

std::string strip_indices(const std::string& table) {
    return std::regex_replace(table, std::regex(R"(\[[0-9]+\]:)"), "");
}

}  // namespace

TEST_CASE("commands parse by name") {
    CHECK(parse_command("classes") == Command::Classes);
    CHECK(parse_command("regress") == Command::Regress);
    CHECK_THROWS_AS(parse_command("bogus"), InvalidArgument);
}

TEST_CASE("residue lists") {
    CHECK(parse_residue_list("") == std::set<Residue>{});
    CHECK(parse_residue_list("1,2,5") == std::set<Residue>{1, 2, 5});
    CHECK(parse_residue_list("10") == std::set<Residue>{10});
    for (auto bad : {"1,,2", "a", "1,-2", ",", "1,2,", "1 2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_residue_list(bad), InvalidArgument);
    }
}

TEST_CASE("classes for q = 13") {
    const auto j = report(config(Command::Classes, 13));
    CHECK(j["D0"] == nlohmann::json({1, 23, 9, 25, 3, 17}));
    CHECK(j["D1"] == nlohmann::json({7, 5, 11, 19, 21, 15}));
    CHECK(j["E0"] == nlohmann::json({2, 20, 18, 24, 6, 8}));
    CHECK(j["E1"] == nlohmann::json({14, 10, 22, 12, 16, 4}));
    const Output table = run_config(config(Command::Classes, 13, 0, false));
    CHECK(table.code == kExitOk);
    CHECK(table.out.find("D0: {1,23,9,25,3,17}") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_config(config(Command::Cosets, 13, 3)).code == kExitOk);
    const Output bad = run_config(config(Command::Cosets, 12, 5));
    CHECK(bad.code == kExitInvalidArgument);
    CHECK(bad.out.empty());
    CHECK(bad.err.rfind("error: invalid-argument: ", 0) == 0);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

    RunConfig over = config(Command::Chain, 19, 11);
    over.classes = "D0E0";
    over.inner_remove = {1, 2, 5, 9, 10};
    over.outer_remove = {2, 5, 9, 10};
    CHECK(run_config(over).code == kExitInvalidArgument);

    RunConfig missing = config(Command::Code, 11, 3);
    CHECK(run_config(missing).code == kExitInvalidArgument);
}

TEST_CASE("chain report for q = 19, r = 11") {
    RunConfig cfg = config(Command::Chain, 19, 11);
    cfg.classes = "D0E0";
    cfg.inner_remove = {2, 5, 9, 10};
    cfg.outer_remove = {1, 2, 5, 9, 10};
    const Output o = run_config(cfg);
    REQUIRE(o.code == kExitOk);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["tolerance"] == 38);
    CHECK(j["qsc"]["dim"] == 26);
    CHECK(j["inner"]["d"] == 5);
    CHECK(j["outer"]["d"] == 2);
}

TEST_CASE("JSON output round-trips byte for byte") {
    std::vector<RunConfig> configs{config(Command::Classes, 13), config(Command::Cosets, 13, 3),
                                   config(Command::Factor, 19, 11)};
    RunConfig code = config(Command::Code, 11, 3);
    code.classes = "D0E0";
    configs.push_back(code);
    RunConfig en = config(Command::Enumerate, 19, 11);
    en.classes = "D0";
    en.z = 1;
    en.distances = false;
    configs.push_back(en);
    for (const auto& cfg : configs) {
        const Output o = run_config(cfg);
        REQUIRE(o.code == kExitOk);
        const auto parsed = nlohmann::json::parse(o.out);
        std::ostringstream again;
        again << parsed.dump(2) << '\n';
        CHECK(again.str() == o.out);
    }
}

TEST_CASE("table and JSON carry the same numbers") {
    std::vector<RunConfig> configs{config(Command::Classes, 13, 0, false), config(Command::Cosets, 13, 3, false),
                                   config(Command::Factor, 11, 3, false)};
    RunConfig cfg = config(Command::Chain, 19, 11, false);
    cfg.classes = "D0E0";
    cfg.inner_remove = {2, 5, 9, 10};
    cfg.outer_remove = {1, 2, 5, 9, 10};
    configs.push_back(cfg);
    for (auto table_cfg : configs) {
        RunConfig json_cfg = table_cfg;
        json_cfg.json = true;
        const Output t = run_config(table_cfg);
        const Output j = run_config(json_cfg);
        REQUIRE(t.code == kExitOk);
        REQUIRE(j.code == kExitOk);
        CHECK(numbers(strip_indices(t.out)) == numbers(j.out));
    }
}

TEST_CASE("enumerate reports the closed-form dimension") {
    RunConfig cfg = config(Command::Enumerate, 19, 11);
    cfg.classes = "D0";
    cfg.z = 0;
    cfg.distances = false;
    const auto j = report(cfg);
    CHECK(j["expected_dim"] == 20);
    CHECK(j["chains"].size() == 3);
    for (const auto& c : j["chains"]) CHECK(c["qsc"]["dim"] == 20);

    cfg.theorem = 2;
    cfg.classes = "D0E0";
    cfg.z = 1;
    const auto k = report(cfg);
    CHECK(k["expected_dim"] == 8);
    for (const auto& c : k["chains"]) CHECK(c["qsc"]["dim"] == 8);
}

TEST_CASE("regression scenarios all pass") {
    const auto j = regression_report();
    CHECK(j["failed"] == 0);
    CHECK(j["passed"].get<int>() == static_cast<int>(j["scenarios"].size()));
    CHECK(j["scenarios"].size() >= 10);
    const Output o = run_config(RunConfig{});
    CHECK(o.code == kExitOk);
}
