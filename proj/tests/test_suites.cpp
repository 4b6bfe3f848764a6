#include "spin7/suites.hpp"

#include <doctest.h>

#include <limits>

using namespace spin7;

namespace {

RunConfig small(Backend backend = Backend::Exact, std::uint64_t seed = 42) {
    RunConfig cfg;
    cfg.backend = backend;
    cfg.seed = seed;
    cfg.trials = 5;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg = small();
    CHECK_NOTHROW(validate(cfg));
    cfg.trials = 0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    RunConfig fl = small(Backend::Float);
    fl.epsilon = 0.0;
    CHECK_THROWS_AS(validate(fl), ConfigError);
    fl.epsilon = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(fl), ConfigError);

    CHECK_THROWS_AS(run_verify_suite(small(), {"no-such-suite"}), ConfigError);
    CHECK_THROWS_AS(run_verify_suite(small(), {"triality", "triality"}), ConfigError);
}

TEST_CASE("suite sizes scale with trials") {
    const auto s = SuiteSizes::from_trials(100);
    CHECK(s.octonion == 500);
    CHECK(s.rotation == 200);
    CHECK(s.standard == 100);
    CHECK(s.half == 50);
    CHECK(s.fifth == 20);
    const auto one = SuiteSizes::from_trials(1);
    CHECK(one.half == 1);
    CHECK(one.fifth == 1);
}

TEST_CASE("all suites pass on a small exact run") {
    const VerifyRun run = run_verify_suite(small());
    REQUIRE(run.suites.size() == kSuiteNames.size());
    for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
        CHECK(run.suites[i].name == kSuiteNames[i]);
        for (const auto& c : run.suites[i].claims) {
            INFO(c.id);
            CHECK(c.pass());
        }
    }
    CHECK(run.pass());
}

TEST_CASE("all suites pass on a small float run") {
    const VerifyRun run = run_verify_suite(small(Backend::Float));
    for (const auto& suite : run.suites)
        for (const auto& c : suite.claims) {
            INFO(c.id);
            CHECK(c.pass());
        }
}

TEST_CASE("report layout") {
    const Json j = run_verify_suite(small(), {"degree-ledger", "triality"}).to_json();
    CHECK(j["backend"] == "exact");
    CHECK(j["seed"] == 42);
    CHECK(j["trials"] == 5);
    CHECK(j["pass"] == true);
    REQUIRE(j["suites"].size() == 2);
    CHECK(j["suites"][0]["suite"] == "degree-ledger");
    CHECK(j["suites"][1]["suite"] == "triality");
    for (const auto& claim : j["suites"][1]["claims"]) {
        for (const char* key : {"claim", "statement", "instances", "pass", "failure_count", "failures"})
            CHECK(claim.contains(key));
    }

    const auto run = run_verify_suite(small(), {"degree-ledger"});
    const ClaimResult* ledger = run.find("ledger");
    REQUIRE(ledger != nullptr);
    CHECK(ledger->data["conclusion_magnitude"] == 8);
    CHECK(ledger->data["sign_determined"] == false);
    CHECK(run.find("no-such-claim") == nullptr);
}

TEST_CASE("reports are deterministic") {
    const std::vector<std::string> suites{"octonion-identities", "spin7-membership", "commutative-square"};
    const std::string a = run_verify_suite(small(), suites).to_json().dump(2);
    const std::string b = run_verify_suite(small(), suites).to_json().dump(2);
    CHECK(a == b);
    const std::string c = run_verify_suite(small(Backend::Exact, 43), suites).to_json().dump(2);
    CHECK(a != c);
}
