#pragma once
// The verification suites behind `spin7 verify`. Each suite is a list of
// claims; each claim is checked on seeded instances and reports its failures.

#include "spin7/serialize.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spin7 {

enum class Backend { Exact, Float };

struct RunConfig {
    Backend backend = Backend::Exact;
    double epsilon = 1e-9;
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::string output_path;
};

/// Invalid configuration or suite selection (CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void validate(const RunConfig& config);

inline constexpr std::array<std::string_view, 8> kSuiteNames{
    "octonion-identities", "rotation-laws", "f7-well-defined", "spin7-membership",
    "triality",            "double-cover",  "commutative-square", "degree-ledger"};

/// Instance counts per claim, derived from --trials.
struct SuiteSizes {
    std::size_t octonion;   // 5 × trials
    std::size_t rotation;   // 2 × trials
    std::size_t standard;   // trials
    std::size_t half;       // trials / 2
    std::size_t fifth;      // trials / 5
    static SuiteSizes from_trials(std::size_t trials);
};

struct ClaimResult {
    std::string id;
    std::string statement;
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    /// At most the first ten failing instances.
    Json failures = Json::array();
    /// Claim-specific payload (e.g. the degree ledger).
    Json data;
    bool pass() const { return failure_count == 0 && instances > 0; }
};

struct SuiteResult {
    std::string name;
    std::vector<ClaimResult> claims;
    bool pass() const;
};

struct VerifyRun {
    RunConfig config;
    std::vector<SuiteResult> suites;
    bool pass() const;
    const ClaimResult* find(std::string_view claim_id) const;
    Json to_json() const;
};

/// Runs the named suites (all of them when empty). Throws ConfigError on bad input.
VerifyRun run_verify_suite(const RunConfig& config, const std::vector<std::string>& suites = {});

}  // namespace spin7
