#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chanspace {

// One verification check: exhaustive where feasible, seeded-random where
// not. A check with `informational` set reports findings (for example the
// triangle-inequality survey) but can never fail the campaign.
struct CheckResult {
    std::string check;
    std::uint64_t instances = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool informational = false;

    bool passed() const { return informational || failures.empty(); }
};

struct VerifyConfig {
    std::uint64_t seed = 1729;
    int workers = 1;
    int oracle_limit = 20;

    // Sweep sizes; the defaults match the shipped acceptance thresholds.
    int random_pair_count = 200;     // formula vs oracle, sizes 5..12
    int radial_instances = 100;      // random stable channels, n<=8 m<=6
    int equivalence_instances = 100; // mixed stable/unstable pairs, n<=4 m<=3
    int mc_pairs = 20;
    std::uint64_t mc_samples = 100000;
    double mc_sigmas = 4.0;
};

std::vector<std::string> available_suites();

// Runs the named suites ("all" for every one). Unknown names throw.
std::vector<CheckResult> run_verification(const std::vector<std::string>& suites,
                                          const VerifyConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace chanspace
