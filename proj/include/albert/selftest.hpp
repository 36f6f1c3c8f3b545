#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace albert {

// One invariant suite: name, worst deviation seen, the bound it was held to.
struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct SelftestReport {
    std::vector<SuiteResult> suites;
    bool pass = false;
};

// Runs the full property suites (octonion laws, Jordan identities, pair
// correspondence, F4 membership, G2 transitivity, pipeline soundness, split
// invariance) with deterministic seeds.
SelftestReport run_selftest(std::uint64_t seed = 1);

} // namespace albert
