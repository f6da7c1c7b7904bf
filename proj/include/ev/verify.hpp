#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ev {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The acceptance criteria, one result per criterion, at full sizes.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

// Full cross-module invariant suite (acceptance plus the per-module
// property checks). quick shrinks the sample counts.
std::vector<CheckResult> run_verification(std::uint64_t seed, bool quick = false);

}  // namespace ev
