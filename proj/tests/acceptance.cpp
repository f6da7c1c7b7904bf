// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ev/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

    auto results = ev::run_acceptance(seed);
    bool all = true;
    for (const auto& r : results) {
        all &= r.pass;
        std::printf("[%s] criterion %s (%s, %.2f s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
