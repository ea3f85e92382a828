#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trilie/problem.hpp"

namespace trilie {

// Deterministic 64-bit generator behind parameter sampling and gauge draws.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t fnv1a64(const std::string& s);

struct RunOptions {
    std::map<std::string, Scalar> pinned;  // fixed parameter values
    std::size_t samples = 20;
    std::uint64_t seed = 0x3117;
    std::vector<std::string> tasks;        // empty = the file's task list
    bool machine = false;                  // line-oriented TASK\tSTATUS\tDETAIL
};

struct RunResult {
    std::string report;
    int exit_code = 0;  // 0 = every task ok or skipped, 1 = some task failed
};

// Load the file, draw parameter samples (guards respected), execute the task
// list on every sample, and render one deterministic report. Input problems
// (bad file, bad flags, unsatisfiable guards) raise ProblemError; callers map
// those to exit code 2.
RunResult run_file(const std::string& path, const RunOptions& opt);

}  // namespace trilie
