#pragma once

#include "grassmann/qarith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grassmann {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample data or short summary
};

struct VerifyOptions {
    uint64_t seed = 12345;
    long sample = 200;   // sampling size for randomized identity checks
    size_t cap = 50000;  // vertex-count cap for whole-graph checks
};

/// Runs the full identity suite for the given parameters. Whole-graph
/// checks (BFS oracle agreement) are skipped with a note when the vertex
/// count exceeds opts.cap; everything else runs at every scale.
std::vector<CheckResult> run_verification(const QParams& P, const VerifyOptions& opts);

}  // namespace grassmann
