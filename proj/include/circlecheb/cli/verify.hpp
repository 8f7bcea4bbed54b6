#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlecheb/cli/json_writer.hpp"
#include "circlecheb/kernel.hpp"

namespace circlecheb::cli {

struct SuiteConfig {
    std::optional<int> n;  // each suite has its own default size
    int trials = 100;
    int restarts = 32;
    std::uint64_t seed = 0;
    double p = 2.0;
    KernelKind kernel = KernelKind::Riesz;
    double tol = 1e-10;
    int grid = 1 << 14;
};

struct CheckRow {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct SuiteResult {
    Json report;
    bool pass = false;
    std::vector<CheckRow> checks;  // same content as report["checks"]
};

const std::vector<std::string>& suite_names();

/// Accepts the canonical names plus "theorem" for theorem_p2.
std::optional<std::string> canonical_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace circlecheb::cli
