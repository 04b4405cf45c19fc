// acceptance.hpp — End-to-end checks, one verdict per criterion

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fsb {

struct CriterionResult {
    int index{0};
    std::string name;
    bool passed{false};
    std::string detail;
    double seconds{0.0};
};

struct AcceptanceOptions {
    std::filesystem::path artifact_dir; // sweep CSVs of criterion 10; temp dir when empty
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int index, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  3 detailed-balance: ..." style line.
std::string format_result(const CriterionResult& result);

} // namespace fsb
