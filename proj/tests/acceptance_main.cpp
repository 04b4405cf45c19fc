// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any failed.

#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "fsb/acceptance.hpp"
#include "fsb/sweep.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<int> criteria;
    std::string artifacts;
    app.add_option("--criterion", criteria, "criterion index, repeatable")->check(CLI::Range(1, fsb::kCriterionCount));
    app.add_option("--artifacts", artifacts, "directory for sweep CSVs");
    CLI11_PARSE(app, argc, argv);

    fsb::configure_workers_from_env();
    if (criteria.empty()) {
        for (int k = 1; k <= fsb::kCriterionCount; ++k) criteria.push_back(k);
    }
    fsb::AcceptanceOptions opt;
    opt.artifact_dir = artifacts;
    bool all = true;
    for (int k : criteria) {
        const auto r = fsb::run_criterion(k, opt);
        std::cout << fsb::format_result(r) << std::endl;
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
