#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace plk {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::chrono::duration<double> elapsed{};  // never rendered in the report
};

struct Criterion {
    int id = 0;
    std::string name;
    std::function<CriterionResult()> run;
};

// Criteria 1 to 11; criterion 12 is assembled by run_suite.
std::vector<Criterion> criteria();

struct SuiteOptions {
    bool determinism = true;  // re-run 1..11 and compare the renders
    std::vector<int> only;    // empty means all
};

std::vector<CriterionResult> run_suite(const SuiteOptions& opts = {});

// Stable renders: one line per criterion, no timings.
std::string render_text(const std::vector<CriterionResult>& results);
std::string render_json(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace plk
