#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tilekit {

struct AcceptanceOptions {
    bool fast = false;         // skip the long torus search; the fixture stands in
    std::string filter;        // substring of the id, tags or title; empty runs all
    std::string fixtures_dir;  // read <name>.json from here instead of the built-in payloads
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::string tags;
    bool passed = false;
    bool skipped = false;  // filtered out
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
bool all_passed(const std::vector<CriterionResult>& rs);
std::string report_table(const std::vector<CriterionResult>& rs);
nlohmann::json to_json(const std::vector<CriterionResult>& rs);

}  // namespace tilekit
