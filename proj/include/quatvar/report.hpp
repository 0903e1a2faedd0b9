#pragma once

#include <string>

#include "json.hpp"

namespace qv {

// Uniform machine-readable result of a verification sweep.
// status: "pass" | "fail" | "inconclusive".
struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::string status = "pass";
    long cases_total = 0;
    long cases_failed = 0;
    nlohmann::json first_failure;  // null unless a case failed
    nlohmann::json data = nlohmann::json::object();

    bool passed() const { return status == "pass"; }

    void fail_case(const nlohmann::json& detail) {
        ++cases_failed;
        status = "fail";
        if (first_failure.is_null()) first_failure = detail;
    }

    nlohmann::json to_json() const;
};

const char* build_id();

}  // namespace qv
