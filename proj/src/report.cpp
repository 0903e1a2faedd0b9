#include "quatvar/report.hpp"

#ifndef QV_BUILD_ID
#define QV_BUILD_ID "unknown"
#endif

namespace qv {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = status;
    j["cases_total"] = cases_total;
    j["cases_failed"] = cases_failed;
    j["first_failure"] = first_failure;
    j["data"] = data;
    j["build"] = build_id();
    return j;
}

const char* build_id() { return QV_BUILD_ID; }

}  // namespace qv
