#include "nchopf/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace nchopf {

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const CheckResult& r) { return r.ok; });
}

void append(Report& into, const Report& from) {
  into.insert(into.end(), from.begin(), from.end());
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : report) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["grade"] = r.grade;
    j["status"] = r.ok ? "pass" : "fail";
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace nchopf
