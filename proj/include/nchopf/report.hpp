#ifndef NCHOPF_REPORT_HPP_
#define NCHOPF_REPORT_HPP_

#include <string>
#include <vector>

namespace nchopf {

// One line of a verification report. `grade` is -1 for checks that are not
// tied to a single grade.
struct CheckResult {
  std::string check;
  int grade = -1;
  bool ok = true;
  std::string witness;
  std::string detail;
};

using Report = std::vector<CheckResult>;

bool all_passed(const Report& report);
void append(Report& into, const Report& from);

// [{"check":..., "grade":..., "status":"pass"|"fail", "witness":...}, ...]
std::string report_to_json(const Report& report);

}  // namespace nchopf

#endif  // NCHOPF_REPORT_HPP_
