#ifndef MMLAB_REPORT_HPP
#define MMLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace mmlab {

using Json = nlohmann::ordered_json;

// One verified claim. A failing claim must carry a witness explaining the
// failure (counterexample polynomial, mismatched basis element, ...).
struct ClaimResult {
  std::string claim;
  Json params = Json::object();
  bool pass = false;
  Json witness;  // null when absent
  Json timings = Json::object();
};

struct VerificationReport {
  std::string ring;
  std::vector<ClaimResult> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

Json report_to_json(const VerificationReport& report);
// Serialized mmlab-report-v1 document, 2-space indent, trailing newline.
std::string emit_report(const VerificationReport& report);

}  // namespace mmlab

#endif
