#include "mmlab/report.hpp"

namespace mmlab {

Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["schema"] = "mmlab-report-v1";
  doc["ring"] = report.ring;
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json j;
    j["claim"] = c.claim;
    j["params"] = c.params;
    j["pass"] = c.pass;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    j["timings"] = c.timings;
    claims.push_back(std::move(j));
  }
  doc["claims"] = std::move(claims);
  return doc;
}

std::string emit_report(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace mmlab
