#include "vsmooth/exact/report.hpp"

namespace vsmooth::exact {

const char* to_string(Check c) {
  switch (c) {
    case Check::factorization: return "factorization";
    case Check::positivity: return "positivity";
    case Check::descartes: return "descartes";
    case Check::double_root: return "double_root";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::json report_to_json(const VerificationReport& r,
                              bool include_millis) {
  nlohmann::json j;
  j["q"] = r.q;
  j["check"] = to_string(r.check);
  j["status"] = to_string(r.status);
  if (r.sign_changes) j["sign_changes"] = *r.sign_changes;
  if (r.precision_bits) j["precision_bits"] = *r.precision_bits;
  if (r.offending_index) j["offending_index"] = *r.offending_index;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (include_millis) j["millis"] = r.millis;
  return j;
}

nlohmann::json reports_to_json(std::span<const VerificationReport> reports,
                               bool include_millis) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r, include_millis));
  return arr;
}

std::string report_to_line(const VerificationReport& r) {
  std::string line = "q=" + std::to_string(r.q) + " " + to_string(r.check) +
                     " " + to_string(r.status);
  if (r.sign_changes)
    line += " sign_changes=" + std::to_string(*r.sign_changes);
  if (r.precision_bits)
    line += " bits=" + std::to_string(*r.precision_bits);
  if (r.offending_index)
    line += " offending_index=" + std::to_string(*r.offending_index);
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  return line;
}

}  // namespace vsmooth::exact
