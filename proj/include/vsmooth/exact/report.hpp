#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

namespace vsmooth::exact {

enum class Check { factorization, positivity, descartes, double_root };
enum class Status { verified, failed, indeterminate };

const char* to_string(Check c);
const char* to_string(Status s);

/// Structured outcome of one exact check, with enough evidence to audit it.
struct VerificationReport {
  int q = 0;
  Check check{};
  Status status{};
  std::optional<int> sign_changes;
  std::optional<long> precision_bits;
  std::optional<long> offending_index;
  std::string detail;
  double millis = 0.0;

  bool verified() const { return status == Status::verified; }
};

/// One report as JSON. Wall time is emitted only on request so that default
/// outputs stay byte-reproducible.
nlohmann::json report_to_json(const VerificationReport& r,
                              bool include_millis = false);

nlohmann::json reports_to_json(std::span<const VerificationReport> reports,
                               bool include_millis = false);

/// Single human-readable line, e.g. "q=2 descartes verified sign_changes=2".
std::string report_to_line(const VerificationReport& r);

}  // namespace vsmooth::exact
