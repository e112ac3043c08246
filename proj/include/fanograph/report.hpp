// Verification report: every check with its claimed value, the computed value
// and a verdict, serialized to a byte-stable JSON document.

#pragma once

#include <string>
#include <vector>

namespace fanograph {

inline constexpr const char* kReportSchema = "fanograph.verify/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { pass, fail, discrepancy_noted };
const char* to_string(Verdict v);

struct Check {
  int criterion = 0;  // acceptance criterion 1..12, 0 for extras
  std::string id;
  std::string description;
  std::string claim;
  std::string computed;
  Verdict verdict = Verdict::pass;
};

struct ConfigurationSummary {
  std::string name;
  std::string json;  // pre-serialized object
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<ConfigurationSummary> configurations;

  std::size_t count(Verdict v) const;
  bool failed() const { return count(Verdict::fail) > 0; }
  std::string to_json() const;
};

VerificationReport verify_all();

}  // namespace fanograph
