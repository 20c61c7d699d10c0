#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "corita/matrix.hpp"

namespace corita {

enum class Verdict { Pass, Fail, Unmet };

const char* verdict_str(Verdict v);
Verdict combine(Verdict a, Verdict b);

/// One line item of a structured check. Failing items carry a witness.
struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  nlohmann::ordered_json witness;  // null unless the item failed or carries data
  std::vector<Check> sub;

  nlohmann::ordered_json to_json() const;
};

/// Structured verdict of an operation: a named tree of sub-checks.
class Report {
 public:
  Report() : check_("report") {}
  explicit Report(std::string check_name) : check_(std::move(check_name)) {}

  const std::string& name() const { return check_; }

  Check& add(const std::string& item, bool ok, const std::string& detail = "");
  Check& add_verdict(const std::string& item, Verdict v, const std::string& detail = "");
  Check& add_unmet(const std::string& item, const std::string& detail);
  void absorb(const std::string& item, const Report& sub);
  void require(bool ok, const std::string& item, const std::string& detail = "") {
    add(item, ok, detail);
  }

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  /// No item failed (hypotheses-unmet items are tolerated).
  bool no_failures() const { return verdict() != Verdict::Fail; }
  const std::vector<Check>& items() const { return items_; }

  nlohmann::ordered_json to_json() const;
  void print(std::ostream& os, int indent = 0) const;

 private:
  std::string check_;
  std::vector<Check> items_;
};

nlohmann::ordered_json mat_to_json(const Mat& m);

}  // namespace corita
