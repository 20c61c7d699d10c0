#include "corita/report.hpp"

#include <ostream>

namespace corita {

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "hypotheses-unmet";
  }
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Unmet || b == Verdict::Unmet) return Verdict::Unmet;
  return Verdict::Pass;
}

nlohmann::ordered_json Check::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["verdict"] = verdict_str(verdict);
  if (!detail.empty()) j["detail"] = detail;
  if (!witness.is_null()) j["witness"] = witness;
  if (!sub.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Check& c : sub) arr.push_back(c.to_json());
    j["items"] = arr;
  }
  return j;
}

Check& Report::add(const std::string& item, bool ok, const std::string& detail) {
  return add_verdict(item, ok ? Verdict::Pass : Verdict::Fail, detail);
}

Check& Report::add_verdict(const std::string& item, Verdict v, const std::string& detail) {
  items_.push_back(Check{item, v, detail, nullptr, {}});
  return items_.back();
}

Check& Report::add_unmet(const std::string& item, const std::string& detail) {
  return add_verdict(item, Verdict::Unmet, detail);
}

void Report::absorb(const std::string& item, const Report& sub) {
  Check c{item, sub.verdict(), "", nullptr, {}};
  c.sub = sub.items();
  items_.push_back(std::move(c));
}

Verdict Report::verdict() const {
  Verdict v = Verdict::Pass;
  for (const Check& c : items_) v = combine(v, c.verdict);
  return v;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_;
  j["verdict"] = verdict_str(verdict());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Check& c : items_) arr.push_back(c.to_json());
  j["items"] = arr;
  return j;
}

namespace {
void print_check(std::ostream& os, const Check& c, int indent) {
  for (int i = 0; i < indent; ++i) os << "  ";
  const char* mark = c.verdict == Verdict::Pass ? "ok  " : (c.verdict == Verdict::Fail ? "FAIL" : "----");
  os << "[" << mark << "] " << c.name;
  if (!c.detail.empty()) os << ": " << c.detail;
  os << "\n";
  for (const Check& s : c.sub) print_check(os, s, indent + 1);
}
}  // namespace

void Report::print(std::ostream& os, int indent) const {
  for (int i = 0; i < indent; ++i) os << "  ";
  os << check_ << ": " << verdict_str(verdict()) << "\n";
  for (const Check& c : items_) print_check(os, c, indent + 1);
}

nlohmann::ordered_json mat_to_json(const Mat& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m.field().is_rational())
        entries.push_back(m.field().str(m.at(i, k)));
      else
        entries.push_back(static_cast<long>(boost::multiprecision::numerator(m.at(i, k))));
    }
  j["entries"] = entries;
  return j;
}

}  // namespace corita
