#include "hopfmon/check_report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hopfmon/errors.hpp"

namespace hopfmon {

bool CheckReport::expect_equal(std::string name, const LinearMap& lhs, const LinearMap& rhs) {
  const auto diff = first_difference(lhs, rhs);
  std::optional<Witness> witness;
  if (diff) witness = Witness{diff->first, diff->second};
  record(std::move(name), !diff.has_value(), witness);
  return !diff.has_value();
}

void CheckReport::record(std::string name, bool passed, std::optional<Witness> witness) {
  entries_.push_back(CheckEntry{std::move(name), passed, witness});
}

void CheckReport::merge(const CheckReport& other, std::string_view prefix) {
  for (const auto& e : other.entries_) {
    CheckEntry copy = e;
    if (!prefix.empty()) copy.name = std::string(prefix) + "." + copy.name;
    entries_.push_back(std::move(copy));
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool CheckReport::passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.passed; });
}

std::vector<const CheckEntry*> CheckReport::failures() const {
  std::vector<const CheckEntry*> out;
  for (const auto& e : entries_) {
    if (!e.passed) out.push_back(&e);
  }
  return out;
}

const CheckEntry* CheckReport::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool CheckReport::passed(std::string_view name) const {
  const auto* e = find(name);
  if (e == nullptr) throw Error("no report entry named '" + std::string(name) + "'");
  return e->passed;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << (e.passed ? "PASS " : "FAIL ") << e.name;
    if (e.witness) os << "  (first difference at row " << e.witness->row << ", column " << e.witness->col << ")";
    os << "\n";
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  os << (passed() ? "result: pass" : "result: fail") << " (" << entries_.size() - failures().size() << "/"
     << entries_.size() << " identities hold)\n";
  return os.str();
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json entry{{"name", e.name}, {"passed", e.passed}};
    if (e.witness) entry["witness"] = {e.witness->row, e.witness->col};
    j["entries"].push_back(std::move(entry));
  }
  j["notes"] = notes_;
  return j.dump();
}

}  // namespace hopfmon
