#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfmon/linear_map.hpp"

namespace hopfmon {

// First matrix entry where the two sides of an identity differ.
struct Witness {
  std::size_t row;
  std::size_t col;
};

struct CheckEntry {
  std::string name;
  bool passed;
  std::optional<Witness> witness;
};

// Ordered list of named identity verdicts. Entry order is the order the
// checker evaluates them and is deterministic.
class CheckReport {
 public:
  // Records lhs == rhs (entrywise, same totals) under the given name.
  bool expect_equal(std::string name, const LinearMap& lhs, const LinearMap& rhs);
  void record(std::string name, bool passed, std::optional<Witness> witness = std::nullopt);
  // Appends all entries of other, each name prefixed with "prefix.".
  void merge(const CheckReport& other, std::string_view prefix = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool passed() const;
  std::vector<const CheckEntry*> failures() const;
  const CheckEntry* find(std::string_view name) const;
  // Verdict of the named entry; throws Error when absent.
  bool passed(std::string_view name) const;

  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  std::string to_text() const;
  // One JSON object per report: {"passed": bool, "entries": [...], "notes": [...]}.
  std::string to_json() const;

 private:
  std::vector<CheckEntry> entries_;
  std::vector<std::string> notes_;
};

}  // namespace hopfmon
