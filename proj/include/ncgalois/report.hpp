#pragma once

#include <string>
#include <vector>

namespace ncg {

struct Failure {
  std::string what;    // the identity or case that failed
  std::string detail;  // both sides' normal forms, or other witness data
};

/// Outcome of a bounded verification. Failures are data, never exceptions.
struct Report {
  std::string name;
  size_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }

  void record(bool ok, const std::string& what, const std::string& detail = {}) {
    ++checked;
    if (!ok) failures.push_back({what, detail});
  }
  void fail(const std::string& what, const std::string& detail = {}) { record(false, what, detail); }
  void note(std::string n) { notes.push_back(std::move(n)); }

  void merge(const Report& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }

  /// One-line summary plus up to `max_failures` failure lines.
  std::string summary(size_t max_failures = 3) const {
    std::string s = name + ": " + (pass() ? "pass" : "FAIL") + " (" + std::to_string(checked) + " checked";
    if (!pass()) s += ", " + std::to_string(failures.size()) + " failed";
    s += ")";
    for (size_t i = 0; i < failures.size() && i < max_failures; ++i)
      s += "\n    " + failures[i].what + (failures[i].detail.empty() ? "" : ": " + failures[i].detail);
    return s;
  }
};

}  // namespace ncg
