#pragma once

// Named verification suites over the builtin algebras, with text and JSON
// report rendering.

#include "ncgalois/presentations.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

struct CheckRecord {
  std::string id;      // "<suite>/<check>"
  std::string anchor;  // e.g. "Eq (x1)", "Prop 4.4"
  std::string status;  // pass, fail, skip, expected-failure-observed
  std::string witness;
  long long ms = 0;

  bool ok() const { return status != "fail"; }
};

struct SuiteOptions {
  size_t degree = 3;
  uint64_t seed = 0;
  bool numeric = false;
  unsigned jobs = 1;
  bool timing = true;
  /// Overrides the parameters chosen from `numeric` and `seed`.
  std::optional<Params> params;

  Params resolved_params() const;
};

struct SuiteReport {
  std::string suite;
  size_t degree = 3;
  uint64_t seed = 0;
  std::string backend;
  std::vector<CheckRecord> checks;

  bool ok() const;
  const CheckRecord* find(const std::string& id) const;
};

/// relations, confluence, hopf, action, smash, galois, cotangent, tangent,
/// duality, erratum.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

std::string render_text(const SuiteReport& r);
std::string render_json(const SuiteReport& r);

}  // namespace ncg
