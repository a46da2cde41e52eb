#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "harness/report.hpp"
#include "pk/enumerate.hpp"
#include "pk/field.hpp"

namespace pk::harness {

/* Corpus-wide verification settings. With random_count == 0 the corpus is
 * the exhaustive isomorphism-rejected enumeration; otherwise it is that many
 * seeded random draws. The report is independent of jobs. */
struct SweepConfig {
  EnumerationSpec enumeration;
  std::vector<FieldSpec> fields = {FieldSpec::rational(), FieldSpec::gf(2)};
  int jobs = 1;
  long random_count = 0;
  unsigned long long seed = 0;
};

struct SweepResult {
  long posets = 0;
  long checks = 0; // poset-field pairs examined
  std::vector<std::string> violations; // sorted
  bool ok() const { return violations.empty(); }
};

SweepResult run_sweep(const SweepConfig& cfg);

nlohmann::ordered_json sweep_to_json(const SweepConfig& cfg,
                                     const SweepResult& res);

} // namespace pk::harness
