#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pk/field.hpp"
#include "pk/poset.hpp"
#include "pk/scomplex.hpp"

namespace pk::harness {

/* One right-annihilator comparison from the analyze pipeline. */
struct AnnihilatorRow {
  std::vector<std::string> w_ids;
  std::vector<int> rann_dims; // degree 0 .. poset rank
  bool equal = false;
  bool closed_form_agrees = false;
};

/* Everything the analyze command reports for one poset over one field.
 * cm and weakly_cm stay empty for posets without a unique top, where those
 * notions are undefined. */
struct AnalysisReport {
  std::string poset;
  std::string field;
  std::string k_policy;
  bool cyclic = false;
  int rank = 0;
  int elements = 0;

  bool uniform = false;
  std::optional<bool> cm;
  std::optional<bool> weakly_cm;
  bool koszul = false;

  std::vector<long> hilbert_algebra;
  std::vector<long> hilbert_topology;
  bool hilbert_match = false;

  std::vector<AnnihilatorRow> annihilators;

  std::vector<std::string> uniform_witnesses;
  std::vector<std::string> cm_witnesses;
  std::vector<std::string> wcm_witnesses;
  std::vector<std::string> koszul_witnesses;

  bool consistent = false;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const RankedPoset& p, const std::string& name,
                       const FieldSpec& field, KPolicy policy = KPolicy::derived);

nlohmann::ordered_json report_to_json(const AnalysisReport& rep);

/* Versioned envelope wrapping one or more payload objects. */
nlohmann::ordered_json report_envelope(const std::string& command,
                                       std::vector<nlohmann::ordered_json> reports);

std::string policy_name(KPolicy policy);
KPolicy parse_policy(const std::string& name);

/* "{a,b,c}" rendering used by witness strings and violation details. */
std::string id_set(const std::vector<std::string>& ids);

} // namespace pk::harness
