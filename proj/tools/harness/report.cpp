#include "harness/report.hpp"

#include "pk/algebra_ops.hpp"
#include "pk/criteria.hpp"
#include "pk/error.hpp"
#include "pk/graded_algebra.hpp"
#include "pk/theorems.hpp"
#include "pk/topology.hpp"

namespace pk::harness {

std::string id_set(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

namespace {

using Json = nlohmann::ordered_json;

template <class F>
AnalysisReport analyze_impl(F f, const RankedPoset& p, const std::string& name,
                            KPolicy policy) {
  AnalysisReport rep;
  rep.poset = name;
  rep.field = f.spec().tag();
  rep.k_policy = policy_name(policy);
  rep.cyclic = p.is_cyclic();
  rep.rank = p.poset_rank();
  rep.elements = p.size();

  auto uni = is_uniform(p);
  rep.uniform = uni.uniform;
  for (const auto& w : uni.witnesses)
    rep.uniform_witnesses.push_back("x=" + w.element + " classes=" +
                                    std::to_string(w.class_count));

  if (rep.cyclic) {
    auto cm = is_cm(f, p);
    rep.cm = cm.cm;
    for (const auto& w : cm.witnesses)
      rep.cm_witnesses.push_back("(" + w.lower + "," + w.upper + ") degree " +
                                 std::to_string(w.degree) + " dim " +
                                 std::to_string(w.dim));
    auto wcm = weakly_cm(f, p, policy);
    rep.weakly_cm = wcm.weakly_cm;
    for (const auto& w : wcm.witnesses)
      rep.wcm_witnesses.push_back("x=" + w.element + " level " +
                                  std::to_string(w.level) + " W=" +
                                  id_set(w.w_ids) + " depth " +
                                  std::to_string(w.k));
  }

  auto kos = koszul_decide(f, p);
  rep.koszul = kos.koszul;
  for (const auto& w : kos.witnesses) {
    std::string s = "W=" + id_set(w.w_ids) + " degree " + std::to_string(w.degree);
    if (!w.context.empty()) s += " under " + w.context;
    rep.koszul_witnesses.push_back(std::move(s));
  }

  rep.hilbert_algebra = hilbert_direct(f, p);
  rep.hilbert_topology = hilbert_via_cohomology(f, p);
  rep.hilbert_match = rep.hilbert_algebra == rep.hilbert_topology;

  GradedAlgebra<F> alg(f, p, p.poset_rank() + 2);
  for (const auto& w : t_family_union(p)) {
    auto ar = rann_vs_L(f, alg, w);
    rep.annihilators.push_back(
        {ar.w_ids, ar.rann_dims, ar.equal, ar.closed_form_agrees});
  }

  auto cons = verify_theorems(f, p);
  rep.consistent = cons.ok();
  rep.violations = cons.violations;

  rep.notes.push_back("level windows span the chosen depth below their level"
                      " set and never include the base point");
  rep.notes.push_back(policy == KPolicy::derived
                          ? "k-policy derived: window depths 2 through n-1"
                          : "k-policy literal: window depths 0 through n-1");
  return rep;
}

} // namespace

std::string policy_name(KPolicy policy) {
  return policy == KPolicy::derived ? "derived" : "literal";
}

KPolicy parse_policy(const std::string& name) {
  if (name == "derived") return KPolicy::derived;
  if (name == "literal") return KPolicy::literal;
  fail(errc::bad_input, "bad k-policy \"" + name +
                            "\" (expected \"derived\" or \"literal\")");
}

AnalysisReport analyze(const RankedPoset& p, const std::string& name,
                       const FieldSpec& field, KPolicy policy) {
  return with_field(field, [&](auto f) { return analyze_impl(f, p, name, policy); });
}

nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  Json j;
  j["poset"] = rep.poset;
  j["field"] = rep.field;
  j["k_policy"] = rep.k_policy;
  j["cyclic"] = rep.cyclic;
  j["rank"] = rep.rank;
  j["elements"] = rep.elements;

  Json v;
  v["uniform"] = rep.uniform;
  v["cm"] = rep.cm ? Json(*rep.cm) : Json(nullptr);
  v["weakly_cm"] = rep.weakly_cm ? Json(*rep.weakly_cm) : Json(nullptr);
  v["koszul"] = rep.koszul;
  j["verdicts"] = std::move(v);

  Json h;
  h["algebra"] = rep.hilbert_algebra;
  h["topology"] = rep.hilbert_topology;
  h["match"] = rep.hilbert_match;
  j["hilbert"] = std::move(h);

  j["annihilators"] = Json::array();
  for (const auto& row : rep.annihilators) {
    Json r;
    r["w"] = row.w_ids;
    r["rann_dims"] = row.rann_dims;
    r["equal"] = row.equal;
    r["closed_form_agrees"] = row.closed_form_agrees;
    j["annihilators"].push_back(std::move(r));
  }

  Json w;
  w["uniform"] = rep.uniform_witnesses;
  w["cm"] = rep.cm_witnesses;
  w["weakly_cm"] = rep.wcm_witnesses;
  w["koszul"] = rep.koszul_witnesses;
  j["witnesses"] = std::move(w);

  j["consistent"] = rep.consistent;
  j["violations"] = rep.violations;
  j["notes"] = rep.notes;
  return j;
}

nlohmann::ordered_json report_envelope(const std::string& command,
                                       std::vector<nlohmann::ordered_json> reports) {
  Json j;
  j["schema"] = "poset-koszul-report/1";
  j["command"] = command;
  j["reports"] = std::move(reports);
  return j;
}

} // namespace pk::harness
