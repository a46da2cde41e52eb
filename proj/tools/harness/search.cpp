#include "harness/search.hpp"

#include "pk/algebra_ops.hpp"
#include "pk/criteria.hpp"
#include "pk/error.hpp"
#include "pk/scomplex.hpp"

namespace pk::harness {

namespace {

/* Cheap verdict combination for one candidate, ordered so the inexpensive
 * atom runs first. The full report is only built for the final hit. */
template <class F>
bool matches(F f, const std::string& name, const RankedPoset& p,
             KPolicy policy) {
  if (name == "wcm-not-uniform")
    return !is_uniform(p).uniform && weakly_cm(f, p, policy).weakly_cm;
  if (name == "uniform-not-koszul")
    return is_uniform(p).uniform && !koszul_decide(f, p).koszul;
  if (name == "wcm-dual-not-wcm")
    return weakly_cm(f, p, policy).weakly_cm &&
           !weakly_cm(f, dual(p), policy).weakly_cm;
  fail(errc::bad_input, "unknown search predicate \"" + name + "\"");
}

} // namespace

std::vector<std::string> search_names() {
  return {"wcm-not-uniform", "uniform-not-koszul", "wcm-dual-not-wcm"};
}

SearchSpec named_search(const std::string& name) {
  SearchSpec s;
  s.predicate = name;
  s.enumeration.budget = 5000000;
  if (name == "wcm-not-uniform") {
    s.field = FieldSpec::rational();
    s.enumeration.max_elements = 7;
    s.enumeration.min_rank = 3;
  } else if (name == "uniform-not-koszul") {
    s.field = FieldSpec::gf(2);
    s.enumeration.max_elements = 12;
    s.enumeration.min_rank = 4;
    s.enumeration.max_rank = 4;
  } else if (name == "wcm-dual-not-wcm") {
    s.field = FieldSpec::rational();
    s.enumeration.max_elements = 12;
    s.enumeration.min_rank = 4;
  } else {
    std::string known;
    for (const auto& n : search_names()) known += " " + n;
    fail(errc::bad_input,
         "unknown search predicate \"" + name + "\" (known:" + known + ")");
  }
  return s;
}

std::optional<SearchHit> run_search(const SearchSpec& spec) {
  std::optional<SearchHit> hit;
  with_field(spec.field, [&](auto f) {
    enumerate_cyclic(spec.enumeration, [&](RankedPoset p, long idx) {
      if (!matches(f, spec.predicate, p, spec.policy)) return true;
      auto rep = analyze(p, spec.predicate + "-witness", spec.field, spec.policy);
      hit = SearchHit{std::move(p), std::move(rep), idx};
      return false;
    });
  });
  return hit;
}

std::optional<SearchHit> search_witness(
    const std::function<bool(const AnalysisReport&)>& predicate,
    const FieldSpec& field, KPolicy policy, const EnumerationSpec& enumeration) {
  std::optional<SearchHit> hit;
  enumerate_cyclic(enumeration, [&](RankedPoset p, long idx) {
    auto rep = analyze(p, "candidate", field, policy);
    if (!predicate(rep)) return true;
    rep.poset = "witness";
    hit = SearchHit{std::move(p), std::move(rep), idx};
    return false;
  });
  return hit;
}

} // namespace pk::harness
