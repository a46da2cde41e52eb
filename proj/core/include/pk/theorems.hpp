#pragma once

#include <string>
#include <vector>

#include "pk/algebra_ops.hpp"
#include "pk/scomplex.hpp"
#include "pk/topology.hpp"

namespace pk {

/* Verdicts of every decider on one poset plus the list of violated
 * cross-checks. cm and wcm are only meaningful for cyclic posets. */
struct ConsistencyReport {
  bool cyclic = false;
  bool pure = false;
  bool uniform = false;
  bool koszul = false;
  bool cm = false;
  bool wcm = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string id_list_text(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

inline std::string koszul_note(const KoszulResult& k) {
  if (k.witnesses.empty()) return "";
  const auto& w = k.witnesses.front();
  std::string s = "; annihilator gap at W=" + id_list_text(w.w_ids) +
                  " in degree " + std::to_string(w.degree);
  if (!w.context.empty()) s += " under " + w.context;
  return s;
}

inline std::string wcm_note(const WeakCmResult& w) {
  if (w.witnesses.empty()) return "";
  const auto& t = w.witnesses.front();
  return "; window class at x=" + t.element + " level " +
         std::to_string(t.level) + " W=" + id_list_text(t.w_ids) +
         " depth " + std::to_string(t.k);
}

inline std::string cm_note(const CmResult& c) {
  if (c.witnesses.empty()) return "";
  const auto& t = c.witnesses.front();
  return "; off-top class in (" + t.lower + ", " + t.upper + ") degree " +
         std::to_string(t.degree) + " dim " + std::to_string(t.dim);
}

} // namespace detail

/* Evaluate every decider independently and report any broken biconditional:
 * weak Cohen-Macaulay vs Koszul (cyclic), Cohen-Macaulay vs uniform-and-
 * Koszul, the principal-ideal reduction for arbitrary posets, Koszulity of
 * all rank <= 3 posets, and, for pure posets whose principal ideals are all
 * Cohen-Macaulay, the capped-poset criterion: the poset with a top adjoined
 * is weakly Cohen-Macaulay exactly when every maximally linked set one
 * level below the new top has a Cohen-Macaulay capped joint ideal. */
template <class F>
ConsistencyReport verify_theorems(F f, const RankedPoset& p) {
  ConsistencyReport rep;
  rep.cyclic = p.is_cyclic();
  rep.pure = p.is_pure();
  rep.uniform = is_uniform(p).uniform;
  auto kos = koszul_decide(f, p);
  rep.koszul = kos.koszul;
  auto note = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };

  if (rep.cyclic) {
    auto w = weakly_cm(f, p);
    auto c = is_cm(f, p);
    rep.wcm = w.weakly_cm;
    rep.cm = c.cm;
    if (rep.wcm != rep.koszul)
      note("weak Cohen-Macaulay " + yn(rep.wcm) + " vs Koszul " +
           yn(rep.koszul) + detail::wcm_note(w) + detail::koszul_note(kos));
    if (rep.cm != (rep.uniform && rep.koszul))
      note("Cohen-Macaulay " + yn(rep.cm) + " vs uniform " + yn(rep.uniform) +
           " and Koszul " + yn(rep.koszul) + detail::cm_note(c) +
           detail::koszul_note(kos));
    if (rep.cm != (rep.uniform && rep.wcm))
      note("Cohen-Macaulay " + yn(rep.cm) + " vs uniform " + yn(rep.uniform) +
           " and weak Cohen-Macaulay " + yn(rep.wcm) + detail::cm_note(c) +
           detail::wcm_note(w));
  }

  bool ideals_wcm = true;
  std::string first_bad;
  for (int x = 1; x < p.size(); ++x) {
    auto wx = weakly_cm(f, principal_ideal(p, x));
    if (!wx.weakly_cm && first_bad.empty()) first_bad = p.id(x);
    ideals_wcm = ideals_wcm && wx.weakly_cm;
  }
  if (ideals_wcm != rep.koszul)
    note("principal ideals all weakly Cohen-Macaulay " + yn(ideals_wcm) +
         " vs Koszul " + yn(rep.koszul) +
         (first_bad.empty() ? "" : "; first failing ideal under " + first_bad) +
         detail::koszul_note(kos));

  if (p.poset_rank() <= 3 && !rep.koszul)
    note("rank " + std::to_string(p.poset_rank()) +
         " poset must be Koszul" + detail::koszul_note(kos));

  if (rep.pure && p.poset_rank() >= 1) {
    bool ideals_cm = true;
    for (int x = 1; x < p.size() && ideals_cm; ++x)
      ideals_cm = is_cm(f, principal_ideal(p, x)).cm;
    if (ideals_cm) {
      RankedPoset bar = adjoin_top(p);
      bool direct = weakly_cm(f, bar).weakly_cm;
      bool capped = true;
      std::string first_w;
      auto fam = tm_sets(bar);
      for (const auto& w : fam.m[bar.poset_rank() - 1]) {
        bool cmw = is_cm(f, adjoin_top(below(bar, w))).cm;
        if (!cmw && first_w.empty()) {
          std::vector<std::string> ids;
          for (int i : w) ids.push_back(bar.id(i));
          first_w = detail::id_list_text(ids);
        }
        capped = capped && cmw;
      }
      if (direct != capped)
        note("capped poset weakly Cohen-Macaulay " + yn(direct) +
             " vs all capped joint ideals Cohen-Macaulay " + yn(capped) +
             (first_w.empty() ? "" : "; first failing set " + first_w));
    }
  }
  return rep;
}

} // namespace pk
