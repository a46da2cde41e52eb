#include "harness/sweep.hpp"

#include <algorithm>
#include <thread>

#include "pk/algebra_ops.hpp"
#include "pk/criteria.hpp"
#include "pk/graded_algebra.hpp"
#include "pk/scomplex.hpp"
#include "pk/spectral.hpp"
#include "pk/theorems.hpp"
#include "pk/topology.hpp"

namespace pk::harness {

namespace {

using Json = nlohmann::ordered_json;

std::string pad6(long n) {
  std::string s = std::to_string(n);
  while (s.size() < 6) s.insert(s.begin(), '0');
  return s;
}

template <class F>
void check_one(F f, const RankedPoset& p, const std::string& prefix,
               std::vector<std::string>& out) {
  auto cons = verify_theorems(f, p);
  for (const auto& v : cons.violations)
    out.push_back(prefix + "check=theorems: " + v);

  for (int k = 0; k < p.poset_rank(); ++k) {
    auto psi = psi_check(f, p, k);
    if (!psi.ok())
      out.push_back(prefix + "check=psi: depth " + std::to_string(k) +
                    (psi.well_defined ? "" : " not well defined") +
                    (psi.commutes ? "" : " does not intertwine") +
                    (psi.bijective ? "" : " not bijective"));
  }

  if (hilbert_direct(f, p) != hilbert_via_cohomology(f, p))
    out.push_back(prefix + "check=hilbert: routes disagree");

  auto sp = spectral_sequence(f, p);
  if (!sp.ok()) {
    std::string why = !sp.converges          ? "limit misses cohomology"
                      : !sp.stabilizes       ? "pages keep moving"
                                             : "first page misses interval cohomology";
    out.push_back(prefix + "check=spectral: " + why);
  }

  GradedAlgebra<F> alg(f, p, p.poset_rank() + 2);
  for (const auto& w : t_family_union(p)) {
    auto ar = rann_vs_L(f, alg, w);
    if (!ar.equal)
      out.push_back(prefix + "check=annihilator: rann differs from L at W=" +
                    id_set(ar.w_ids));
    if (!ar.closed_form_agrees)
      out.push_back(prefix + "check=annihilator: closed form mismatch at W=" +
                    id_set(ar.w_ids));
  }
}

} // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  std::vector<RankedPoset> posets;
  if (cfg.random_count > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (long i = 0; i < cfg.random_count; ++i)
      posets.push_back(random_cyclic(rng, cfg.enumeration.max_elements,
                                     cfg.enumeration.max_rank));
  } else {
    posets = enumerate_cyclic(cfg.enumeration);
  }

  int jobs = std::max(1, cfg.jobs);
  std::vector<std::vector<std::string>> found(jobs);

  auto worker = [&](int w) {
    for (size_t i = w; i < posets.size(); i += jobs) {
      const RankedPoset& p = posets[i];
      std::string where = "n" + std::to_string(p.positive_size()) + "r" +
                          std::to_string(p.poset_rank()) + "#" +
                          pad6(static_cast<long>(i)) + " ";
      for (const auto& fs : cfg.fields) {
        std::string prefix = where + "field=" + fs.tag() + " ";
        try {
          with_field(fs, [&](auto f) { check_one(f, p, prefix, found[w]); });
        } catch (const std::exception& e) {
          found[w].push_back(prefix + "check=exception: " + e.what());
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  SweepResult res;
  res.posets = static_cast<long>(posets.size());
  res.checks = res.posets * static_cast<long>(cfg.fields.size());
  for (auto& part : found)
    res.violations.insert(res.violations.end(), part.begin(), part.end());
  std::sort(res.violations.begin(), res.violations.end());
  return res;
}

nlohmann::ordered_json sweep_to_json(const SweepConfig& cfg,
                                     const SweepResult& res) {
  Json j;
  j["max_elements"] = cfg.enumeration.max_elements;
  j["max_rank"] = cfg.enumeration.max_rank;
  Json fields = Json::array();
  for (const auto& fs : cfg.fields) fields.push_back(fs.tag());
  j["fields"] = std::move(fields);
  j["k_policy"] = "derived"; // the cross-checks always use the derived depths
  if (cfg.random_count > 0) {
    j["random_count"] = cfg.random_count;
    j["seed"] = cfg.seed;
  }
  j["posets"] = res.posets;
  j["checks"] = res.checks;
  j["violations"] = res.violations;
  j["ok"] = res.ok();
  return j;
}

} // namespace pk::harness
