#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "harness/document.hpp"
#include "harness/report.hpp"
#include "harness/search.hpp"
#include "harness/sweep.hpp"
#include "pk/error.hpp"
#include "pk/fixtures.hpp"
#include "pk/order_complex.hpp"
#include "pk/spectral.hpp"
#include "pk/theorems.hpp"
#include "pk/topology.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace pk;
using namespace pk::harness;

int emit(const Json& payload, const std::string& out_path) {
  std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) {
    std::cerr << "error: cannot write \"" << out_path << "\"\n";
    return 1;
  }
  out << text;
  return 0;
}

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& tags,
                                    const FieldSpec& fallback) {
  std::vector<FieldSpec> out;
  for (const auto& t : tags) out.push_back(FieldSpec::parse(t));
  if (out.empty()) out.push_back(fallback);
  return out;
}

Json cohomology_payload(const FieldSpec& fs, const RankedPoset& p,
                        const std::string& name) {
  return with_field(fs, [&](auto f) {
    Json j;
    j["poset"] = name;
    j["field"] = fs.tag();
    auto whole = reduced_cohomology(f, positive_part(p));
    Json body;
    body["lo"] = whole.lo;
    body["dims"] = whole.dims;
    body["cohomology"] = whole.cohomology;
    j["order_complex"] = std::move(body);
    Json intervals = Json::array();
    for (int a = 0; a < p.size(); ++a)
      for (int b = 1; b < p.size(); ++b) {
        if (!p.lt(a, b)) continue;
        auto cd = reduced_cohomology(f, open_interval(p, a, b));
        Json row;
        row["lower"] = p.id(a);
        row["upper"] = p.id(b);
        row["lo"] = cd.lo;
        row["cohomology"] = cd.cohomology;
        intervals.push_back(std::move(row));
      }
    j["intervals"] = std::move(intervals);
    return j;
  });
}

Json spectral_payload(const FieldSpec& fs, const RankedPoset& p,
                      const std::string& name, bool& ok) {
  return with_field(fs, [&](auto f) {
    auto sp = spectral_sequence(f, p);
    ok = sp.ok();
    Json j;
    j["poset"] = name;
    j["field"] = fs.tag();
    j["filtration_top"] = sp.filtration_top;
    j["cohomology"] = sp.h;
    Json pages = Json::array();
    for (size_t r = 0; r < sp.pages.size(); ++r) {
      Json page;
      page["page"] = static_cast<int>(r);
      Json entries = Json::array();
      for (const auto& [pq, dim] : sp.pages[r]) {
        Json e;
        e["p"] = pq.first;
        e["q"] = pq.second;
        e["dim"] = dim;
        entries.push_back(std::move(e));
      }
      page["entries"] = std::move(entries);
      pages.push_back(std::move(page));
    }
    j["pages"] = std::move(pages);
    j["stabilizes"] = sp.stabilizes;
    j["converges"] = sp.converges;
    j["first_page_matches_intervals"] = sp.e1_matches_intervals;
    j["ok"] = sp.ok();
    return j;
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset analysis toolkit"};
  app.require_subcommand(1);

  std::string input, out_path, policy_name_arg = "derived", predicate;
  std::vector<std::string> field_tags;
  int max_elements = 7, max_rank = 0, jobs = 1, min_rank = 0;
  long random_count = 0;
  unsigned long long seed = 0;

  std::string fixture_list;
  for (const auto& n : fixture_names())
    fixture_list += (fixture_list.empty() ? "" : " ") + n;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input,
                    "poset file or fixture:<name> (" + fixture_list + ")")
        ->required();
  };
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--field,--fields", field_tags,
                    "coefficient field: rational or gf:<p>")
        ->delimiter(',');
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the report to this path");
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--k-policy", policy_name_arg,
                    "window depth policy: derived or literal")
        ->check(CLI::IsMember({"derived", "literal"}));
  };

  auto* validate_cmd =
      app.add_subcommand("validate", "check a poset document");
  add_input(validate_cmd);

  auto* analyze_cmd =
      app.add_subcommand("analyze", "full analysis of one poset");
  add_input(analyze_cmd);
  add_fields(analyze_cmd);
  add_policy(analyze_cmd);
  add_out(analyze_cmd);

  auto* cohomology_cmd = app.add_subcommand(
      "cohomology", "order-complex and interval cohomology of one poset");
  add_input(cohomology_cmd);
  add_fields(cohomology_cmd);
  add_out(cohomology_cmd);

  auto* spectral_cmd = app.add_subcommand(
      "spectral", "rank-filtration spectral sequence of one poset");
  add_input(spectral_cmd);
  add_fields(spectral_cmd);
  add_out(spectral_cmd);

  auto* hilbert_cmd = app.add_subcommand(
      "hilbert", "graded dimensions by algebra and by cohomology");
  add_input(hilbert_cmd);
  add_fields(hilbert_cmd);
  add_out(hilbert_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check every decider on one poset");
  add_input(verify_cmd);
  add_fields(verify_cmd);
  add_out(verify_cmd);

  auto* sweep_cmd = app.add_subcommand(
      "enumerate-verify", "cross-check every decider over a poset corpus");
  sweep_cmd->add_option("--max-elements", max_elements,
                        "element bound, counting \"*\"");
  sweep_cmd->add_option("--max-rank", max_rank, "rank bound, 0 = none");
  sweep_cmd->add_option("--random", random_count,
                        "verify this many random draws instead of the"
                        " exhaustive corpus");
  sweep_cmd->add_option("--seed", seed, "random draw seed");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  add_fields(sweep_cmd);
  add_out(sweep_cmd);

  std::string predicate_list;
  for (const auto& n : search_names())
    predicate_list += (predicate_list.empty() ? "" : " ") + n;
  auto* search_cmd =
      app.add_subcommand("search", "first poset satisfying a named predicate");
  search_cmd->add_option("predicate", predicate, "one of: " + predicate_list)
      ->required();
  auto* mr = search_cmd->add_option("--min-rank", min_rank, "rank lower bound");
  search_cmd->add_option("--max-elements", max_elements,
                         "element bound, counting \"*\"");
  search_cmd->add_option("--max-rank", max_rank, "rank bound, 0 = none");
  add_fields(search_cmd);
  add_policy(search_cmd);
  add_out(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      auto doc = load_document(input);
      auto vr = RankedPoset::validate(doc.to_raw());
      if (!vr.ok()) {
        for (const auto& v : vr.violations)
          std::cerr << "error: " << errc_name(v.code) << ": " << v.message
                    << "\n";
        return 1;
      }
      std::cout << "ok: " << doc.name << ": " << vr.poset->size()
                << " elements, rank " << vr.poset->poset_rank() << "\n";
      return 0;
    }

    if (app.got_subcommand(analyze_cmd)) {
      auto doc = load_document(input);
      auto p = doc.build();
      auto policy = parse_policy(policy_name_arg);
      bool all_consistent = true;
      std::vector<Json> reports;
      for (const auto& fs : parse_fields(field_tags, doc.field)) {
        auto rep = analyze(p, doc.name, fs, policy);
        all_consistent = all_consistent && rep.consistent;
        reports.push_back(report_to_json(rep));
      }
      int rc = emit(report_envelope("analyze", std::move(reports)), out_path);
      return rc != 0 ? rc : (all_consistent ? 0 : 2);
    }

    if (app.got_subcommand(cohomology_cmd)) {
      auto doc = load_document(input);
      auto p = doc.build();
      std::vector<Json> reports;
      for (const auto& fs : parse_fields(field_tags, doc.field))
        reports.push_back(cohomology_payload(fs, p, doc.name));
      return emit(report_envelope("cohomology", std::move(reports)), out_path);
    }

    if (app.got_subcommand(spectral_cmd)) {
      auto doc = load_document(input);
      auto p = doc.build();
      bool all_ok = true;
      std::vector<Json> reports;
      for (const auto& fs : parse_fields(field_tags, doc.field)) {
        bool ok = true;
        reports.push_back(spectral_payload(fs, p, doc.name, ok));
        all_ok = all_ok && ok;
      }
      int rc = emit(report_envelope("spectral", std::move(reports)), out_path);
      return rc != 0 ? rc : (all_ok ? 0 : 2);
    }

    if (app.got_subcommand(hilbert_cmd)) {
      auto doc = load_document(input);
      auto p = doc.build();
      bool all_match = true;
      std::vector<Json> reports;
      for (const auto& fs : parse_fields(field_tags, doc.field)) {
        Json j = with_field(fs, [&](auto f) {
          Json body;
          body["poset"] = doc.name;
          body["field"] = fs.tag();
          body["algebra"] = hilbert_direct(f, p);
          body["topology"] = hilbert_via_cohomology(f, p);
          body["match"] = body["algebra"] == body["topology"];
          return body;
        });
        all_match = all_match && j["match"].get<bool>();
        reports.push_back(std::move(j));
      }
      int rc = emit(report_envelope("hilbert", std::move(reports)), out_path);
      return rc != 0 ? rc : (all_match ? 0 : 2);
    }

    if (app.got_subcommand(verify_cmd)) {
      auto doc = load_document(input);
      auto p = doc.build();
      bool all_ok = true;
      std::vector<Json> reports;
      for (const auto& fs : parse_fields(field_tags, doc.field)) {
        auto rep = with_field(fs, [&](auto f) { return verify_theorems(f, p); });
        all_ok = all_ok && rep.ok();
        Json j;
        j["poset"] = doc.name;
        j["field"] = fs.tag();
        j["cyclic"] = rep.cyclic;
        j["pure"] = rep.pure;
        j["uniform"] = rep.uniform;
        j["koszul"] = rep.koszul;
        j["cm"] = rep.cm;
        j["weakly_cm"] = rep.wcm;
        j["violations"] = rep.violations;
        j["ok"] = rep.ok();
        reports.push_back(std::move(j));
      }
      int rc = emit(report_envelope("verify", std::move(reports)), out_path);
      return rc != 0 ? rc : (all_ok ? 0 : 2);
    }

    if (app.got_subcommand(sweep_cmd)) {
      SweepConfig cfg;
      cfg.enumeration.max_elements = max_elements;
      cfg.enumeration.max_rank = max_rank;
      cfg.jobs = jobs;
      cfg.random_count = random_count;
      cfg.seed = seed;
      if (!field_tags.empty()) cfg.fields = parse_fields(field_tags, {});
      if (cfg.random_count > 0) cfg.enumeration.reject_isomorphic = false;
      auto res = run_sweep(cfg);
      int rc = emit(report_envelope("enumerate-verify", {sweep_to_json(cfg, res)}),
                    out_path);
      return rc != 0 ? rc : (res.ok() ? 0 : 2);
    }

    if (app.got_subcommand(search_cmd)) {
      auto spec = named_search(predicate);
      spec.policy = parse_policy(policy_name_arg);
      if (!field_tags.empty())
        spec.field = FieldSpec::parse(field_tags.front());
      if (search_cmd->count("--max-elements") > 0)
        spec.enumeration.max_elements = max_elements;
      if (search_cmd->count("--max-rank") > 0)
        spec.enumeration.max_rank = max_rank;
      if (mr->count() > 0) spec.enumeration.min_rank = min_rank;
      auto hit = run_search(spec);
      if (!hit) {
        std::cerr << "no witness for \"" << predicate
                  << "\" within the bounds\n";
        return 1;
      }
      Json j;
      j["predicate"] = predicate;
      j["index"] = hit->index;
      j["document"] =
          document_to_json(PosetDocument::of(hit->poset, spec.predicate + "-witness",
                                             spec.field));
      j["report"] = report_to_json(hit->report);
      int rc = emit(report_envelope("search", {std::move(j)}), out_path);
      return rc != 0 ? rc : (hit->report.consistent ? 0 : 2);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
