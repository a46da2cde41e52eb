#include "harness/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pk/error.hpp"
#include "pk/fixtures.hpp"

namespace pk::harness {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown_keys(const Json& obj, const std::vector<std::string>& known,
                         const std::string& where) {
  for (const auto& item : obj.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      fail(errc::bad_input, "unknown key \"" + item.key() + "\" in " + where);
}

std::string require_string(const Json& obj, const std::string& key,
                           const std::string& where) {
  if (!obj.contains(key))
    fail(errc::bad_input, "missing key \"" + key + "\" in " + where);
  if (!obj[key].is_string())
    fail(errc::bad_input, "key \"" + key + "\" in " + where + " must be a string");
  return obj[key].get<std::string>();
}

} // namespace

PosetDocument PosetDocument::of(const RankedPoset& p, const std::string& name,
                                const FieldSpec& field) {
  PosetDocument doc;
  doc.name = name;
  doc.field = field;
  for (int i = 1; i < p.size(); ++i)
    doc.elements.push_back({p.id(i), p.rank_of(i)});
  for (int i = 1; i < p.size(); ++i) {
    if (p.rank_of(i) < 2) continue;
    auto los = p.lower(i);
    std::sort(los.begin(), los.end());
    for (int lo : los) doc.covers.push_back({p.id(i), p.id(lo)});
  }
  return doc;
}

RawPoset PosetDocument::to_raw() const {
  RawPoset raw;
  for (const auto& [id, rank] : elements) raw.elements.push_back({id, rank});
  raw.covers = covers;
  return raw;
}

RankedPoset PosetDocument::build() const {
  auto vr = RankedPoset::validate(to_raw());
  if (!vr.ok()) throw error(vr.violations.front().code,
                            "document \"" + name + "\": " +
                                vr.violations.front().message);
  return *vr.poset;
}

PosetDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::bad_input, "document root must be an object");
  reject_unknown_keys(j, {"name", "field", "elements", "covers"}, "document root");

  PosetDocument doc;
  doc.name = require_string(j, "name", "document root");
  check(!doc.name.empty(), errc::bad_input, "document name must be nonempty");
  if (j.contains("field"))
    doc.field = FieldSpec::parse(require_string(j, "field", "document root"));

  if (!j.contains("elements") || !j["elements"].is_array())
    fail(errc::bad_input, "document root needs an \"elements\" array");
  for (const auto& e : j["elements"]) {
    if (!e.is_object()) fail(errc::bad_input, "elements entries must be objects");
    reject_unknown_keys(e, {"id", "rank"}, "element entry");
    std::string id = require_string(e, "id", "element entry");
    check(id != "*", errc::bad_input, "the base point \"*\" is implicit and"
                                      " may not be listed");
    if (!e.contains("rank") || !e["rank"].is_number_integer())
      fail(errc::bad_input, "element \"" + id + "\" needs an integer rank");
    int rank = e["rank"].get<int>();
    check(rank >= 1, errc::bad_input,
          "element \"" + id + "\" has rank " + std::to_string(rank) +
              " but listed ranks start at 1");
    doc.elements.push_back({id, rank});
  }

  if (!j.contains("covers") || !j["covers"].is_array())
    fail(errc::bad_input, "document root needs a \"covers\" array");
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(errc::bad_input, "covers entries must be [upper, lower] id pairs");
    doc.covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
  }
  return doc;
}

nlohmann::ordered_json document_to_json(const PosetDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["field"] = doc.field.tag();
  j["elements"] = Json::array();
  for (const auto& [id, rank] : doc.elements) {
    Json e;
    e["id"] = id;
    e["rank"] = rank;
    j["elements"].push_back(std::move(e));
  }
  j["covers"] = Json::array();
  for (const auto& [up, lo] : doc.covers) j["covers"].push_back({up, lo});
  return j;
}

std::string serialize_document(const PosetDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

PosetDocument load_document(const std::string& path) {
  const std::string prefix = "fixture:";
  if (path.rfind(prefix, 0) == 0) {
    std::string name = path.substr(prefix.size());
    return PosetDocument::of(fixture(name), name);
  }
  std::ifstream in(path, std::ios::binary);
  check(in.good(), errc::bad_input, "cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

} // namespace pk::harness
