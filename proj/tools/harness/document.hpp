#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pk/field.hpp"
#include "pk/poset.hpp"

namespace pk::harness {

/* On-disk description of a poset: the positive elements with their ranks and
 * the covers between them. The base point "*" stays implicit; every rank-1
 * element is understood to cover it. */
struct PosetDocument {
  std::string name;
  FieldSpec field; // default coefficient field for analyses
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers; // (upper, lower)

  static PosetDocument of(const RankedPoset& p, const std::string& name,
                          const FieldSpec& field = FieldSpec::rational());

  RawPoset to_raw() const;
  /* Validated poset; throws with the first violation on bad data. */
  RankedPoset build() const;
};

/* Strict JSON reader: unknown keys at any level, missing required keys,
 * ill-typed values, ranks below 1 and the reserved id "*" are all errors. */
PosetDocument parse_document(const std::string& text);

/* Canonical serialization. Feeding the result back through parse_document
 * reproduces the document, and serializing again is byte-identical. */
std::string serialize_document(const PosetDocument& doc);

/* The same canonical rendering as an in-memory JSON value. */
nlohmann::ordered_json document_to_json(const PosetDocument& doc);

/* Reads a document from a file path, or from a built-in example when the
 * path has the form "fixture:<name>". */
PosetDocument load_document(const std::string& path);

} // namespace pk::harness
