#include "pk/fixtures.hpp"

#include <algorithm>

namespace pk {

namespace {

RankedPoset chain3() {
  return RankedPoset::from_parts({{"a", 1}, {"b", 2}, {"c", 3}},
                                 {{"b", "a"}, {"c", "b"}});
}

RankedPoset diamond() {
  return RankedPoset::from_parts({{"a", 1}, {"b", 1}, {"t", 2}},
                                 {{"t", "a"}, {"t", "b"}});
}

RankedPoset pinch() {
  return RankedPoset::from_parts(
      {{"a", 1}, {"b", 1}, {"u", 2}, {"v", 2}, {"t", 3}},
      {{"u", "a"}, {"v", "b"}, {"t", "u"}, {"t", "v"}});
}

RankedPoset cycle4() {
  return RankedPoset::from_parts(
      {{"a", 1}, {"b", 1}, {"u", 2}, {"v", 2}, {"t", 3}},
      {{"u", "a"}, {"u", "b"}, {"v", "a"}, {"v", "b"}, {"t", "u"}, {"t", "v"}});
}

} // namespace

RankedPoset fixture(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (key == "chain3") return chain3();
  if (key == "diamond") return diamond();
  if (key == "pinch") return pinch();
  if (key == "cycle4") return cycle4();
  if (key == "wedge") return adjoin_top(wedge(cycle4(), cycle4()));
  fail(errc::unknown_id, "unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"chain3", "cycle4", "diamond", "pinch", "wedge"};
}

} // namespace pk
