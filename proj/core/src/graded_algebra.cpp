#include "pk/graded_algebra.hpp"

namespace pk {

std::vector<std::vector<int>> chain_words(const RankedPoset& p, int d) {
  check(d >= 0, errc::bad_input, "negative degree");
  std::vector<std::vector<int>> words = {{}};
  for (int step = 0; step < d; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      if (w.empty()) {
        for (int x = 1; x < p.size(); ++x) next.push_back({x});
        continue;
      }
      for (int y : p.lower(w.back())) {
        if (y == p.star()) continue;
        auto ext = w;
        ext.push_back(y);
        next.push_back(std::move(ext));
      }
    }
    words = std::move(next);
  }
  return words;
}

} // namespace pk
