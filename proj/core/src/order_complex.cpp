#include "pk/order_complex.hpp"

#include <algorithm>

namespace pk {

OrderComplex::OrderComplex(const Subposet& s) {
  const RankedPoset& p = *s.parent;
  std::vector<int> verts = s.members;
  // Comparable elements have distinct ranks, so rank order sorts each chain.
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    return std::make_pair(p.rank_of(a), a) < std::make_pair(p.rank_of(b), b);
  });

  faces_.push_back({{}});
  std::vector<std::vector<int>> frontier = {{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& chain : frontier)
      for (int v : verts) {
        if (!chain.empty() && !p.lt(chain.back(), v)) continue;
        auto ext = chain;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    faces_.push_back(next);
    frontier = std::move(next);
  }

  index_.resize(faces_.size());
  for (size_t k = 0; k < faces_.size(); ++k)
    for (size_t i = 0; i < faces_[k].size(); ++i)
      index_[k][faces_[k][i]] = static_cast<int>(i);
}

int OrderComplex::face_index(int size, const std::vector<int>& c) const {
  auto it = index_[size].find(c);
  check(it != index_[size].end(), errc::bad_input, "unknown face");
  return it->second;
}

} // namespace pk
