#pragma once

#include <map>
#include <vector>

#include "pk/complex.hpp"
#include "pk/matrix.hpp"
#include "pk/poset.hpp"

namespace pk {

/* The simplicial complex of chains of a subposet. A face of size k (elements
 * listed in increasing rank) is a simplex of dimension k - 1; the empty face
 * is kept so the reduced complex starts in degree -1. */
class OrderComplex {
public:
  explicit OrderComplex(const Subposet& s);

  /* Largest face size (0 for the empty subposet). */
  int max_size() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<std::vector<int>>& faces(int size) const {
    return faces_[size];
  }
  int face_index(int size, const std::vector<int>& c) const;

  /* Reduced cochain complex: degrees -1 .. max_size - 1. */
  template <class F>
  CochainComplex<F> reduced_cochain(F f) const {
    CochainComplex<F> cx;
    cx.lo = -1;
    for (int s = 0; s <= max_size(); ++s)
      cx.dims.push_back(static_cast<int>(faces_[s].size()));
    for (int s = 0; s + 1 <= max_size(); ++s) cx.d.push_back(coboundary(f, s));
    return cx;
  }

  /* Plain cochain complex: degrees 0 .. max_size - 1; empty when there are
   * no vertices. */
  template <class F>
  CochainComplex<F> cochain(F f) const {
    CochainComplex<F> cx;
    cx.lo = 0;
    for (int s = 1; s <= max_size(); ++s)
      cx.dims.push_back(static_cast<int>(faces_[s].size()));
    for (int s = 1; s + 1 <= max_size(); ++s) cx.d.push_back(coboundary(f, s));
    return cx;
  }

  /* Matrix of the coboundary from size-s faces to size-(s+1) faces. */
  template <class F>
  Matrix<F> coboundary(F f, int s) const {
    const auto& src = faces_[s];
    const auto& dst = faces_[s + 1];
    Matrix<F> m(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t r = 0; r < dst.size(); ++r) {
      const auto& tau = dst[r];
      for (size_t i = 0; i < tau.size(); ++i) {
        std::vector<int> sigma;
        for (size_t j = 0; j < tau.size(); ++j)
          if (j != i) sigma.push_back(tau[j]);
        int c = face_index(s, sigma);
        auto sign = (i % 2 == 0) ? f.one() : f.neg(f.one());
        m.at(static_cast<int>(r), c) = f.add(m.at(static_cast<int>(r), c), sign);
      }
    }
    return m;
  }

private:
  std::vector<std::vector<std::vector<int>>> faces_; // by size; [0] = {{}}
  std::vector<std::map<std::vector<int>, int>> index_;
};

/* Dimensions of the reduced cohomology of the chain complex of s. */
template <class F>
ComplexDims reduced_cohomology(F f, const Subposet& s) {
  OrderComplex oc(s);
  return cohomology_of(f, oc.reduced_cochain(f));
}

} // namespace pk
