#pragma once

#include <string>
#include <vector>

#include "pk/order_complex.hpp"
#include "pk/poset.hpp"

namespace pk {

/* A reduced-cohomology class that breaks concentration in the top degree:
 * the open interval (lower, upper) has dim H^degree = dim != 0 with degree
 * below rank(upper) - rank(lower) - 2. */
struct CmWitness {
  std::string lower, upper;
  int degree = 0;
  int dim = 0;
};

struct CmResult {
  bool cm = false;
  std::vector<CmWitness> witnesses;
};

/* Interval form: every open interval (a, b), a < b, has reduced cohomology
 * concentrated in degree rank(b) - rank(a) - 2. Cyclic posets only. */
template <class F>
CmResult is_cm(F f, const RankedPoset& p) {
  require_cyclic(p, "Cohen-Macaulay check");
  CmResult res{true, {}};
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.lt(a, b)) continue;
      int top = p.rank_of(b) - p.rank_of(a) - 2;
      auto h = reduced_cohomology(f, open_interval(p, a, b));
      for (size_t i = 0; i < h.cohomology.size(); ++i) {
        int degree = h.lo + static_cast<int>(i);
        if (degree == top || h.cohomology[i] == 0) continue;
        res.cm = false;
        res.witnesses.push_back({p.id(a), p.id(b), degree, h.cohomology[i]});
      }
    }
  return res;
}

/* A low-degree cohomology class of the depth-k window under an element. */
struct WindowWitness {
  std::string element;
  int window = 0;
  int degree = 0;
  int dim = 0;
};

struct WindowCmResult {
  bool cm = false;
  std::vector<WindowWitness> witnesses;
};

/* Window form: for every positive x and 1 <= k <= rank(x), the window of
 * depth k under x has no reduced cohomology below degree k - 2. */
template <class F>
WindowCmResult is_cm_alt(F f, const RankedPoset& p) {
  require_cyclic(p, "Cohen-Macaulay check");
  WindowCmResult res{true, {}};
  for (int x = 1; x < p.size(); ++x)
    for (int k = 1; k <= p.rank_of(x); ++k) {
      auto h = reduced_cohomology(f, gamma_ai(p, x, k));
      for (size_t i = 0; i < h.cohomology.size(); ++i) {
        int degree = h.lo + static_cast<int>(i);
        if (degree >= k - 2 || h.cohomology[i] == 0) continue;
        res.cm = false;
        res.witnesses.push_back({p.id(x), k, degree, h.cohomology[i]});
      }
    }
  return res;
}

/* Hilbert series coefficients recovered from window cohomology alone:
 * coefficient 0 is 1 and coefficient i sums dim H~^{i-2} of the depth-i
 * window under every element of rank >= i. Agrees with the dimension
 * count read off the algebra itself. */
template <class F>
std::vector<long> hilbert_via_cohomology(F f, const RankedPoset& p) {
  std::vector<long> h{1};
  for (int i = 1; i <= p.poset_rank(); ++i) {
    long c = 0;
    for (int a = 1; a < p.size(); ++a) {
      if (p.rank_of(a) < i) continue;
      auto dims = reduced_cohomology(f, gamma_ai(p, a, i));
      int pos = (i - 2) - dims.lo;
      if (pos >= 0 && pos < static_cast<int>(dims.cohomology.size()))
        c += dims.cohomology[pos];
    }
    h.push_back(c);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

} // namespace pk
