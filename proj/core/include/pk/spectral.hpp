#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pk/complex.hpp"
#include "pk/matrix.hpp"
#include "pk/order_complex.hpp"
#include "pk/poset.hpp"

namespace pk {

/* Page dimensions of the spectral sequence attached to the chain complex of
 * the positive part, filtered by the rank of a chain's top element. pages[r]
 * maps (p, q) to the dimension of the page-r entry there; zero entries are
 * not stored. The page-r differential moves (p, q) to (p - r, q + r + 1).
 * The sequence is constant from page filtration_top + 1 on, so the last two
 * stored pages should agree. */
struct SpectralPages {
  int filtration_top = 0;
  int complex_dim = 0; // top cochain degree of the chain complex
  std::vector<std::map<std::pair<int, int>, int>> pages;
  std::vector<int> h; // unreduced cohomology of the chain complex by degree
  bool e1_matches_intervals = true;
  bool stabilizes = true;
  bool converges = true;

  bool ok() const { return e1_matches_intervals && stabilizes && converges; }

  int dim(int r, int p, int q) const {
    if (r < 0 || r >= static_cast<int>(pages.size())) return 0;
    auto it = pages[r].find({p, q});
    return it == pages[r].end() ? 0 : it->second;
  }

  /* Total dimension of the final stored page in total degree n. */
  int limit_total(int n) const {
    int t = 0;
    for (int p = 0; p <= filtration_top; ++p)
      t += dim(static_cast<int>(pages.size()) - 1, p, n - p);
    return t;
  }

  /* Rank of the page-r differential leaving (p, q), recovered from the
   * dimension drop between pages r and r + 1 along the arrow line through
   * (p, q). Zero for r at or past the last stored page: from the stable
   * page on every differential vanishes. */
  int d_rank(int r, int p, int q) const {
    if (r < 0 || r + 1 >= static_cast<int>(pages.size())) return 0;
    if (dim(r, p, q) == 0) return 0;
    int t = 0;
    while (dim(r, p + (t + 1) * r, q - (t + 1) * (r + 1)) > 0) ++t;
    int out = 0;
    for (; t >= 0; --t) {
      int pp = p + t * r;
      int qq = q - t * (r + 1);
      out = dim(r, pp, qq) - dim(r + 1, pp, qq) - out;
    }
    return out;
  }
};

/* Spectral sequence of the top-element-rank filtration on the cochain
 * complex of chains of the positive part. With Z(r, p, n) the subspace of
 * filtration-p n-cochains whose coboundary lies r filtration steps lower,
 * the page-r entry at (p, q), n = p + q, is Z(r, p, n) modulo
 * Z(r-1, p-1, n) + d Z(r-1, p+r-1, n-1); only dimensions are kept. Pages
 * run two steps past the guaranteed-stable index so stabilization is
 * visible in the result. */
template <class F>
SpectralPages spectral_sequence(F f, const RankedPoset& p) {
  SpectralPages out;
  const int m = p.poset_rank() - 1;
  out.filtration_top = m;
  OrderComplex oc(positive_part(p));
  CochainComplex<F> cx = oc.cochain(f);
  const int top = static_cast<int>(cx.dims.size()) - 1;
  out.complex_dim = top;
  out.h = cohomology_of(f, cx).cohomology;
  out.pages.assign(m + 3, {});

  std::vector<std::vector<int>> toprank(oc.max_size() + 1);
  for (int s = 1; s <= oc.max_size(); ++s)
    for (const auto& c : oc.faces(s)) toprank[s].push_back(p.rank_of(c.back()));

  std::map<std::tuple<int, int, int>, std::vector<Vec<F>>> zs;
  const std::vector<Vec<F>> nothing;
  auto zbasis = [&](int r, int fp, int n) -> const std::vector<Vec<F>>& {
    if (fp < 0 || n < 0 || n > top) return nothing;
    if (fp > m) { // cap the ambient level but keep the target level fp - r
      r -= fp - m;
      fp = m;
    }
    if (r < 0) r = 0;
    auto key = std::make_tuple(r, fp, n);
    auto hit = zs.find(key);
    if (hit != zs.end()) return hit->second;
    std::vector<int> cols;
    for (int i = 0; i < cx.dims[n]; ++i)
      if (toprank[n + 1][i] >= m + 1 - fp) cols.push_back(i);
    std::vector<int> rows; // target coordinates outside the lower filtration
    if (n < top)
      for (int i = 0; i < cx.dims[n + 1]; ++i)
        if (toprank[n + 2][i] < m + 1 - (fp - r)) rows.push_back(i);
    std::vector<Vec<F>> basis;
    if (rows.empty()) {
      for (int c : cols) {
        Vec<F> v(cx.dims[n], f.zero());
        v[c] = f.one();
        basis.push_back(std::move(v));
      }
    } else {
      Matrix<F> sub(f, static_cast<int>(rows.size()),
                    static_cast<int>(cols.size()));
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
          sub.at(static_cast<int>(a), static_cast<int>(b)) =
              cx.d[n].at(rows[a], cols[b]);
      for (const Vec<F>& k : kernel_basis(sub)) {
        Vec<F> v(cx.dims[n], f.zero());
        for (std::size_t b = 0; b < cols.size(); ++b) v[cols[b]] = k[b];
        basis.push_back(std::move(v));
      }
    }
    return zs.emplace(key, std::move(basis)).first->second;
  };

  for (int r = 0; r <= m + 2; ++r) {
    for (int fp = 0; fp <= m; ++fp) {
      for (int n = 0; n <= top; ++n) {
        const auto& znum = zbasis(r, fp, n);
        if (znum.empty()) continue;
        Echelon<F> den(f, cx.dims[n]);
        for (const Vec<F>& v : zbasis(r - 1, fp - 1, n)) den.insert(v);
        for (const Vec<F>& v : zbasis(r - 1, fp + r - 1, n - 1)) {
          Vec<F> w(cx.dims[n], f.zero());
          for (int i = 0; i < cx.dims[n]; ++i) {
            auto acc = f.zero();
            for (int j = 0; j < cx.dims[n - 1]; ++j)
              acc = f.add(acc, f.mul(cx.d[n - 1].at(i, j), v[j]));
            w[i] = acc;
          }
          den.insert(std::move(w));
        }
        int e = static_cast<int>(znum.size()) - den.rank();
        if (e > 0) out.pages[r][{fp, n - fp}] = e;
      }
    }
  }

  // first page against interval cohomology below each element
  for (int fp = 0; fp <= m && out.e1_matches_intervals; ++fp) {
    std::vector<int> want(static_cast<std::size_t>(top + 2), 0);
    for (int x = 1; x < p.size(); ++x) {
      if (p.rank_of(x) != m + 1 - fp) continue;
      ComplexDims cd = reduced_cohomology(f, open_interval(p, 0, x));
      for (int n = 0; n <= top; ++n) want[n] += cohomology_dim_at(cd, n - 1);
    }
    for (int n = 0; n <= top; ++n)
      if (want[n] != out.dim(1, fp, n - fp)) out.e1_matches_intervals = false;
  }

  out.stabilizes = out.pages[m + 1] == out.pages[m + 2];
  for (int n = 0; n <= top; ++n)
    if (out.limit_total(n) != out.h[n]) out.converges = false;
  return out;
}

} // namespace pk
