#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pk/complex.hpp"
#include "pk/criteria.hpp"
#include "pk/graded_algebra.hpp"
#include "pk/matrix.hpp"
#include "pk/order_complex.hpp"
#include "pk/poset.hpp"

namespace pk {

/* One summand of a layer complex: an element x together with the full
 * chains strictly below it inside the subposet (listed in increasing rank;
 * a layer-0 element carries the single empty chain) and the quotient of
 * their cochain space by the coboundary image from one chain size down. */
template <class F>
struct LayerSummand {
  int element;
  std::vector<std::vector<int>> chains;
  std::vector<Vec<F>> boundaries;
  Quotient<F> space;
};

/* The layer complex of a rank-convex subposet: position j collects the
 * summands of the elements on relative layer j (bottom layer = 0), and the
 * differential pushes a chain class under x to every upper cover of x that
 * stays inside the subposet, extending the chain by x itself. */
template <class F>
struct LayerComplex {
  const RankedPoset* parent = nullptr;
  int base_rank = 0;
  std::vector<std::vector<LayerSummand<F>>> layers;
  std::vector<int> dims;
  std::vector<Matrix<F>> d;

  CochainComplex<F> cochain() const { return {0, dims, d}; }
};

namespace detail {

template <class F>
int matrix_rank(F f, const Matrix<F>& m) {
  Echelon<F> e(f, m.rows());
  for (int c = 0; c < m.cols(); ++c) {
    Vec<F> v(m.rows(), f.zero());
    for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
    e.insert(v);
  }
  return e.rank();
}

} // namespace detail

/* Build the layer complex of s. Members must have every lower cover above
 * the bottom layer inside s, which holds for positive parts, truncations
 * and level-set windows. The build checks that the differential descends
 * to the quotients (boundary images land in boundary spaces). */
template <class F>
LayerComplex<F> s_complex(F f, const Subposet& s) {
  check(s.parent != nullptr && !s.members.empty(), errc::empty_argument,
        "layer complex of an empty poset");
  const RankedPoset& p = *s.parent;
  std::vector<char> in_s(p.size(), 0);
  for (int x : s.members) in_s[x] = 1;
  std::vector<int> ms = s.members;
  std::sort(ms.begin(), ms.end());
  int base = p.rank_of(ms.front()), top = base;
  for (int x : ms) {
    base = std::min(base, p.rank_of(x));
    top = std::max(top, p.rank_of(x));
  }

  LayerComplex<F> out;
  out.parent = &p;
  out.base_rank = base;
  out.layers.resize(top - base + 1);
  std::vector<std::map<std::vector<int>, int>> chain_index(p.size());
  std::vector<int> offset(p.size(), 0);

  for (int x : ms) {
    int j = p.rank_of(x) - base;
    std::vector<int> bx;
    for (int z : ms)
      if (p.lt(z, x)) bx.push_back(z);
    OrderComplex oc(Subposet{&p, bx, std::nullopt});
    std::vector<std::vector<int>> chains;
    std::vector<Vec<F>> boundaries;
    if (j <= oc.max_size()) {
      chains = oc.faces(j);
      if (j >= 1) {
        Matrix<F> cob = oc.coboundary(f, j - 1);
        for (int c = 0; c < cob.cols(); ++c) {
          Vec<F> g(cob.rows(), f.zero());
          for (int r = 0; r < cob.rows(); ++r) g[r] = cob.at(r, c);
          boundaries.push_back(std::move(g));
        }
      }
    }
    int n = static_cast<int>(chains.size());
    std::vector<Vec<F>> numerator;
    for (int i = 0; i < n; ++i) {
      Vec<F> e(n, f.zero());
      e[i] = f.one();
      numerator.push_back(std::move(e));
    }
    Quotient<F> space(f, n, numerator, boundaries);
    for (int i = 0; i < n; ++i) chain_index[x][chains[i]] = i;
    out.layers[j].push_back(LayerSummand<F>{x, std::move(chains),
                                            std::move(boundaries),
                                            std::move(space)});
  }

  out.dims.assign(out.layers.size(), 0);
  for (size_t j = 0; j < out.layers.size(); ++j)
    for (const auto& sm : out.layers[j]) {
      offset[sm.element] = out.dims[j];
      out.dims[j] += sm.space.dim();
    }

  for (size_t j = 0; j + 1 < out.layers.size(); ++j) {
    Matrix<F> m(f, out.dims[j + 1], out.dims[j]);
    for (const auto& sx : out.layers[j]) {
      auto push_to = [&](const LayerSummand<F>& sy, const Vec<F>& v) {
        Vec<F> w(sy.chains.size(), f.zero());
        for (size_t ci = 0; ci < v.size(); ++ci) {
          if (f.is_zero(v[ci])) continue;
          std::vector<int> ext = sx.chains[ci];
          ext.push_back(sx.element);
          w[chain_index[sy.element].at(ext)] = v[ci];
        }
        return sy.space.coords(w);
      };
      for (int y : p.upper(sx.element)) {
        if (!in_s[y]) continue;
        const LayerSummand<F>* sy = nullptr;
        for (const auto& cand : out.layers[j + 1])
          if (cand.element == y) sy = &cand;
        for (const auto& g : sx.boundaries)
          check(vec_is_zero(f, push_to(*sy, g)), errc::composite_not_zero,
                "layer differential does not descend to the quotient at " +
                    p.id(y));
        for (int i = 0; i < sx.space.dim(); ++i) {
          Vec<F> c = push_to(*sy, sx.space.rep(i));
          for (size_t t = 0; t < c.size(); ++t)
            m.at(offset[sy->element] + static_cast<int>(t),
                 offset[sx.element] + i) = c[t];
        }
      }
    }
    out.d.push_back(std::move(m));
  }
  return out;
}

struct PsiReport {
  int k = 0;
  std::vector<int> s_dims;
  std::vector<int> block_dims;
  bool well_defined = true;
  bool commutes = true;
  bool bijective = true;

  bool ok() const { return well_defined && commutes && bijective; }
};

/* Compare the layer complex of the elements above depth k against the
 * leading-rank block complex R(k + j, k): the comparison map sends a chain
 * class under x to the word that reads x and then the chain downward. The
 * report records whether the map kills boundary classes, intertwines the
 * two differentials, and is bijective in every position. */
template <class F>
PsiReport psi_check(F f, const RankedPoset& p, int k) {
  check(k >= 0 && k < p.poset_rank(), errc::bad_input,
        "truncation depth " + std::to_string(k) + " outside [0, " +
            std::to_string(p.poset_rank() - 1) + "]");
  std::vector<int> mem;
  for (int x = 1; x < p.size(); ++x)
    if (p.rank_of(x) > k) mem.push_back(x);
  auto sc = s_complex(f, Subposet{&p, mem, std::nullopt});
  GradedAlgebra<F> a(f, p, p.poset_rank() - k + 1);

  PsiReport rep;
  rep.k = k;
  const int layers = static_cast<int>(sc.layers.size());
  std::vector<Matrix<F>> psi;
  for (int j = 0; j < layers; ++j) {
    rep.s_dims.push_back(sc.dims[j]);
    rep.block_dims.push_back(a.block_dim(k + j, k));
    Matrix<F> m(f, a.block_dim(k + j, k), sc.dims[j]);
    int col = 0;
    for (const auto& sm : sc.layers[j]) {
      auto word_image = [&](const Vec<F>& v) {
        Vec<F> acc(a.dim(j + 1), f.zero());
        for (size_t ci = 0; ci < v.size(); ++ci) {
          if (f.is_zero(v[ci])) continue;
          std::vector<int> word;
          word.push_back(sm.element);
          const auto& ch = sm.chains[ci];
          word.insert(word.end(), ch.rbegin(), ch.rend());
          Vec<F> pw = a.project_word(j + 1, word);
          for (size_t t = 0; t < acc.size(); ++t)
            acc[t] = f.add(acc[t], f.mul(v[ci], pw[t]));
        }
        return a.block_restrict(k + j, k, acc);
      };
      for (const auto& g : sm.boundaries)
        if (!vec_is_zero(f, word_image(g))) rep.well_defined = false;
      for (int i = 0; i < sm.space.dim(); ++i) {
        Vec<F> cvec = word_image(sm.space.rep(i));
        for (size_t t = 0; t < cvec.size(); ++t)
          m.at(static_cast<int>(t), col) = cvec[t];
        ++col;
      }
    }
    psi.push_back(std::move(m));
  }

  for (int j = 0; j + 1 < layers; ++j)
    if (!(mat_mul(psi[j + 1], sc.d[j]) ==
          mat_mul(a.block_differential(k + j, k), psi[j])))
      rep.commutes = false;
  for (int j = 0; j < layers; ++j) {
    if (rep.s_dims[j] != rep.block_dims[j] ||
        detail::matrix_rank(f, psi[j]) != rep.s_dims[j])
      rep.bijective = false;
  }
  return rep;
}

/* Cohomology dimension of the window layer complex at position k - 1; this
 * is the quantity whose vanishing the weak Cohen-Macaulay decision tests. */
template <class F>
int window_cohomology(F f, const RankedPoset& p, const std::vector<int>& w,
                      int k) {
  auto cd = cohomology_of(f, s_complex(f, layer_window(p, w, k)).cochain());
  return cohomology_dim_at(cd, k - 1);
}

enum class KPolicy { derived, literal };

struct WeakCmWitness {
  std::string element;
  int level = 0;
  std::vector<std::string> w_ids;
  int k = 0;
};

struct WeakCmResult {
  bool weakly_cm = true;
  std::vector<WeakCmWitness> witnesses;
};

/* Decide weak Cohen-Macaulayness: for every element x, every level n of
 * its principal ideal and every maximally linked set W on that level, the
 * window cohomology must vanish for each depth k the policy selects. The
 * derived policy tests 2 <= k <= n - 1; the literal policy tests
 * 0 <= k <= n - 1, where k = 0 is vacuous and k = 1 carries a kernel in
 * the bottom position that is nonzero even on well-behaved posets. */
template <class F>
WeakCmResult weakly_cm(F f, const RankedPoset& p,
                       KPolicy policy = KPolicy::derived) {
  require_cyclic(p, "weak Cohen-Macaulay decision");
  WeakCmResult out;
  std::map<std::pair<std::vector<std::string>, int>, bool> cache;
  for (int x = 1; x < p.size(); ++x) {
    RankedPoset ideal = principal_ideal(p, x);
    LevelSetFamily fam = tm_sets(ideal);
    for (int n = 1; n <= ideal.poset_rank(); ++n) {
      for (const auto& w : fam.m[n]) {
        std::vector<int> wg;
        wg.reserve(w.size());
        for (int i : w) wg.push_back(p.index(ideal.id(i)));
        std::sort(wg.begin(), wg.end());
        std::vector<std::string> ids;
        for (int g : wg) ids.push_back(p.id(g));
        int klo = policy == KPolicy::derived ? 2 : 0;
        for (int k = klo; k <= n - 1; ++k) {
          auto key = std::make_pair(ids, k);
          auto it = cache.find(key);
          bool vanishes;
          if (it != cache.end()) {
            vanishes = it->second;
          } else {
            vanishes = window_cohomology(f, p, wg, k) == 0;
            cache.emplace(key, vanishes);
          }
          if (!vanishes) out.witnesses.push_back({p.id(x), n, ids, k});
        }
      }
    }
  }
  out.weakly_cm = out.witnesses.empty();
  return out;
}

struct WindowIdealDims {
  int window_cohomology = 0;
  int ideal_cohomology = 0;
};

/* Two independent computations of the same cohomology dimension for a
 * level-n set W and 2 <= k <= n - 1: the window layer complex at position
 * k - 1, and the leading-rank block complex of the joint ideal of W in
 * tail degree n - k - 1 at position n - 2. */
template <class F>
WindowIdealDims window_vs_ideal(F f, const RankedPoset& p,
                                const std::vector<int>& w, int k) {
  int n = level_of(p, w);
  check(k >= 2 && k <= n - 1, errc::bad_input,
        "window comparison needs 2 <= k < level");
  WindowIdealDims out;
  out.window_cohomology = window_cohomology(f, p, w, k);

  RankedPoset bw = below(p, w);
  int tail = n - k - 1;
  GradedAlgebra<F> a(f, bw, k + 1);
  CochainComplex<F> cx;
  cx.lo = tail;
  for (int q = tail; q <= n - 1; ++q) cx.dims.push_back(a.block_dim(q, tail));
  for (int q = tail; q <= n - 2; ++q) cx.d.push_back(a.block_differential(q, tail));
  out.ideal_cohomology = cohomology_dim_at(cohomology_of(f, cx), n - 2);
  return out;
}

} // namespace pk
