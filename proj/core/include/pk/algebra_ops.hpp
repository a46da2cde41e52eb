#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pk/criteria.hpp"
#include "pk/graded_algebra.hpp"
#include "pk/matrix.hpp"
#include "pk/order_complex.hpp"

namespace pk {

/* Per-degree comparison of the right annihilator of r_W = sum_{s in W} r_s
 * with the right ideal generated by the annihilator's degree-1 part. The
 * ideal is always contained in the annihilator; `equal` records whether
 * they coincide in every degree. The ideal is additionally recomputed from
 * the class decomposition of the degree-1 kernel (one indicator vector per
 * simW class) and the two computations must agree. */
struct AnnihilatorReport {
  std::vector<std::string> w_ids;
  std::vector<int> rann_dims; // degree 0 .. poset rank
  std::vector<int> l_dims;
  bool equal = false;
  std::optional<int> first_failure;
  bool l_within_rann = false;
  bool closed_form_agrees = false;
};

namespace detail {

template <class F>
Vec<F> indicator_vec(const F& f, const GradedAlgebra<F>& a,
                     const std::vector<int>& xs) {
  Vec<F> q(a.poset().size() - 1, f.zero());
  for (int x : xs) q[x - 1] = f.one();
  return q;
}

template <class F>
void insert_columns(Echelon<F>& e, const Matrix<F>& m) {
  for (int j = 0; j < m.cols(); ++j) {
    Vec<F> col(m.rows(), m.field().zero());
    for (int i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
    e.insert(std::move(col));
  }
}

} // namespace detail

/* The algebra must be built to depth poset_rank + 1 so that multiplication
 * out of the top nonzero degree is available. */
template <class F>
AnnihilatorReport rann_vs_L(const F& f, const GradedAlgebra<F>& a,
                            const std::vector<int>& w) {
  const RankedPoset& p = a.poset();
  level_of(p, w);
  int top = p.poset_rank();
  check(a.max_degree() >= top + 1, errc::bad_input,
        "algebra too shallow for annihilator comparison");

  AnnihilatorReport rep;
  {
    std::vector<int> ws = w;
    std::sort(ws.begin(), ws.end());
    for (int x : ws) rep.w_ids.push_back(p.id(x));
  }

  Vec<F> qw = detail::indicator_vec(f, a, w);
  std::vector<std::vector<Vec<F>>> rann(top + 1);
  for (int d = 0; d <= top; ++d)
    rann[d] = kernel_basis(a.left_mul(qw, d));

  std::vector<Echelon<F>> lspan;
  for (int d = 0; d <= top; ++d) lspan.push_back(Echelon<F>(f, a.dim(d)));
  if (top >= 1)
    for (const auto& v : rann[1]) lspan[1].insert(v);
  for (int d = 2; d <= top; ++d)
    for (const auto& v : rann[1])
      detail::insert_columns(lspan[d], a.left_mul(v, d - 1));

  rep.equal = true;
  rep.l_within_rann = true;
  for (int d = 0; d <= top; ++d) {
    int rd = static_cast<int>(rann[d].size());
    int ld = lspan[d].rank();
    rep.rann_dims.push_back(rd);
    rep.l_dims.push_back(ld);
    if (rd != ld && !rep.first_failure) {
      rep.equal = false;
      rep.first_failure = d;
    }
    auto ech = echelon_of(f, a.dim(d), rann[d]);
    for (const auto& row : lspan[d].rows())
      if (!ech.contains(row)) rep.l_within_rann = false;
  }

  // Class-decomposition recomputation of the same ideal.
  rep.closed_form_agrees = true;
  auto classes = simW_classes(p, w);
  std::vector<Vec<F>> indicators;
  for (const auto& c : classes)
    indicators.push_back(detail::indicator_vec(f, a, c));
  if (top >= 1) {
    auto direct = echelon_of(f, a.dim(1), indicators);
    if (!(direct == lspan[1])) rep.closed_form_agrees = false;
  }
  for (int d = 2; d <= top; ++d) {
    Echelon<F> joint(f, a.dim(d));
    int part_sum = 0;
    for (const auto& ind : indicators) {
      auto m = a.left_mul(ind, d - 1);
      part_sum += rank(m);
      detail::insert_columns(joint, m);
    }
    if (part_sum != joint.rank() || !(joint == lspan[d]))
      rep.closed_form_agrees = false;
  }
  return rep;
}

/* Whether the positive part decomposes as the direct sum of the one-sided
 * pieces r_x R: in every degree d >= 1 the dimensions of the images of left
 * multiplication by the generators add up to dim R_d. */
template <class F>
bool strong_ideal_check(const F& f, const GradedAlgebra<F>& a) {
  const RankedPoset& p = a.poset();
  for (int d = 1; d <= p.poset_rank(); ++d) {
    int total = 0;
    for (int x = 1; x < p.size(); ++x)
      total += rank(a.left_mul(a.generator_vec(x), d - 1));
    if (total != a.dim(d)) return false;
  }
  return true;
}

struct KoszulWitness {
  std::string context; // maximal element whose ideal failed; empty = whole poset
  std::vector<std::string> w_ids;
  int degree = 0;
};

struct KoszulResult {
  bool koszul = true;
  std::vector<KoszulWitness> witnesses;
};

/* Koszulity decision through annihilator comparisons. A poset with a unique
 * maximal element is checked directly: every member of the recursive level
 * family (taken over all principal ideals) must have its annihilator ideal
 * linearly generated inside the full algebra. Otherwise the question
 * reduces to the maximal principal ideals. */
template <class F>
KoszulResult koszul_decide(const F& f, const RankedPoset& p) {
  KoszulResult res;
  if (p.positive_size() == 0) return res;
  if (p.is_cyclic()) {
    GradedAlgebra<F> a(f, p, p.poset_rank() + 1);
    for (const auto& w : t_family_union(p)) {
      auto rep = rann_vs_L(f, a, w);
      if (!rep.equal) {
        res.koszul = false;
        res.witnesses.push_back(
            {"", rep.w_ids, rep.first_failure.value_or(-1)});
      }
    }
    return res;
  }
  for (int x : p.maximal()) {
    auto sub = koszul_decide(f, principal_ideal(p, x));
    if (!sub.koszul) {
      res.koszul = false;
      for (auto wit : sub.witnesses) {
        wit.context = p.id(x);
        res.witnesses.push_back(std::move(wit));
      }
    }
  }
  return res;
}

/* Left multiplication R_q -> R_{p+q} by a fixed element of R_p given in
 * quotient coordinates. */
template <class F>
Matrix<F> left_mul_by(const F& f, const GradedAlgebra<F>& a, const Vec<F>& u,
                      int p, int q) {
  check(p >= 0 && q >= 0 && p + q <= a.max_degree(), errc::bad_input,
        "multiplication degree out of range");
  Matrix<F> m(f, a.dim(p + q), a.dim(q));
  if (p == 0) {
    for (int j = 0; j < a.dim(q); ++j) m.at(j, j) = u[0];
    return m;
  }
  const RankedPoset& world = a.poset();
  for (int j = 0; j < a.dim(q); ++j) {
    const auto& w = a.words(q)[a.basis_words(q)[j]];
    Vec<F> img(a.word_count(p + q), f.zero());
    for (int i = 0; i < a.dim(p); ++i) {
      if (f.is_zero(u[i])) continue;
      const auto& uw = a.words(p)[a.basis_words(p)[i]];
      if (!w.empty() && !world.has_cover(uw.back(), w.front())) continue;
      std::vector<int> cat = uw;
      cat.insert(cat.end(), w.begin(), w.end());
      int pos = a.word_index(p + q, cat);
      img[pos] = f.add(img[pos], u[i]);
    }
    Vec<F> col = a.project(p + q, std::move(img));
    for (int i = 0; i < a.dim(p + q); ++i) m.at(i, j) = col[i];
  }
  return m;
}

/* Bigraded ranks of a minimal graded free resolution of the trivial module,
 * out to homological degree `bound`. */
struct BettiTable {
  int bound = 0;
  std::vector<std::map<int, int>> beta; // beta[i][j] for i = 0 .. bound
  bool linear = false; // no beta[i][j] with j != i in 1 <= i <= bound
};

namespace detail {

template <class F>
int free_block_width(const GradedAlgebra<F>& a, int gen_deg, int j) {
  int d = j - gen_deg;
  if (d < 0 || d > a.max_degree()) return 0;
  return a.dim(d);
}

template <class F>
int free_dim(const GradedAlgebra<F>& a, const std::vector<int>& gens, int j) {
  int s = 0;
  for (int g : gens) s += free_block_width(a, g, j);
  return s;
}

/* Right multiplication of a free-module element by the generator of x,
 * raising the total degree from j - 1 to j. */
template <class F>
Vec<F> free_right_gen(const F& f, const GradedAlgebra<F>& a,
                      const std::vector<int>& gens, const Vec<F>& v, int j,
                      int x, std::map<std::pair<int, int>, Matrix<F>>& cache) {
  Vec<F> out(free_dim(a, gens, j), f.zero());
  int src = 0, dst = 0;
  for (int g : gens) {
    int sw = free_block_width(a, g, j - 1);
    int dw = free_block_width(a, g, j);
    if (sw > 0 && dw > 0) {
      int d = j - 1 - g;
      auto it = cache.find({x, d});
      if (it == cache.end())
        it = cache.emplace(std::make_pair(x, d),
                           a.right_mul(a.generator_vec(x), d))
                 .first;
      const Matrix<F>& m = it->second;
      for (int r = 0; r < dw; ++r) {
        if constexpr (std::is_same_v<F, PrimeField>) {
          if (f.p == 2) {
            std::uint32_t s = 0;
            for (int c = 0; c < sw; ++c) s ^= m.at(r, c) & v[src + c];
            out[dst + r] = s;
            continue;
          }
        }
        auto s = f.zero();
        for (int c = 0; c < sw; ++c)
          s = f.add(s, f.mul(m.at(r, c), v[src + c]));
        out[dst + r] = s;
      }
    }
    src += sw;
    dst += dw;
  }
  return out;
}

/* Degree-j block of the differential mapping the free module on the chosen
 * generators into the current one. Rows follow gdeg, columns g2. */
template <class F>
Matrix<F> syzygy_matrix(const F& f, const GradedAlgebra<F>& a,
                        const std::vector<int>& gdeg,
                        const std::vector<std::pair<int, Vec<F>>>& gens,
                        const std::vector<int>& g2, int j) {
  Matrix<F> m(f, free_dim(a, gdeg, j), free_dim(a, g2, j));
  int coff = 0;
  for (std::size_t ai = 0; ai < g2.size(); ++ai) {
    int ga = g2[ai];
    int cw = free_block_width(a, ga, j);
    if (cw == 0) continue;
    const Vec<F>& gvec = gens[ai].second;
    int roff = 0, goff = 0;
    for (int gb : gdeg) {
      int rw = free_block_width(a, gb, j);
      int gw = free_block_width(a, gb, ga);
      if (rw > 0 && gw > 0) {
        Vec<F> comp(gvec.begin() + goff, gvec.begin() + goff + gw);
        if (!vec_is_zero(f, comp)) {
          Matrix<F> mb = left_mul_by(f, a, comp, ga - gb, j - ga);
          for (int r = 0; r < rw; ++r)
            for (int c = 0; c < cw; ++c)
              m.at(roff + r, coff + c) = mb.at(r, c);
        }
      }
      roff += rw;
      goff += gw;
    }
    coff += cw;
  }
  return m;
}

/* Rank of the span of all degree-one right products of the kernel cut out
 * by the reduced block one degree down, inside the degree-j slice of the
 * free module on g2. Kernel vectors are streamed off the echelon one free
 * column at a time, and the scan stops once the span hits maxrank, so the
 * kernel basis is never materialized. */
template <class F>
int streamed_product_rank(const F& f, const GradedAlgebra<F>& a,
                          const std::vector<int>& g2, const Rref<F>& prev,
                          int j, int maxrank,
                          std::map<std::pair<int, int>, Matrix<F>>& cache) {
  const RankedPoset& p = a.poset();
  const int pcols = prev.mat.cols();
  std::vector<bool> is_pivot(pcols, false);
  for (int c : prev.pivots) is_pivot[c] = true;
  Echelon<F> span(f, free_dim(a, g2, j));
  for (int c = 0; c < pcols && span.rank() < maxrank; ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(pcols, f.zero());
    v[c] = f.one();
    for (int i = 0; i < prev.rank; ++i)
      v[prev.pivots[i]] = f.neg(prev.mat.at(i, c));
    for (int x = 1; x < p.size() && span.rank() < maxrank; ++x)
      span.insert(free_right_gen(f, a, g2, v, j, x, cache));
  }
  return span.rank();
}

} // namespace detail

template <class F>
BettiTable ext_prefix(const F& f, const RankedPoset& p, int bound,
                      int cap = 20000) {
  check(bound >= 1, errc::bad_input, "homological bound must be positive");
  int top = p.poset_rank();
  GradedAlgebra<F> a(f, p, top + 1);

  BettiTable table;
  table.bound = bound;
  table.beta.assign(bound + 1, {});
  table.beta[0][0] = 1;

  // When the augmentation ideal squares to zero the minimal resolution is
  // the bar complex: one generator per word, every step linear.
  if (a.dim(2) == 0) {
    table.linear = true;
    const long width = a.dim(1);
    long count = 1;
    for (int i = 1; i <= bound; ++i) {
      check(count <= std::numeric_limits<int>::max() / std::max(width, 1L),
            errc::bound_too_large,
            "resolution dimensions exceed the representable range");
      count *= width;
      if (count == 0) break;
      table.beta[i][i] = static_cast<int>(count);
    }
    return table;
  }

  // Start from the augmentation kernel inside the rank-1 free module.
  std::vector<int> gdeg{0};
  std::map<int, std::vector<Vec<F>>> kernel;
  for (int d = 1; d <= top && a.dim(d) > 0; ++d) {
    std::vector<Vec<F>> basis;
    for (int t = 0; t < a.dim(d); ++t) {
      Vec<F> e(a.dim(d), f.zero());
      e[t] = f.one();
      basis.push_back(std::move(e));
    }
    kernel[d] = std::move(basis);
  }

  for (int step = 1; step <= bound && !kernel.empty(); ++step) {
    // Minimal generators: kernel vectors not reachable from one degree down.
    std::vector<std::pair<int, Vec<F>>> gens;
    {
      std::map<std::pair<int, int>, Matrix<F>> cache;
      for (const auto& [j, vecs] : kernel) {
        Echelon<F> reach(f, detail::free_dim(a, gdeg, j));
        auto prev = kernel.find(j - 1);
        if (prev != kernel.end()) {
          bool full = false;
          for (const auto& v : prev->second) {
            for (int x = 1; x < p.size() && !full; ++x) {
              reach.insert(
                  detail::free_right_gen(f, a, gdeg, v, j, x, cache));
              full = reach.rank() == reach.dim();
            }
            if (full) break;
          }
        }
        if (reach.rank() < reach.dim())
          for (const auto& v : vecs)
            if (reach.insert(v)) gens.push_back({j, v});
      }
    }
    if (gens.empty()) break;
    for (const auto& [j, v] : gens) table.beta[step][j] += 1;
    if (step == bound) break;

    // Syzygies of the chosen generators.
    std::vector<int> g2;
    for (const auto& [j, v] : gens) g2.push_back(j);
    int lo = gens.front().first + 1;
    int hi = gens.back().first + top;

    if (step == bound - 1) {
      // The last step only needs generator counts. Ranks of the reduced
      // differential blocks give the kernel dimensions, and streamed
      // degree-one products give the reachable part, so the final kernels
      // are never materialized.
      std::map<std::pair<int, int>, Matrix<F>> cache;
      std::map<int, Rref<F>> reduced;
      std::map<int, int> kdim;
      for (int j = lo; j <= hi; ++j) {
        int rows = detail::free_dim(a, gdeg, j);
        int cols = detail::free_dim(a, g2, j);
        if (cols == 0) continue;
        check(rows <= cap && cols <= cap, errc::bound_too_large,
              "resolution dimensions exceed the configured cap");
        reduced[j] = rref(detail::syzygy_matrix(f, a, gdeg, gens, g2, j));
        kdim[j] = cols - reduced[j].rank;
      }
      for (const auto& [j, dk] : kdim) {
        if (dk == 0) continue;
        int reachable = 0;
        auto below = reduced.find(j - 1);
        auto dbelow = kdim.find(j - 1);
        if (below != reduced.end() && dbelow != kdim.end() &&
            dbelow->second > 0)
          reachable = detail::streamed_product_rank(f, a, g2, below->second,
                                                    j, dk, cache);
        if (dk > reachable) table.beta[bound][j] += dk - reachable;
      }
      break;
    }

    std::map<int, std::vector<Vec<F>>> next;
    for (int j = lo; j <= hi; ++j) {
      int rows = detail::free_dim(a, gdeg, j);
      int cols = detail::free_dim(a, g2, j);
      if (cols == 0) continue;
      check(rows <= cap && cols <= cap, errc::bound_too_large,
            "resolution dimensions exceed the configured cap");
      auto kb = kernel_basis(detail::syzygy_matrix(f, a, gdeg, gens, g2, j));
      if (!kb.empty()) next[j] = std::move(kb);
    }
    gdeg = std::move(g2);
    kernel = std::move(next);
  }

  table.linear = true;
  for (int i = 1; i <= bound; ++i)
    for (const auto& [j, c] : table.beta[i])
      if (j != i && c > 0) table.linear = false;
  return table;
}

/* Dimensional agreement between one generator's action on a leading-letter
 * block and window cohomology: for v of rank d+1 and 0 <= k <= d-1, the
 * rank of r_v . R(d-1, k) equals dim H~^{d-k-1} of the order complex of the
 * part strictly between the bottom and v in the depth-k truncated ideal. */
template <class F>
bool generator_block_matches_interval(const F& f, const GradedAlgebra<F>& a,
                                      int v, int k) {
  const RankedPoset& p = a.poset();
  check(v >= 1 && v < p.size(), errc::unknown_id, "no such element");
  int d = p.rank_of(v) - 1;
  check(k >= 0 && k <= d - 1, errc::bad_input,
        "window index outside [0, rank - 2]");
  int lhs = rank(a.generator_left_block(v, d - 1, k));

  auto trunc = truncate(principal_ideal(p, v), k);
  int vt = trunc.maximal().front();
  std::vector<int> mid;
  for (int i = 1; i < trunc.size(); ++i)
    if (i != vt) mid.push_back(i);
  auto dims = reduced_cohomology(f, Subposet{&trunc, mid, std::nullopt});
  int pos = (d - k - 1) - dims.lo;
  int rhs = (pos >= 0 && pos < static_cast<int>(dims.cohomology.size()))
                ? dims.cohomology[pos]
                : 0;
  return lhs == rhs;
}

} // namespace pk
