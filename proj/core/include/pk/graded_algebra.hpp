#pragma once

#include <map>
#include <vector>

#include "pk/complex.hpp"
#include "pk/matrix.hpp"
#include "pk/poset.hpp"

namespace pk {

/* All covering-chain words of the given length (letters left to right, each
 * covering the next, none equal to "*"), in lexicographic index order. */
std::vector<std::vector<int>> chain_words(const RankedPoset& p, int d);

/* The graded quadratic algebra of a poset, one generator per positive
 * element. Degree-d components are spanned by covering-chain words; the
 * quadratic relations say that each generator kills every non-cover and
 * that the signed sum over the covers of a rank >= 2 generator vanishes.
 * Padding those relations with chain words gives the full degree-d relation
 * space, and the quotient basis is the set of non-pivot words. */
template <class F>
class GradedAlgebra {
public:
  GradedAlgebra(F f, const RankedPoset& p, int max_degree)
      : f_(f), p_(&p), degrees_() {
    for (int d = 0; d <= max_degree; ++d) degrees_.push_back(build_degree(d));
  }

  const RankedPoset& poset() const { return *p_; }
  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  int word_count(int d) const {
    return static_cast<int>(degrees_[d].words.size());
  }
  const std::vector<std::vector<int>>& words(int d) const {
    return degrees_[d].words;
  }
  int word_index(int d, const std::vector<int>& w) const {
    auto it = degrees_[d].index.find(w);
    check(it != degrees_[d].index.end(), errc::bad_input, "not a chain word");
    return it->second;
  }

  int dim(int d) const {
    if (d < 0 || d > max_degree()) return 0;
    return static_cast<int>(degrees_[d].basis_words.size());
  }
  /* Word indices of the quotient basis (non-pivot words). */
  const std::vector<int>& basis_words(int d) const {
    return degrees_[d].basis_words;
  }

  /* Canonical quotient coordinates of a vector in word coordinates. */
  Vec<F> project(int d, Vec<F> word_vec) const {
    const auto& deg = degrees_[d];
    word_vec = deg.relations.reduce(std::move(word_vec));
    Vec<F> out(deg.basis_words.size(), f_.zero());
    for (size_t i = 0; i < deg.basis_words.size(); ++i)
      out[i] = word_vec[deg.basis_words[i]];
    return out;
  }

  Vec<F> project_word(int d, const std::vector<int>& w) const {
    Vec<F> v(word_count(d), f_.zero());
    v[word_index(d, w)] = f_.one();
    return project(d, v);
  }

  /* Left multiplication by q = sum_x q[x - 1] r_x : R_d -> R_{d+1} in
   * quotient coordinates (q is indexed by positive elements). */
  Matrix<F> left_mul(const Vec<F>& q, int d) const {
    Matrix<F> m(f_, dim(d + 1), dim(d));
    for (int j = 0; j < dim(d); ++j) {
      const auto& w = degrees_[d].words[degrees_[d].basis_words[j]];
      Vec<F> img(word_count(d + 1), f_.zero());
      for (int x = 1; x < p_->size(); ++x) {
        if (f_.is_zero(q[x - 1])) continue;
        if (!w.empty() && !p_->has_cover(x, w.front())) continue;
        std::vector<int> xw;
        xw.push_back(x);
        xw.insert(xw.end(), w.begin(), w.end());
        int col = word_index(d + 1, xw);
        img[col] = f_.add(img[col], q[x - 1]);
      }
      set_column(m, j, project(d + 1, std::move(img)));
    }
    return m;
  }

  /* Right multiplication by q : R_d -> R_{d+1} in quotient coordinates. */
  Matrix<F> right_mul(const Vec<F>& q, int d) const {
    Matrix<F> m(f_, dim(d + 1), dim(d));
    for (int j = 0; j < dim(d); ++j) {
      const auto& w = degrees_[d].words[degrees_[d].basis_words[j]];
      Vec<F> img(word_count(d + 1), f_.zero());
      for (int x = 1; x < p_->size(); ++x) {
        if (f_.is_zero(q[x - 1])) continue;
        if (!w.empty() && !p_->has_cover(w.back(), x)) continue;
        std::vector<int> wx = w;
        wx.push_back(x);
        int col = word_index(d + 1, wx);
        img[col] = f_.add(img[col], q[x - 1]);
      }
      set_column(m, j, project(d + 1, std::move(img)));
    }
    return m;
  }

  Vec<F> generator_vec(int x) const {
    Vec<F> q(p_->size() - 1, f_.zero());
    q[x - 1] = f_.one();
    return q;
  }

  /* Positions (into the degree n-k+1 quotient basis) of the words led by a
   * rank n+1 letter. Relations never mix leading letters, so these positions
   * carry the canonical basis of the submodule R(n, k). */
  std::vector<int> block_positions(int n, int k) const {
    check(k >= 0 && k <= n, errc::bad_input, "block indices need 0 <= k <= n");
    int d = n - k + 1;
    std::vector<int> out;
    if (d > max_degree()) return out;
    const auto& deg = degrees_[d];
    for (size_t j = 0; j < deg.basis_words.size(); ++j)
      if (p_->rank_of(deg.words[deg.basis_words[j]].front()) == n + 1)
        out.push_back(static_cast<int>(j));
    return out;
  }

  int block_dim(int n, int k) const {
    return static_cast<int>(block_positions(n, k).size());
  }

  /* Restriction of degree n-k+1 quotient coordinates to the block. The
   * vector must be supported on the block (checked). */
  Vec<F> block_restrict(int n, int k, const Vec<F>& quot_vec) const {
    auto pos = block_positions(n, k);
    Vec<F> out(pos.size(), f_.zero());
    size_t pi = 0;
    for (size_t j = 0; j < quot_vec.size(); ++j) {
      if (pi < pos.size() && static_cast<int>(j) == pos[pi]) {
        out[pi++] = quot_vec[j];
      } else {
        check(f_.is_zero(quot_vec[j]), errc::bad_input,
              "vector leaves the leading-rank block");
      }
    }
    return out;
  }

  /* The differential R(n, k) -> R(n+1, k): prepend every positive cover of
   * the leading letter. */
  Matrix<F> block_differential(int n, int k) const {
    auto src = block_positions(n, k);
    auto dst = block_positions(n + 1, k);
    int d = n - k + 1;
    Matrix<F> m(f_, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    if (d + 1 > max_degree()) {
      check(dst.empty(), errc::bad_input, "algebra built too shallow");
      return m;
    }
    for (size_t j = 0; j < src.size(); ++j) {
      const auto& w =
          degrees_[d].words[degrees_[d].basis_words[src[j]]];
      Vec<F> img(word_count(d + 1), f_.zero());
      for (int z : p_->upper(w.front())) {
        std::vector<int> zw;
        zw.push_back(z);
        zw.insert(zw.end(), w.begin(), w.end());
        int col = word_index(d + 1, zw);
        img[col] = f_.add(img[col], f_.one());
      }
      set_column_positions(m, static_cast<int>(j), dst,
                           project(d + 1, std::move(img)));
    }
    return m;
  }

  /* Left multiplication by the generator of x restricted to blocks:
   * R(n, k) -> R(n+1, k), nonzero only when rank(x) = n + 2. */
  Matrix<F> generator_left_block(int x, int n, int k) const {
    auto src = block_positions(n, k);
    auto dst = block_positions(n + 1, k);
    int d = n - k + 1;
    Matrix<F> m(f_, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    if (p_->rank_of(x) != n + 2 || d + 1 > max_degree()) return m;
    for (size_t j = 0; j < src.size(); ++j) {
      const auto& w = degrees_[d].words[degrees_[d].basis_words[src[j]]];
      if (!p_->has_cover(x, w.front())) continue;
      Vec<F> img(word_count(d + 1), f_.zero());
      std::vector<int> xw;
      xw.push_back(x);
      xw.insert(xw.end(), w.begin(), w.end());
      img[word_index(d + 1, xw)] = f_.one();
      set_column_positions(m, static_cast<int>(j), dst,
                           project(d + 1, std::move(img)));
    }
    return m;
  }

private:
  struct Degree {
    std::vector<std::vector<int>> words;
    std::map<std::vector<int>, int> index;
    Echelon<F> relations;
    std::vector<int> basis_words; // non-pivot word indices, ascending
  };

  F f_;
  const RankedPoset* p_;
  std::vector<Degree> degrees_;

  Degree build_degree(int d) const {
    Degree deg{chain_words(*p_, d), {}, Echelon<F>(f_, 0), {}};
    for (size_t i = 0; i < deg.words.size(); ++i)
      deg.index[deg.words[i]] = static_cast<int>(i);
    deg.relations = Echelon<F>(f_, static_cast<int>(deg.words.size()));
    if (d >= 2) {
      for (int i = 1; i <= d - 1; ++i) {
        const auto& prefixes = degrees_[i].words;
        const auto& suffixes = degrees_[d - i - 1].words;
        for (const auto& pre : prefixes) {
          int x = pre.back();
          if (p_->rank_of(x) < 2) continue;
          for (const auto& suf : suffixes) {
            Vec<F> row(deg.words.size(), f_.zero());
            bool nonzero = false;
            for (int y : p_->lower(x)) {
              if (y == p_->star()) continue;
              if (!suf.empty() && !p_->has_cover(y, suf.front())) continue;
              std::vector<int> w = pre;
              w.push_back(y);
              w.insert(w.end(), suf.begin(), suf.end());
              int col = deg.index.at(w);
              row[col] = f_.add(row[col], f_.one());
              nonzero = true;
            }
            if (nonzero) deg.relations.insert(std::move(row));
          }
        }
      }
    }
    auto pivots = deg.relations.pivots();
    size_t pi = 0;
    for (int w = 0; w < static_cast<int>(deg.words.size()); ++w) {
      if (pi < pivots.size() && pivots[pi] == w) {
        ++pi;
      } else {
        deg.basis_words.push_back(w);
      }
    }
    return deg;
  }

  void set_column(Matrix<F>& m, int col, const Vec<F>& v) const {
    for (int r = 0; r < m.rows(); ++r) m.at(r, col) = v[r];
  }
  /* Writes v (full quotient coordinates) into the column, keeping only the
   * given positions; everything outside them must vanish. */
  void set_column_positions(Matrix<F>& m, int col,
                            const std::vector<int>& positions,
                            const Vec<F>& v) const {
    size_t pi = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      if (pi < positions.size() && static_cast<int>(j) == positions[pi]) {
        m.at(static_cast<int>(pi), col) = v[j];
        ++pi;
      } else {
        check(f_.is_zero(v[j]), errc::bad_input,
              "image leaves the leading-rank block");
      }
    }
  }
};

/* Graded dimensions of the algebra, trailing zeros trimmed. */
template <class F>
std::vector<long> hilbert_direct(F f, const RankedPoset& p) {
  GradedAlgebra<F> alg(f, p, p.poset_rank() + 2);
  std::vector<long> h;
  for (int d = 0; d <= alg.max_degree(); ++d) h.push_back(alg.dim(d));
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

/* The cochain complex (R(., k), d) for n = k .. m where the poset has rank
 * m + 1, with d-squared checked. */
template <class F>
ComplexDims r_subcomplex(F f, const RankedPoset& p, int k) {
  int m = p.poset_rank() - 1;
  check(k >= 0 && k <= m, errc::bad_input, "window index outside [0, rank-1]");
  GradedAlgebra<F> alg(f, p, m - k + 1);
  CochainComplex<F> cx;
  cx.lo = k;
  for (int n = k; n <= m; ++n) cx.dims.push_back(alg.block_dim(n, k));
  for (int n = k; n < m; ++n) cx.d.push_back(alg.block_differential(n, k));
  return cohomology_of(f, cx);
}

} // namespace pk
