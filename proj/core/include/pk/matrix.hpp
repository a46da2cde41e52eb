#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "pk/error.hpp"
#include "pk/field.hpp"

namespace pk {

template <class F>
using Vec = std::vector<typename F::Elem>;

namespace detail {

/* In-place v[j] -= factor * w[j] over a contiguous range. The caller
 * guarantees factor != 0. Prime moduli fold the negation into a single
 * fused multiply-add per entry, and modulus two reduces to xor. */
template <class F>
void row_axpy_sub(const F& f, typename F::Elem* v,
                  const typename F::Elem* w, int n,
                  const typename F::Elem& factor) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (f.p == 2) {
      for (int j = 0; j < n; ++j) v[j] ^= w[j];
      return;
    }
    const std::uint64_t neg = f.p - factor;
    for (int j = 0; j < n; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + neg * w[j]) % f.p);
  } else {
    for (int j = 0; j < n; ++j)
      if (!f.is_zero(w[j])) v[j] = f.sub(v[j], f.mul(factor, w[j]));
  }
}

} // namespace detail

/* Dense matrix over an exact field, row-major. Rows index the target space,
 * columns the source, so `mat_apply` acts on column vectors. */
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(F f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

  static Matrix identity(F f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec<F> row(int r) const {
    Vec<F> v(a_.begin() + static_cast<std::size_t>(r) * cols_,
             a_.begin() + static_cast<std::size_t>(r + 1) * cols_);
    return v;
  }

  bool is_zero() const {
    for (const Elem& e : a_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!x.field_.eq(x.a_[i], y.a_[i])) return false;
    return true;
  }

private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
Matrix<F> from_rows(F f, int cols, const std::vector<Vec<F>>& rows) {
  Matrix<F> m(f, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    check(static_cast<int>(rows[r].size()) == cols, errc::bad_input, "row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  check(a.cols() == b.rows(), errc::bad_input, "matrix shape mismatch in product");
  const F& f = a.field();
  Matrix<F> r(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const auto& bkj = b.at(k, j);
        if (f.is_zero(bkj)) continue;
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, bkj));
      }
    }
  return r;
}

template <class F>
Vec<F> mat_apply(const Matrix<F>& m, const Vec<F>& v) {
  check(static_cast<int>(v.size()) == m.cols(), errc::bad_input, "vector length mismatch");
  const F& f = m.field();
  Vec<F> r(m.rows(), f.zero());
  for (int c = 0; c < m.cols(); ++c) {
    if (f.is_zero(v[c])) continue;
    for (int i = 0; i < m.rows(); ++i) {
      const auto& mic = m.at(i, c);
      if (f.is_zero(mic)) continue;
      r[i] = f.add(r[i], f.mul(mic, v[c]));
    }
  }
  return r;
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
  for (const auto& e : v)
    if (!f.is_zero(e)) return false;
  return true;
}

template <class F>
struct Rref {
  Matrix<F> mat;
  std::vector<int> pivots; // pivot column per pivot row, ascending
  int rank = 0;
};

/* Reduced row echelon form. Pivoting is deterministic: the leftmost column
 * with a nonzero entry on or below the current row, and within that column
 * the first such row. */
template <class F>
Rref<F> rref(Matrix<F> m) {
  const F f = m.field();
  Rref<F> out;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    if (!f.eq(m.at(r, c), f.one())) {
      const auto piv_inv = f.inv(m.at(r, c));
      for (int j = c; j < m.cols(); ++j)
        m.at(r, j) = f.mul(m.at(r, j), piv_inv);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      detail::row_axpy_sub(f, &m.at(i, c), &m.at(r, c), m.cols() - c, factor);
    }
    pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  out.pivots = std::move(pivots);
  out.rank = r;
  return out;
}

template <class F>
int rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/* Basis of the right kernel {v : M v = 0}, one vector per free column,
 * ordered by ascending free column. */
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const F f = m.field();
  Rref<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[c] = f.one();
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.mat.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

/* Incrementally maintained reduced row echelon basis of a row span.
 * Insertion order does not affect the final basis (RREF is canonical). */
template <class F>
class Echelon {
public:
  Echelon(F f, int n) : f_(f), n_(n) {}

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Vec<F> reduce(Vec<F> v) const {
    check(static_cast<int>(v.size()) == n_, errc::bad_input, "vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int p = pivots_[i];
      const auto factor = v[p];
      if (f_.is_zero(factor)) continue;
      const Vec<F>& row = rows_[i];
      detail::row_axpy_sub(f_, v.data() + p, row.data() + p, n_ - p, factor);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return vec_is_zero(f_, reduce(v)); }

  /* Returns true if v enlarged the span. */
  bool insert(Vec<F> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < n_; ++j)
      if (!f_.is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    if (!f_.eq(v[p], f_.one())) {
      const auto piv_inv = f_.inv(v[p]);
      for (int j = p; j < n_; ++j) v[j] = f_.mul(v[j], piv_inv);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto factor = rows_[i][p];
      if (f_.is_zero(factor)) continue;
      detail::row_axpy_sub(f_, rows_[i].data() + p, v.data() + p, n_ - p,
                           factor);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    if (a.n_ != b.n_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
      for (int j = 0; j < a.n_; ++j)
        if (!a.f_.eq(a.rows_[i][j], b.rows_[i][j])) return false;
    return true;
  }

private:
  F f_;
  int n_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

template <class F>
Echelon<F> echelon_of(F f, int n, const std::vector<Vec<F>>& span) {
  Echelon<F> e(f, n);
  for (const auto& v : span) e.insert(v);
  return e;
}

template <class F>
int span_rank(F f, int n, const std::vector<Vec<F>>& span) {
  return echelon_of(f, n, span).rank();
}

template <class F>
bool same_row_space(F f, int n, const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b) {
  return echelon_of(f, n, a) == echelon_of(f, n, b);
}

/* Quotient of span(numerator) by span(denominator) inside F^n. The caller
 * guarantees span(denominator) is contained in span(numerator). Class
 * representatives are the canonical echelon rows of the reduced numerator. */
template <class F>
class Quotient {
public:
  Quotient(F f, int n, const std::vector<Vec<F>>& numerator,
           const std::vector<Vec<F>>& denominator)
      : f_(f), n_(n), denom_(f, n), basis_(f, n) {
    for (const auto& v : denominator) denom_.insert(v);
    for (const auto& v : numerator) basis_.insert(denom_.reduce(v));
  }

  int dim() const { return basis_.rank(); }
  int ambient_dim() const { return n_; }
  const Vec<F>& rep(int i) const { return basis_.rows()[i]; }

  /* Coordinates of [v] in the representative basis; v must lie in
   * span(numerator) + span(denominator). */
  Vec<F> coords(const Vec<F>& v) const {
    Vec<F> w = denom_.reduce(v);
    Vec<F> out(basis_.rank(), f_.zero());
    for (int i = 0; i < basis_.rank(); ++i) {
      const auto c = w[basis_.pivots()[i]];
      if (f_.is_zero(c)) continue;
      out[i] = c;
      const Vec<F>& row = basis_.rows()[i];
      for (int j = 0; j < n_; ++j)
        if (!f_.is_zero(row[j])) w[j] = f_.sub(w[j], f_.mul(c, row[j]));
    }
    check(vec_is_zero(f_, w), errc::bad_input, "vector not in the quotiented span");
    return out;
  }

private:
  F f_;
  int n_;
  Echelon<F> denom_;
  Echelon<F> basis_;
};

} // namespace pk
