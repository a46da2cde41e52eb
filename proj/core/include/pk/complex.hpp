#pragma once

#include <vector>

#include "pk/matrix.hpp"

namespace pk {

/* Dimensions and cohomology of a finite cochain complex. Position i of the
 * complex is lo + i; `cohomology[i]` is dim ker(d at position) minus the rank
 * of the incoming differential, with rank 0 used beyond either end. */
struct ComplexDims {
  int lo = 0;
  std::vector<int> dims;
  std::vector<int> cohomology;

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

/* Cohomology dimension at an absolute position, zero outside the complex. */
inline int cohomology_dim_at(const ComplexDims& cd, int position) {
  int idx = position - cd.lo;
  if (idx < 0 || idx >= static_cast<int>(cd.cohomology.size())) return 0;
  return cd.cohomology[idx];
}

/* A cochain complex: dims[i] is the dimension at position lo + i and d[i]
 * maps position lo + i to lo + i + 1 (so d.size() == dims.size() - 1 unless
 * the complex is a single space). */
template <class F>
struct CochainComplex {
  int lo = 0;
  std::vector<int> dims;
  std::vector<Matrix<F>> d;
};

template <class F>
ComplexDims cohomology_of(const F& f, const CochainComplex<F>& cx) {
  const int n = static_cast<int>(cx.dims.size());
  if (n == 0) {
    check(cx.d.empty(), errc::bad_input, "differentials without spaces");
    return {cx.lo, {}, {}};
  }
  check(static_cast<int>(cx.d.size()) == (n > 1 ? n - 1 : 0), errc::bad_input,
        "cochain complex has wrong number of differentials");
  for (int i = 0; i < static_cast<int>(cx.d.size()); ++i) {
    check(cx.d[i].cols() == cx.dims[i] && cx.d[i].rows() == cx.dims[i + 1], errc::bad_input,
          "differential shape mismatch at position " + std::to_string(cx.lo + i));
    if (i + 1 < static_cast<int>(cx.d.size()))
      check(mat_mul(cx.d[i + 1], cx.d[i]).is_zero(), errc::composite_not_zero,
            "d o d != 0 at position " + std::to_string(cx.lo + i));
  }
  std::vector<int> ranks(n + 1, 0); // ranks[i] = rank of d into position lo+i
  for (int i = 0; i < static_cast<int>(cx.d.size()); ++i) ranks[i + 1] = rank(cx.d[i]);
  ComplexDims out;
  out.lo = cx.lo;
  out.dims = cx.dims;
  out.cohomology.resize(n);
  for (int i = 0; i < n; ++i) {
    const int out_rank = i < static_cast<int>(cx.d.size()) ? ranks[i + 1] : 0;
    out.cohomology[i] = cx.dims[i] - out_rank - ranks[i];
  }
  (void)f;
  return out;
}

/* Convenience form taking just the differentials of a multi-space complex. */
template <class F>
ComplexDims cohomology_dims(const F& f, const std::vector<Matrix<F>>& diffs, int lo = 0) {
  check(!diffs.empty(), errc::empty_argument, "cohomology_dims needs at least one matrix");
  CochainComplex<F> cx;
  cx.lo = lo;
  for (const auto& m : diffs) cx.dims.push_back(m.cols());
  cx.dims.push_back(diffs.back().rows());
  cx.d = diffs;
  return cohomology_of(f, cx);
}

} // namespace pk
