#include "relmod/exactnum/linalg.hpp"

#include <atomic>
#include <string>

namespace relmod::exactnum {

Reduction fraction_free_reduce(const ExactMatrix& m, bool full_reduce, Exec exec) {
  Reduction red;
  red.reduced = m;
  ExactMatrix& a = red.reduced;
  const std::size_t nrows = a.rows();
  const std::size_t ncols = a.cols();
  CycScalar prev(1L);
  std::size_t r = 0;
  std::atomic<bool> inexact{false};

  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a(p, c).is_zero()) ++p;
    if (p == nrows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < ncols; ++j) std::swap(a(p, j), a(r, j));
      red.swap_sign = -red.swap_sign;
    }
    const CycScalar piv = a(r, c);
    const bool unit_prev = prev == CycScalar(1L);
    const long total = static_cast<long>(nrows);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && nrows > 2)
    for (long ii = 0; ii < total; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r) continue;
      if (i < r && !full_reduce) continue;
      const CycScalar aic = a(i, c);
      // Rows below only have nonzeros from column c on; rows above may not.
      const std::size_t j0 = i > r ? c : 0;
      for (std::size_t j = j0; j < ncols; ++j) {
        CycScalar v = piv * a(i, j);
        if (!aic.is_zero() && !a(r, j).is_zero()) v -= aic * a(r, j);
        if (!unit_prev && !v.is_zero()) {
          auto q = divide_exact(v, prev);
          if (!q) {
            inexact.store(true);
            continue;
          }
          v = std::move(*q);
        }
        a(i, j) = std::move(v);
      }
    }
    if (inexact.load()) throw ArithmeticError("fraction-free elimination hit an inexact division");
    red.pivot_cols.push_back(c);
    prev = piv;
    ++r;
  }
  red.pivot = prev;
  return red;
}

std::size_t rank(const ExactMatrix& m, Exec exec) {
  return fraction_free_reduce(m, false, exec).pivot_cols.size();
}

CycScalar determinant(const ExactMatrix& m, Exec exec) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return CycScalar(1L);
  Reduction red = fraction_free_reduce(m, false, exec);
  if (red.pivot_cols.size() < m.rows()) return CycScalar();
  return red.swap_sign < 0 ? -red.pivot : red.pivot;
}

std::optional<std::vector<CycScalar>> kernel_vector(const ExactMatrix& m, Exec exec) {
  Reduction red = fraction_free_reduce(m, true, exec);
  if (red.pivot_cols.size() == m.cols()) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < red.pivot_cols.size() && red.pivot_cols[k] == free_col; ++k) ++free_col;
  std::vector<CycScalar> v(m.cols());
  v[free_col] = red.pivot;
  for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
    v[red.pivot_cols[k]] = -red.reduced(k, free_col);
  }
  return v;
}

InverseResult invert(const ExactMatrix& m, Exec exec) {
  if (!m.is_square()) throw std::invalid_argument("invert requires a square matrix");
  const std::size_t n = m.rows();
  InverseResult out;
  if (auto kv = kernel_vector(m, exec)) {
    out.status = InverseResult::Status::singular;
    out.kernel = std::move(*kv);
    return out;
  }
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycScalar(1L);
  }
  Reduction red = fraction_free_reduce(aug, true, exec);
  out.determinant = red.swap_sign < 0 ? -red.pivot : red.pivot;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto q = divide_exact(red.reduced(i, n + j), red.pivot);
      if (!q) {
        out.status = InverseResult::Status::not_ring_invertible;
        return out;
      }
      inv(i, j) = std::move(*q);
    }
  }
  out.status = InverseResult::Status::inverted;
  out.inverse = std::move(inv);
  return out;
}

}  // namespace relmod::exactnum
