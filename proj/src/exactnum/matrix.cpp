#include "relmod/exactnum/matrix.hpp"

namespace relmod::exactnum {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycScalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1L);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<CycScalar>& diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycScalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const CycScalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }

std::vector<CycScalar> ExactMatrix::apply(const std::vector<CycScalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<CycScalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, Exec exec) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const std::size_t inner = a.cols();
  ExactMatrix c(n, m);
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && n > 1)
  for (long i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < inner; ++k) {
      const CycScalar& aik = a(r, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const CycScalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(r, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b, Exec exec) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const long ar = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && ar > 1)
  for (long ia = 0; ia < ar; ++ia) {
    const auto i = static_cast<std::size_t>(ia);
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const CycScalar& s = a(i, ja);
      if (s.is_zero()) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          if (!b(ib, jb).is_zero()) out(i * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
    }
  }
  return out;
}

}  // namespace relmod::exactnum
