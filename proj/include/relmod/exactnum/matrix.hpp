#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relmod/exactnum/scalar.hpp"

namespace relmod::exactnum {

/// How a kernel should run. Serial is the reference path the parallel
/// kernels are tested against.
enum class Exec { serial, parallel };

/// Dense row-major matrix over CycScalar.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycScalar> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<CycScalar>& diag);
  static ExactMatrix from_rows(const std::vector<std::vector<CycScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<CycScalar>& entries() const { return data_; }

  ExactMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const CycScalar& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const CycScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const CycScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::vector<CycScalar> apply(const std::vector<CycScalar>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, Exec exec = Exec::parallel);

/// Kronecker product a (x) b, row index = ia * b.rows() + ib.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b, Exec exec = Exec::parallel);

}  // namespace relmod::exactnum
