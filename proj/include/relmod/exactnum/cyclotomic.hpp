#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace relmod::exactnum {

using Rational = mpq_class;

/// Raised when an exact operation has no result in the ring (non-unit
/// inverse, inexact division, zero divisor).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The field Q(zeta_m) with zeta_m = exp(2*pi*i/m).
///
/// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1).
/// Instances are interned: `get(m)` always returns the same object, so
/// field identity can be compared by address.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }

  /// Integer coefficients of the m-th cyclotomic polynomial, lowest first.
  const std::vector<long>& minimal_polynomial() const { return phi_; }

  /// Reduced coordinates of zeta^e for any integer e.
  const std::vector<Rational>& power(long e) const;

  /// Reduces a vector indexed by exponent mod m into the power basis.
  std::vector<Rational> reduce(const std::vector<Rational>& by_exponent) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(zeta_m). Rational elements are always stored with
/// conductor 1, so equal rationals compare equal regardless of origin.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value);  // NOLINT(google-explicit-constructor)

  /// zeta_m^e.
  static Cyclotomic root_power(int conductor, long e);

  /// Builds from power-basis coordinates; `coeffs` must have phi(m) entries.
  static Cyclotomic from_coefficients(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  const Rational& rational_value() const { return coeffs_.front(); }

  /// Same element expressed in Q(zeta_target); target must be a multiple of
  /// the current conductor.
  Cyclotomic lifted(int target) const;

  Cyclotomic inverse() const;
  Cyclotomic operator-() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<double> evaluate() const;

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs);
  void normalize();

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace relmod::exactnum
