#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "relmod/exactnum/cyclotomic.hpp"

namespace relmod::exactnum {

/// Formal invertible variables carried by a scalar.
///   u : generic-degree monomial q^(ell*alpha)
///   x, y : character variables
///   w : formal y^(2*alpha) grading monomial
enum class Var : int { u = 0, x = 1, y = 2, w = 3 };
inline constexpr int kVarCount = 4;
inline constexpr std::array<char, kVarCount> kVarNames{'u', 'x', 'y', 'w'};

using Monomial = std::array<int, kVarCount>;

/// Laurent polynomial in (u, x, y, w) with coefficients in a cyclotomic
/// field. Zero coefficients are never stored, so structural equality is
/// mathematical equality.
class CycScalar {
 public:
  using Terms = std::map<Monomial, Cyclotomic>;

  CycScalar() = default;
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  CycScalar(Rational value);  // NOLINT(google-explicit-constructor)
  CycScalar(Cyclotomic value);  // NOLINT(google-explicit-constructor)

  static CycScalar term(Cyclotomic coeff, Monomial mono);
  static CycScalar variable(Var v, int power = 1);
  /// zeta_m^e
  static CycScalar root(int conductor, long e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the scalar has no formal variables.
  bool is_constant() const;
  /// A single term (nonzero coefficient times a monomial): invertible in the ring.
  bool is_unit() const { return terms_.size() == 1; }
  /// Lcm of the conductors of all coefficients (1 for rationals).
  int conductor() const;

  /// Coefficient in Q(zeta) of the constant monomial.
  Cyclotomic constant_term() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b) { return a.terms_ == b.terms_; }

  /// Inverse of a unit; throws ArithmeticError otherwise.
  CycScalar inverse() const;
  CycScalar pow(long n) const;

  /// Evaluates with zeta_m = exp(2*pi*i/m) and the given variable values.
  std::complex<double> evaluate(const std::array<std::complex<double>, kVarCount>& vars) const;

  /// Substitutes a monomial for a single variable (e.g. w -> y^2).
  CycScalar substitute(Var v, const CycScalar& value) const;

 private:
  void add_term(const Monomial& m, const Cyclotomic& c);

  Terms terms_;
};

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not
/// divide a. Throws ArithmeticError if b is zero.
std::optional<CycScalar> divide_exact(const CycScalar& a, const CycScalar& b);

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) at q = zeta_ell.
/// ell must be odd and at least 3.
CycScalar quantum_integer(long n, int ell);

/// Text form of a scalar. Grammar: sums/differences of products of
/// rationals ("-3/4"), roots of unity ("z5^2" for zeta_5^2, "z5"), and
/// variables ("u^-2", "x", "y^3", "w"); parentheses group and "^" takes an
/// integer exponent on any atom or parenthesised group.
std::string to_string(const CycScalar& s);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CycScalar parse_scalar(std::string_view text);

}  // namespace relmod::exactnum
