#pragma once

#include <string>
#include <vector>

#include "relmod/sl21/rep.hpp"

namespace relmod::sl21 {

/// Super-character pair in x, y and the grading monomial w = y^(2 alpha),
/// all carried as Laurent polynomials with integer coefficients.
struct CharacterExpr {
  CycScalar plus;
  CycScalar minus;

  /// Tensoring with C-bar: negates minus only.
  CharacterExpr parity_flipped() const { return {plus, -minus}; }
  /// plus at x = y = w = 1.
  long dimension() const;

  friend CharacterExpr operator+(const CharacterExpr& a, const CharacterExpr& b) {
    return {a.plus + b.plus, a.minus + b.minus};
  }
  friend CharacterExpr operator-(const CharacterExpr& a, const CharacterExpr& b) {
    return {a.plus - b.plus, a.minus - b.minus};
  }
  friend CharacterExpr operator*(const CharacterExpr& a, const CharacterExpr& b) {
    return {a.plus * b.plus, a.minus * b.minus};
  }
  friend CharacterExpr operator*(const CharacterExpr& a, long c) { return {a.plus * CycScalar(c), a.minus * CycScalar(c)}; }
  friend bool operator==(const CharacterExpr& a, const CharacterExpr& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
};

std::string to_string(const CharacterExpr& c);

/// Typical label eps^eps * Cbar^odd * V(lambda^k_{alpha_power*alpha + shift}).
/// Heights k >= ell only occur in raw classical decompositions.
struct WeightLabel {
  int k = 0;
  long shift = 0;
  bool odd = false;
  int eps = 0;
  int alpha = 1;

  bool negligible(int ell) const { return k == ell - 1; }
  auto operator<=>(const WeightLabel&) const = default;
};

std::string to_string(const WeightLabel& l);

struct LabelCount {
  WeightLabel label;
  long multiplicity = 1;
  bool operator==(const LabelCount&) const = default;
};

/// X0 * w^alpha * y^(2 shift + k) * [k+1]_x with X0 = (1 +- y/x)(1 +- xy).
/// Throws std::invalid_argument unless 0 <= k <= ell-1.
CharacterExpr character_of_label(const WeightLabel& label, int ell);
/// Same formula without the height bound.
CharacterExpr typical_character(const WeightLabel& label);

/// Sum over basis vectors of x^H1 y^(H1 + 2 H2), signed by parity in minus.
CharacterExpr character_of_rep(const WeightModuleRep& rep);

/// (y^n (x^(n+1) - x^-(n+1)) +- y^(n+1) (x^n - x^-n)) / (x - 1/x), expanded.
CharacterExpr closed_form_Ak(int n);

/// Character of the standard module v, which is A_1 as a weight module.
CharacterExpr standard_character();

struct Decomposition {
  bool ok = false;
  /// Sorted by label; raw heights, integer shifts.
  std::vector<LabelCount> labels;
  /// Zero when ok; otherwise what peeling could not remove.
  CharacterExpr residual;
};

/// Greedy peeling: the top monomial by (w power, y degree, x degree) fixes
/// the next label; even and odd multiplicities are read from the plus and
/// minus coefficients.
Decomposition decompose_typical(const CharacterExpr& chi);

struct Reduced {
  /// Heights 0..ell-2, shifts mod ell, nonzero multiplicities.
  std::vector<LabelCount> kept;
  /// Labels of height ell-1.
  std::vector<LabelCount> negligible;
};

/// Folds a raw decomposition into the alcove: heights K >= ell reflect to
/// 2 ell - 2 - K at the same y exponent with multiplicity negated, shifts
/// are taken mod ell, and height ell-1 is set aside as negligible.
Reduced reduce_modulo_negligible(const std::vector<LabelCount>& raw, int ell);

/// A (x) V(lambda^k_{alpha+i}) = Cbar (x) V(lambda^{ell-2-k}_{alpha+i+k+1}).
WeightLabel fuse_A(const WeightLabel& label, int ell);

}  // namespace relmod::sl21
