#include "relmod/sl21/characters.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace relmod::sl21 {

using exactnum::Monomial;
using exactnum::Var;

namespace {

CycScalar mono(int x, int y, int w = 0) { return CycScalar::term(exactnum::Cyclotomic(1L), Monomial{0, x, y, w}); }

long integer_coefficient(const CycScalar& s, const Monomial& m) {
  const auto it = s.terms().find(m);
  if (it == s.terms().end()) return 0;
  if (!it->second.is_rational() || it->second.rational_value().get_den() != 1)
    throw std::invalid_argument("character coefficient is not an integer");
  return it->second.rational_value().get_num().get_si();
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

long CharacterExpr::dimension() const {
  long total = 0;
  for (const auto& [m, c] : plus.terms()) total += integer_coefficient(plus, m);
  return total;
}

std::string to_string(const CharacterExpr& c) {
  return "plus: " + exactnum::to_string(c.plus) + "; minus: " + exactnum::to_string(c.minus);
}

std::string to_string(const WeightLabel& l) {
  std::string s;
  if (l.eps != 0) s += "eps^" + std::to_string(l.eps) + "*";
  if (l.odd) s += "Cbar*";
  s += "V(" + std::to_string(l.k) + "," + std::to_string(l.shift);
  if (l.alpha != 1) s += ";a^" + std::to_string(l.alpha);
  return s + ")";
}

CharacterExpr typical_character(const WeightLabel& l) {
  CycScalar sl2;
  if (l.k >= 0) {
    for (int j = 0; j <= l.k; ++j) sl2 += mono(l.k - 2 * j, 0);
  } else {
    // [k+1]_x for negative k, so that raw reflected labels stay well defined.
    for (int j = 0; j < -l.k - 1; ++j) sl2 -= mono(-l.k - 2 - 2 * j, 0);
  }
  const CycScalar base = sl2 * mono(0, static_cast<int>(2 * l.shift + l.k), l.alpha);
  const CycScalar one(1L);
  const CycScalar p = (one + mono(-1, 1)) * (one + mono(1, 1));
  const CycScalar m = (one - mono(-1, 1)) * (one - mono(1, 1));
  CharacterExpr c{p * base, m * base};
  return l.odd ? c.parity_flipped() : c;
}

CharacterExpr character_of_label(const WeightLabel& label, int ell) {
  if (label.k < 0 || label.k > ell - 1) throw std::invalid_argument("label height outside 0..ell-1");
  return typical_character(label);
}

CharacterExpr character_of_rep(const WeightModuleRep& rep) {
  CharacterExpr c;
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    const long h1 = rep.weight(1, b);
    const long h2 = rep.weight(2, b);
    const CycScalar t = mono(static_cast<int>(h1), static_cast<int>(h1 + 2 * h2));
    c.plus += t;
    c.minus += rep.parity[b] == 0 ? t : -t;
  }
  return c;
}

CharacterExpr closed_form_Ak(int n) {
  // (x^(n+1) - x^-(n+1))/(x - 1/x) = [n+1]_x, and likewise for n.
  const auto qx = [](int m) {
    CycScalar s;
    for (int j = 0; j < m; ++j) s += mono(m - 1 - 2 * j, 0);
    return s;
  };
  const CycScalar a = mono(0, n) * qx(n + 1);
  const CycScalar b = mono(0, n + 1) * qx(n);
  return {a + b, a - b};
}

CharacterExpr standard_character() { return closed_form_Ak(1); }

Decomposition decompose_typical(const CharacterExpr& chi) {
  Decomposition d;
  CharacterExpr rest = chi;
  std::map<WeightLabel, long> counts;
  // Each peel removes the current top monomial and only adds lower ones.
  const std::size_t limit = 4 * (chi.plus.terms().size() + chi.minus.terms().size()) + 16;
  for (std::size_t step = 0; step < limit && !rest.is_zero(); ++step) {
    const auto key = [](const Monomial& m) { return std::tuple(m[3], m[2], m[1]); };
    const Monomial* top = nullptr;
    for (const auto* s : {&rest.plus, &rest.minus})
      for (const auto& [m, c] : s->terms())
        if (top == nullptr || key(m) > key(*top)) top = &m;
    const Monomial m = *top;
    const int k = m[1];
    const int rem = m[2] - k - 2;
    const long cp = integer_coefficient(rest.plus, m);
    const long cm = integer_coefficient(rest.minus, m);
    if (m[0] != 0 || k < 0 || rem % 2 != 0 || (cp + cm) % 2 != 0) break;
    const WeightLabel even{k, rem / 2, false, 0, m[3]};
    const long me = (cp + cm) / 2;
    const long mo = (cp - cm) / 2;
    WeightLabel odd = even;
    odd.odd = true;
    if (me != 0) {
      rest = rest - typical_character(even) * me;
      counts[even] += me;
    }
    if (mo != 0) {
      rest = rest - typical_character(odd) * mo;
      counts[odd] += mo;
    }
  }
  d.ok = rest.is_zero();
  d.residual = rest;
  for (const auto& [l, c] : counts)
    if (c != 0) d.labels.push_back({l, c});
  return d;
}

Reduced reduce_modulo_negligible(const std::vector<LabelCount>& raw, int ell) {
  std::map<WeightLabel, long> kept, negligible;
  for (LabelCount lc : raw) {
    WeightLabel& l = lc.label;
    if (l.k >= ell) {
      if (l.k > 2 * ell - 2) throw std::invalid_argument("height beyond one reflection: " + to_string(l));
      const int reflected = 2 * ell - 2 - l.k;
      l.shift += l.k - (ell - 1);
      l.k = reflected;
      lc.multiplicity = -lc.multiplicity;
    }
    if (l.k < 0) throw std::invalid_argument("negative height in raw decomposition: " + to_string(l));
    l.shift = mod(l.shift, ell);
    (l.negligible(ell) ? negligible : kept)[l] += lc.multiplicity;
  }
  Reduced r;
  for (const auto& [l, c] : kept)
    if (c != 0) r.kept.push_back({l, c});
  for (const auto& [l, c] : negligible)
    if (c != 0) r.negligible.push_back({l, c});
  return r;
}

WeightLabel fuse_A(const WeightLabel& label, int ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and at least 3");
  if (label.k < 0 || label.k > ell - 2) throw std::invalid_argument("fuse_A needs 0 <= k <= ell-2");
  WeightLabel r = label;
  r.k = ell - 2 - label.k;
  r.shift = mod(label.shift + label.k + 1, ell);
  r.odd = !label.odd;
  return r;
}

}  // namespace relmod::sl21
