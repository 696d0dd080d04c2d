#include "relmod/sl21/rep.hpp"

#include <stdexcept>

namespace relmod::sl21 {

using exactnum::quantum_integer;

const char* to_string(Convention c) { return c == Convention::original ? "original" : "corrected"; }

long WeightModuleRep::weight(int i, std::size_t b) const {
  const ExactMatrix& h = gens[i == 1 ? 0 : 1];
  const CycScalar& e = h(b, b);
  if (!e.is_constant() || !e.constant_term().is_rational() || e.constant_term().rational_value().get_den() != 1) {
    throw std::invalid_argument("H eigenvalue is not an integer");
  }
  for (std::size_t c = 0; c < dim(); ++c)
    if (c != b && !h(b, c).is_zero()) throw std::invalid_argument("H is not diagonal");
  return e.constant_term().rational_value().get_num().get_si();
}

ExactMatrix WeightModuleRep::K(int i, long power) const {
  ExactMatrix k(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) k(b, b) = CycScalar::root(ell, power * weight(i, b));
  return k;
}

ExactMatrix WeightModuleRep::parity_operator() const {
  ExactMatrix p(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) p(b, b) = CycScalar(parity[b] == 0 ? 1L : -1L);
  return p;
}

WeightModuleRep build_Ak(int k, int ell, Convention convention) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and at least 3");
  if (k < 1 || k > ell - 1) throw std::invalid_argument("k must satisfy 1 <= k <= ell-1");
  WeightModuleRep r;
  r.ell = ell;
  r.convention = convention;
  const auto idx = [k](int j, int i) -> long {
    if (j < 0 || j > 1 || i < 0 || i > k - j) return -1;
    return j == 0 ? i : (k + 1) + i;
  };
  const std::size_t n = static_cast<std::size_t>(2 * k + 1);
  for (int j = 0; j <= 1; ++j)
    for (int i = 0; i <= k - j; ++i) {
      r.labels.push_back("v" + std::to_string(j) + "_" + std::to_string(i));
      r.parity.push_back(j);
    }
  for (auto& g : r.gens) g = ExactMatrix(n, n);

  const auto set = [&](Gen g, long to, long from, const CycScalar& c) {
    if (to < 0 || from < 0 || c.is_zero()) return;
    r[g](static_cast<std::size_t>(to), static_cast<std::size_t>(from)) = c;
  };
  for (int j = 0; j <= 1; ++j) {
    for (int i = 0; i <= k - j; ++i) {
      const long v = idx(j, i);
      set(Gen::H1, v, v, CycScalar(static_cast<long>(k - j - 2 * i)));
      set(Gen::H2, v, v, CycScalar(static_cast<long>(i + j)));
      set(Gen::F1, idx(j, i + 1), v, CycScalar(1L));
      if (j == 1) set(Gen::E2, idx(0, i + 1), v, CycScalar(1L));
      if (i >= 1) set(Gen::E1, idx(j, i - 1), v, quantum_integer(i, ell) * quantum_integer(k - j + 1 - i, ell));
      if (j == 0) {
        const long c = convention == Convention::original ? i + 1 : i;
        set(Gen::F2, idx(1, i - 1), v, quantum_integer(c, ell));
      }
    }
  }
  return r;
}

WeightModuleRep trivial_module(int ell, bool odd) {
  WeightModuleRep r;
  r.ell = ell;
  r.labels = {odd ? "cbar" : "1"};
  r.parity = {odd ? 1 : 0};
  for (auto& g : r.gens) g = ExactMatrix(1, 1);
  return r;
}

WeightModuleRep tensor_rep(const WeightModuleRep& a, const WeightModuleRep& b, Exec exec) {
  if (a.ell != b.ell) throw std::invalid_argument("tensor_rep: ell mismatch");
  WeightModuleRep r;
  r.ell = a.ell;
  r.convention = a.convention;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      r.labels.push_back(a.labels[i] + "|" + b.labels[j]);
      r.parity.push_back((a.parity[i] + b.parity[j]) % 2);
    }
  const ExactMatrix ia = ExactMatrix::identity(a.dim());
  const ExactMatrix ib = ExactMatrix::identity(b.dim());
  const ExactMatrix pa = a.parity_operator();
  const auto kron = [exec](const ExactMatrix& x, const ExactMatrix& y) { return exactnum::kronecker(x, y, exec); };

  for (int i = 1; i <= 2; ++i) {
    const Gen h = i == 1 ? Gen::H1 : Gen::H2;
    const Gen e = i == 1 ? Gen::E1 : Gen::E2;
    const Gen f = i == 1 ? Gen::F1 : Gen::F2;
    // An odd generator in the second slot passes the first vector.
    const ExactMatrix sign = is_odd(e) ? pa : ia;
    r[h] = kron(a[h], ib) + kron(ia, b[h]);
    r[e] = kron(a[e], ib) + kron(exactnum::multiply(a.K(i, -1), sign, exec), b[e]);
    r[f] = kron(a[f], b.K(i, 1)) + kron(sign, b[f]);
  }
  return r;
}

}  // namespace relmod::sl21
