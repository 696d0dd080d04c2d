#include "relmod/catmodel/datum.hpp"

#include <algorithm>
#include <set>

#include "relmod/exactnum/linalg.hpp"

namespace relmod::catmodel {

using exactnum::divide_exact;

TranslationElement TranslationSpec::normalized(TranslationElement k) const {
  for (std::size_t i = 0; i < cyclic_orders.size() && i < k.size(); ++i) {
    const long n = cyclic_orders[i];
    if (n > 0) k[i] = ((k[i] % n) + n) % n;
  }
  return k;
}

TranslationElement TranslationSpec::add(const TranslationElement& a, const TranslationElement& b) const {
  TranslationElement out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return normalized(std::move(out));
}

long TranslationSpec::order(const TranslationElement& k) const {
  long ord = 1;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (k[i] == 0) continue;
    const long n = cyclic_orders[i];
    if (n == 0) return 0;
    ord = exactnum::lcm_long(ord, n / exactnum::gcd_long(n, k[i]));
  }
  return ord;
}

const CycScalar* TranslationSpec::find_qdim(const TranslationElement& k) const {
  for (const auto& q : quantum_dimension)
    if (q.k == k) return &q.value;
  return nullptr;
}

const CycScalar* TranslationSpec::find_psi(const Degree& g, const TranslationElement& k) const {
  for (const auto& p : psi)
    if (p.g == g && p.k == k) return &p.value;
  return nullptr;
}

const DegreeData* ModularDatum::find(const Degree& g) const {
  for (const auto& d : degrees)
    if (d.g == g) return &d;
  return nullptr;
}

const DegreeData& ModularDatum::at(const Degree& g) const {
  if (const auto* d = find(g)) return *d;
  throw DatumError("unknown degree '" + grading.format(g) + "'");
}

std::optional<ExactMatrix> ModularDatum::sprime_block(const Degree& g, const Degree& h) const {
  if (auto it = sprime.find({g, h}); it != sprime.end()) return it->second;
  auto rev = sprime.find({h, g});
  if (rev == sprime.end()) return std::nullopt;
  const DegreeData& dg = at(g);
  const DegreeData& dh = at(h);
  const ExactMatrix& t = rev->second;
  ExactMatrix out(dg.size(), dh.size());
  for (std::size_t i = 0; i < dg.size(); ++i) {
    for (std::size_t j = 0; j < dh.size(); ++j) {
      auto q = divide_exact(t(j, i) * dg.dims[i], dh.dims[j]);
      if (!q) return std::nullopt;
      out(i, j) = std::move(*q);
    }
  }
  return out;
}

ExactMatrix ModularDatum::require_sprime(const Degree& g, const Degree& h) const {
  at(g);
  at(h);
  if (auto b = sprime_block(g, h)) return std::move(*b);
  throw MissingBlock("S' block (" + grading.format(g) + ", " + grading.format(h) + ") absent");
}

ExactMatrix modified_S(const ModularDatum& datum, const Degree& g, const Degree& h) {
  const ExactMatrix sp = datum.require_sprime(g, h);
  return sp * ExactMatrix::diagonal(datum.at(h).dims);
}

std::vector<std::pair<std::size_t, CycScalar>> kirby_color(const ModularDatum& datum, const Degree& g) {
  if (!datum.grading.is_generic(g)) {
    throw DatumError("non-generic degree '" + datum.grading.format(g) + "'");
  }
  const DegreeData& d = datum.at(g);
  std::vector<std::pair<std::size_t, CycScalar>> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.emplace_back(i, d.dims[i]);
  return out;
}

namespace {

void validate_translation(const ModularDatum& datum, std::vector<Issue>& out) {
  const TranslationSpec& tr = datum.translation;
  const GradingSpec& gr = datum.grading;
  const CycScalar one(1L);
  const CycScalar minus_one(-1L);
  const auto ks = [](const TranslationElement& k) { return format_translation(k); };

  for (const auto& q : tr.quantum_dimension) {
    if (!(q.value == one) && !(q.value == minus_one)) {
      out.push_back({clause::kQDimUnit, "quantum dimension of sigma" + ks(q.k) + " is " +
                                            exactnum::to_string(q.value) + ", expected 1 or -1"});
    }
    if (q.k == tr.zero() && !(q.value == one)) {
      out.push_back({clause::kQDimIdentity, "sigma(0) must have quantum dimension 1"});
    }
  }
  for (const auto& a : tr.quantum_dimension) {
    for (const auto& b : tr.quantum_dimension) {
      const CycScalar* s = tr.find_qdim(tr.add(a.k, b.k));
      if (s && !(*s == a.value * b.value)) {
        out.push_back({clause::kQDimMultiplicative,
                       "qdim" + ks(tr.add(a.k, b.k)) + " != qdim" + ks(a.k) + " * qdim" + ks(b.k)});
      }
    }
  }

  for (const auto& p : tr.psi) {
    const std::string where = "psi(" + gr.format(p.g) + ", " + ks(p.k) + ")";
    if ((p.k == tr.zero() || p.g == gr.zero()) && !(p.value == one)) {
      out.push_back({clause::kPsiIdentity, where + " must be 1"});
    }
    const long n = tr.order(p.k);
    if (n > 0 && !(p.value.is_unit() && p.value.pow(n) == one)) {
      out.push_back({clause::kPsiFiniteOrder, where + "^" + std::to_string(n) + " != 1"});
    }
  }
  for (const auto& a : tr.psi) {
    for (const auto& b : tr.psi) {
      if (a.g == b.g) {
        const TranslationElement k = tr.add(a.k, b.k);
        if (const CycScalar* s = tr.find_psi(a.g, k); s && !(*s == a.value * b.value)) {
          out.push_back({clause::kPsiBilinear, "psi(g, k+k') != psi(g,k) psi(g,k') at (g,k,k') = (" +
                                                   gr.format(a.g) + ", " + ks(a.k) + ", " + ks(b.k) + ")"});
        }
      }
      if (a.k == b.k) {
        const Degree g = gr.add(a.g, b.g);
        if (const CycScalar* s = tr.find_psi(g, a.k); s && !(*s == a.value * b.value)) {
          out.push_back({clause::kPsiBilinear, "psi(g+g', k) != psi(g,k) psi(g',k) at (g,g',k) = (" +
                                                   gr.format(a.g) + ", " + gr.format(b.g) + ", " + ks(a.k) + ")"});
        }
      }
    }
  }
}

void validate_degrees(const ModularDatum& datum, std::vector<Issue>& out) {
  const GradingSpec& gr = datum.grading;
  for (const auto& d : datum.degrees) {
    const std::string g = gr.format(d.g);
    if (!gr.is_generic(d.g)) out.push_back({clause::kDegreeGeneric, "degree " + g + " lies in X"});
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d.dims[i].is_zero()) out.push_back({clause::kDimsNonzero, "d(V_" + std::to_string(i) + ") = 0 at " + g});
      if (d.twists && !(*d.twists)[i].is_unit()) {
        out.push_back({clause::kTwistsInvertible, "t_" + std::to_string(i) + " at " + g + " is not invertible"});
      }
    }
    if (d.dual) {
      const DegreeData* neg = datum.find(gr.negate(d.g));
      std::vector<std::size_t> sorted = *d.dual;
      std::sort(sorted.begin(), sorted.end());
      bool perm = neg != nullptr && neg->size() == d.size();
      for (std::size_t i = 0; perm && i < sorted.size(); ++i) perm = sorted[i] == i;
      if (!perm) {
        out.push_back({clause::kDualPermutation, "dual map at " + g + " is not a bijection onto I_{-g}"});
      }
    }
  }
}

void validate_blocks(const ModularDatum& datum, std::vector<Issue>& out) {
  const GradingSpec& gr = datum.grading;
  for (const auto& [key, sp] : datum.sprime) {
    const auto& [g, h] = key;
    const std::string where = "(" + gr.format(g) + ", " + gr.format(h) + ")";
    if (g == h) {
      const ExactMatrix s = modified_S(datum, g, g);
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.cols(); ++j)
          if (!(s(i, j) == s(j, i))) {
            out.push_back({clause::kSymmetric, "S" + where + " not symmetric at (" + std::to_string(i) + ", " +
                                                   std::to_string(j) + ")"});
          }
      continue;
    }
    if (!(g < h)) continue;
    auto rev = datum.sprime.find({h, g});
    if (rev == datum.sprime.end()) continue;
    const ExactMatrix a = sp * ExactMatrix::diagonal(datum.at(h).dims);
    const ExactMatrix b = rev->second * ExactMatrix::diagonal(datum.at(g).dims);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!(a(i, j) == b(j, i))) {
          out.push_back({clause::kTranspose, "S" + where + " != transpose of reverse block at (" +
                                                 std::to_string(i) + ", " + std::to_string(j) + ")"});
        }
  }
}

}  // namespace

std::vector<Issue> validate(const ModularDatum& datum) {
  std::vector<Issue> out;
  if (!datum.grading.subset_is_symmetric()) {
    for (const auto& x : datum.grading.small_subset) {
      if (!datum.grading.in_small_subset(datum.grading.negate(x))) {
        out.push_back({clause::kSubsetSymmetric, "X contains " + datum.grading.format(x) + " but not its negative"});
      }
    }
  }
  validate_translation(datum, out);
  validate_degrees(datum, out);
  validate_blocks(datum, out);
  if (datum.fusion) {
    for (const auto& f : *datum.fusion) {
      const Degree g3 = datum.grading.add(f.g1, f.g2);
      if (datum.find(g3) == nullptr) {
        out.push_back({clause::kFusionGrading, "fusion target degree " + datum.grading.format(g3) + " not listed"});
      }
    }
  }
  return out;
}

}  // namespace relmod::catmodel
