#include "relmod/sl21/rank_bound.hpp"

#include <map>
#include <stdexcept>

namespace relmod::sl21 {

using catmodel::Degree;
using catmodel::DegreeData;
using catmodel::ModularDatum;
using checks::Status;
using checks::Witness;
using exactnum::Var;

namespace {

void require_ell(int ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and at least 3");
}

CycScalar u(int e) { return CycScalar::variable(Var::u, e); }

/// Row factor of `label` against fuse_A(label) for columns of degree
/// `sign` * alpha.
CycScalar row_factor(const WeightLabel& label, int ell, int sign = 1) {
  const bool wraps = label.shift + label.k + 1 >= ell;
  return -u(sign * (wraps ? -2 : 2));
}

std::string key(const WeightLabel& l) { return std::to_string(l.k) + "," + std::to_string(l.shift); }

}  // namespace

std::vector<WeightLabel> theta_labels(int ell) {
  require_ell(ell);
  std::vector<WeightLabel> out;
  for (int k = 0; k <= ell - 2; ++k)
    for (int i = 0; i < ell; ++i) out.push_back(WeightLabel{k, i, false, 0, 1});
  return out;
}

RankBoundReport rank_bound_analysis(int ell) {
  require_ell(ell);
  RankBoundReport r;
  r.ell = ell;
  const auto labels = theta_labels(ell);
  r.index_count = static_cast<long>(labels.size());
  r.fixed_point_free = true;
  r.double_fusion_identity = true;
  std::map<std::pair<int, long>, bool> seen;
  for (const auto& l : labels) {
    WeightLabel partner = fuse_A(l, ell);
    if (fuse_A(partner, ell) != l) r.double_fusion_identity = false;
    partner.odd = false;
    if (partner == l) r.fixed_point_free = false;
    if (seen[{l.k, l.shift}]) continue;
    seen[{l.k, l.shift}] = true;
    seen[{partner.k, partner.shift}] = true;
    r.classes.push_back({l, partner, l.shift + l.k + 1 >= ell, row_factor(l, ell)});
  }
  r.bound = static_cast<long>(r.classes.size());

  const bool degenerate = r.fixed_point_free && r.bound < r.index_count;
  r.verdict = checks::make_verdict(
      "rank-bound", degenerate ? Status::holds : Status::fails,
      degenerate ? "rank S_g <= " + std::to_string(r.bound) + " < " + std::to_string(r.index_count) +
                       ": S_g degenerate for every generic g, hence not relative modular"
                 : "involution has fixed points; no rank bound");
  r.verdict.witnesses.push_back({"classes", {}, CycScalar(r.bound)});
  r.verdict.witnesses.push_back({"index_count", {}, CycScalar(r.index_count)});
  for (const auto& p : r.classes)
    r.verdict.witnesses.push_back({"row_factor", {p.first.k, p.first.shift, p.second.k, p.second.shift}, p.factor});
  r.verdict.derived.push_back({"S'(A,W)", u(-2)});
  r.verdict.derived.push_back({"psi(a,(0,1))", u(-4)});
  r.verdict.notes.push_back(std::string("fuse_A twice is the identity with parity restored: ") +
                            (r.double_fusion_identity ? "yes" : "no"));
  r.verdict.notes.push_back("psi(a,(0,1)) provenance: input-dependent");

  r.open_questions = {
      "is A (x) A isomorphic to sigma(1,0) in the semisimplified category",
      "does A enrich the translation group",
      "does the category embed in a relative modular category",
      "does sigma admit a square root",
  };
  return r;
}

ModularDatum emit_datum(int ell) {
  require_ell(ell);
  ModularDatum d;
  d.name = "sl21-ell" + std::to_string(ell);
  d.grading.torus = true;
  d.grading.small_subset = {d.grading.zero()};

  auto& t = d.translation;
  t.cyclic_orders = {2, 0};
  t.quantum_dimension = {{{0, 0}, CycScalar(1L)}, {{1, 0}, CycScalar(-1L)}, {{0, 1}, CycScalar(1L)}, {{1, 1}, CycScalar(-1L)}};
  Degree a;
  a.alpha = 1;
  Degree ma;
  ma.alpha = -1;
  for (const auto& [g, s] : {std::pair{a, 1}, std::pair{ma, -1}}) {
    t.psi.push_back({g, {0, 0}, CycScalar(1L)});
    t.psi.push_back({g, {1, 0}, CycScalar(1L)});
    t.psi.push_back({g, {0, 1}, u(-4 * s)});
    t.psi.push_back({g, {1, 1}, u(-4 * s)});
  }

  const auto labels = theta_labels(ell);
  const std::size_t n = labels.size();
  // Each label is (class, factor) with row(label) = factor * row(class rep).
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[key(labels[i])] = i;
  std::vector<std::size_t> cls(n);
  std::vector<CycScalar> g(n), gbar(n);
  std::size_t classes = 0;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    WeightLabel p = fuse_A(labels[i], ell);
    p.odd = false;
    const std::size_t j = index.at(key(p));
    cls[i] = cls[j] = classes++;
    g[i] = gbar[i] = CycScalar(1L);
    g[j] = row_factor(p, ell, 1);
    gbar[j] = row_factor(p, ell, -1);
    done[i] = done[j] = true;
  }

  DegreeData da{a, {}, std::vector<CycScalar>(n, CycScalar(1L)), std::nullopt, std::nullopt};
  DegreeData dm{ma, {}, std::vector<CycScalar>(n, CycScalar(1L)), std::nullopt, std::nullopt};
  for (const auto& l : labels) {
    da.labels.push_back(to_string(l));
    WeightLabel neg = l;
    neg.alpha = -1;
    dm.labels.push_back(to_string(neg));
  }
  d.degrees = {da, dm};

  // Core C = I + J on classes: symmetric, invertible, no zero entry.
  const auto core = [&](std::size_t r, std::size_t c) { return CycScalar(cls[r] == cls[c] ? 2L : 1L); };
  ExactMatrix s_aa(n, n), s_ma(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      s_aa(r, c) = g[r] * g[c] * core(r, c);
      s_ma(r, c) = g[r] * gbar[c] * core(r, c);
    }
  d.sprime[{a, a}] = std::move(s_aa);
  d.sprime[{ma, a}] = std::move(s_ma);
  d.placeholders = {"degrees.dims", "degrees.dual", "sprime.core"};
  return d;
}

}  // namespace relmod::sl21
