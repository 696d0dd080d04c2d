#include <chrono>
#include <cstdio>
#include <functional>
#include <algorithm>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relmod/checks/checks.hpp"
#include "relmod/cli/cli.hpp"
#include "relmod/closure/engine.hpp"
#include "relmod/exactnum/linalg.hpp"
#include "relmod/sl21/characters.hpp"
#include "relmod/sl21/rank_bound.hpp"
#include "relmod/sl21/relations.hpp"
#include "support/closure_words.hpp"
#include "support/sl21_oracle.hpp"
#include "support/synthetic.hpp"

using nlohmann::json;
using relmod::catmodel::Degree;
using relmod::catmodel::ModularDatum;
using relmod::checks::Status;
using relmod::exactnum::CycScalar;
using relmod::exactnum::ExactMatrix;
using relmod::exactnum::Exec;
using relmod::exactnum::Var;
using relmod::testing::alpha_degree;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome rank_bound_cli() {
  Outcome o;
  for (const auto& [ell, n] : {std::pair{"3", 3}, std::pair{"5", 10}, std::pair{"7", 21}}) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = relmod::cli::run({"sl21", "rank-bound", "--ell", ell, "--format", "json"}, out, err);
    const double dt = seconds_since(t0);
    if (code != 0) {
      fail(o, std::string("ell=") + ell + " exit " + std::to_string(code));
      continue;
    }
    const json j = json::parse(out.str());
    const auto& p = j["payload"];
    if (p["classes"].size() != static_cast<std::size_t>(n) || p["bound"] != n)
      fail(o, std::string("ell=") + ell + " wrong class count");
    if (p["fixed_point_free"] != true) fail(o, std::string("ell=") + ell + " pairing has a fixed point");
    if (j["results"][0]["summary"].get<std::string>().find("not relative modular") == std::string::npos)
      fail(o, std::string("ell=") + ell + " verdict summary");
    if (dt >= 1.0) fail(o, std::string("ell=") + ell + " took " + std::to_string(dt) + " s");
  }
  return o;
}

std::set<std::string> expected_clauses() {
  std::set<std::string> s{"K=q^H", "A1", "A3 E2^2", "A3 F2^2", "A4", "A5 E", "A5 F", "A6"};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      s.insert("A2 E" + ij);
      s.insert("A2 F" + ij);
      s.insert("A3 " + ij);
      for (const char* x : {"H", "K", "E", "F"}) s.insert(std::string("A7 [H,") + x + "]" + ij);
    }
  return s;
}

Outcome ak_relations() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto clauses = expected_clauses();
  const auto conv = relmod::sl21::default_convention();
  for (int ell : {3, 5, 7})
    for (int k = 1; k <= ell - 1; ++k) {
      const std::string tag = "ell=" + std::to_string(ell) + " k=" + std::to_string(k);
      const auto rep = relmod::sl21::build_Ak(k, ell, conv);
      if (rep.dim() != static_cast<std::size_t>(2 * k + 1)) fail(o, tag + " dim");
      const auto v = relmod::sl21::check_relations(rep);
      if (!v.ok()) fail(o, tag + " " + v.summary);
      std::set<std::string> seen;
      for (const auto& c : v.children) seen.insert(c.check);
      if (seen != clauses) fail(o, tag + " clause list differs");
      std::size_t b = 0;
      for (int j = 0; j <= 1; ++j)
        for (int i = 0; i <= k - j; ++i, ++b) {
          if (rep.weight(1, b) != k - j - 2 * i) fail(o, tag + " H1 spectrum");
          if (rep.weight(2, b) != i + j) fail(o, tag + " H2 spectrum");
        }
    }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) fail(o, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome character_identities() {
  using namespace relmod::sl21;
  Outcome o;
  auto X = [](int e) { return CycScalar::variable(Var::x, e); };
  auto Y = [](int e) { return CycScalar::variable(Var::y, e); };
  auto L = [](int k, long i, bool odd = false) { return WeightLabel{k, i, odd, 0, 1}; };
  const CycScalar denom = X(1) - X(-1);
  for (int ell : {3, 5, 7}) {
    for (int n = 1; n <= ell - 1; ++n) {
      const auto chi = character_of_rep(build_Ak(n, ell, default_convention()));
      const CycScalar a = Y(n) * (X(n + 1) - X(-n - 1));
      const CycScalar b = Y(n + 1) * (X(n) - X(-n));
      if (!(chi.plus * denom == a + b) || !(chi.minus * denom == a - b) || !(chi == closed_form_Ak(n)))
        fail(o, "closed form n=" + std::to_string(n));
    }
    for (int k = 1; k <= ell - 3; ++k) {
      const auto d = decompose_typical(character_of_label(L(k, 0), ell) * standard_character());
      std::vector<LabelCount> want{{L(k + 1, 0), 1}, {L(k - 1, 1), 1}, {L(k, 1, true), 1}};
      std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
      if (!d.ok || d.labels != want) fail(o, "V tensor v at k=" + std::to_string(k));
    }
    const auto av = decompose_typical(closed_form_Ak(ell - 1) * character_of_label(L(0, 0), ell));
    std::vector<LabelCount> want{{L(ell - 1, 0), 1}, {L(ell - 2, 1, true), 1}};
    std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
    if (!av.ok || av.labels != want) fail(o, "A tensor V^0 at ell=" + std::to_string(ell));
    int negl = 0;
    for (const auto& lc : av.labels) negl += lc.label.negligible(ell);
    if (negl != 1 || !L(ell - 1, 0).negligible(ell)) fail(o, "negligible flag at ell=" + std::to_string(ell));

    const auto A = closed_form_Ak(ell - 1);
    for (const auto& l : theta_labels(ell)) {
      const auto f = fuse_A(l, ell);
      const auto d = decompose_typical(A * character_of_label(l, ell));
      if (!d.ok || reduce_modulo_negligible(d.labels, ell).kept != std::vector<LabelCount>{{f, 1}})
        fail(o, "fuse_A vs characters at " + to_string(l));
      relmod::testing::LabelBag expect;
      expect[{f.k, f.shift, f.odd}] = 1;
      if (relmod::testing::induction_fuse_A(l.k, l.shift, ell) != expect)
        fail(o, "fuse_A vs induction at " + to_string(l));
    }
  }
  return o;
}

// P = S_{a,a} S_{a,-a} with S = S' diag(d), by explicit triple loop.
ExactMatrix oracle_P(const ModularDatum& d) {
  const Degree a = alpha_degree(1);
  const Degree ma = alpha_degree(-1);
  const ExactMatrix& s1 = d.sprime.at({a, a});
  const ExactMatrix& s2 = d.sprime.at({a, ma});
  const auto& da = d.at(a).dims;
  const auto& dm = d.at(ma).dims;
  const std::size_t n = s1.rows();
  ExactMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CycScalar acc;
      for (std::size_t k = 0; k < n; ++k) acc += s1(i, k) * da[k] * s2(k, j) * dm[j];
      p(i, j) = acc;
    }
  return p;
}

std::vector<long> first_mismatch(const ExactMatrix& p) {
  const CycScalar zeta = p(0, 0);
  if (zeta.is_zero()) return {0, 0};
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (i == j ? !(p(i, j) == zeta) : !p(i, j).is_zero()) return {static_cast<long>(i), static_cast<long>(j)};
  return {};
}

Outcome checks_oracle() {
  Outcome o;
  const Degree a = alpha_degree(1);
  const Degree ma = alpha_degree(-1);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = relmod::testing::random_modular_instance(rng, 1 + trial % 5);
    const auto v = relmod::checks::check_relative_modularity(inst.datum, a, a);
    const auto* z = v.find_derived("zeta_Omega");
    if (v.status != Status::holds || z == nullptr || !(z->value == inst.zeta))
      fail(o, "instance " + std::to_string(trial) + " not recovered");

    const CycScalar delta = relmod::testing::random_unit(rng, 3) * CycScalar::variable(Var::u, trial % 3);
    ModularDatum ext = inst.datum;
    relmod::testing::add_delta_consistent_degree(rng, ext, alpha_degree(2), 2 + trial % 4, delta);
    relmod::testing::add_delta_consistent_degree(rng, ext, alpha_degree(3), 2 + (trial + 1) % 4, delta);
    for (long c : {2L, 3L}) {
      const auto& dd = ext.at(alpha_degree(c));
      for (std::size_t j = 0; j < dd.size(); ++j)
        if (!(relmod::checks::delta_minus(ext, dd.g, j) == delta))
          fail(o, "Delta_- depends on j or g in instance " + std::to_string(trial));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto inst = relmod::testing::random_modular_instance(rng, n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    ExactMatrix& block = inst.datum.sprime.at({a, ma});
    block(pick(rng), pick(rng)) += relmod::testing::random_unit(rng, 2);
    const auto expect = first_mismatch(oracle_P(inst.datum));
    const auto v = relmod::checks::check_relative_modularity(inst.datum, a, a);
    const auto* w = v.find_witness("P");
    if (expect.empty()) {
      fail(o, "perturbation " + std::to_string(trial) + " left P scalar");
    } else if (v.status != Status::fails || w == nullptr || w->indices != expect) {
      fail(o, "perturbation " + std::to_string(trial) + " witness differs from oracle");
    }
  }
  return o;
}

ExactMatrix bounded_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m = relmod::testing::random_matrix(rng, rows, cols, 5, 5);
  if (rows < 2 || rng() % 2 == 0) return m;
  std::uniform_int_distribution<std::size_t> row(0, rows - 1);
  const std::size_t dst = row(rng);
  const std::size_t s1 = row(rng);
  const std::size_t s2 = row(rng);
  for (std::size_t j = 0; j < cols; ++j) {
    switch (rng() % 3) {
      case 0:
        m(dst, j) = m(s1, j) + m(s2, j);
        break;
      case 1:
        m(dst, j) = CycScalar(-1L) * m(s1, j);
        break;
      default:
        m(dst, j) = CycScalar();
    }
  }
  return m;
}

Outcome rank_oracle() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix m = bounded_matrix(rng, size(rng), size(rng));
    const std::size_t want = relmod::testing::naive_field_rank(m);
    if (relmod::exactnum::rank(m, Exec::serial) != want || relmod::exactnum::rank(m, Exec::parallel) != want)
      fail(o, "matrix " + std::to_string(trial) + " rank differs");
  }
  return o;
}

Outcome closure_toy() {
  using namespace relmod::closure;
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const ClosureDatum d = load_closure(RELMOD_DATA_DIR "/closure_toy.json");
  if (!check_cor1(d).ok()) fail(o, "cor1 does not hold");
  const auto exprs = relmod::testing::tensor_expressions({"a", "b"}, 3, 3);
  if (exprs.size() != 56) fail(o, "expected 56 expressions");
  for (const auto& s : exprs) {
    const auto r = certify(d, parse_expr(s), 3);
    if (r.status != CertifyResult::Status::certified || !replay(d, *r.certificate).ok) fail(o, s + " not certified");
  }
  for (std::size_t i = 0; i < d.products.size(); ++i) {
    ClosureDatum e = d;
    e.products.erase(e.products.begin() + static_cast<long>(i));
    const auto v = check_cor1(e);
    const std::string name = "no rule for (" + d.products[i].left + "," + d.products[i].right + ")";
    if (v.status != Status::fails || v.summary != name) fail(o, "deleting product rule " + std::to_string(i));
  }
  for (std::size_t i = 0; i < d.powers.size(); ++i) {
    ClosureDatum e = d;
    e.powers.erase(e.powers.begin() + static_cast<long>(i));
    const auto v = check_cor1(e);
    const std::string name = "no rule for " + d.powers[i].atom + "*" + *d.v + "^1";
    if (v.status != Status::fails || v.summary != name) fail(o, "deleting power rule " + std::to_string(i));
  }
  const double dt = seconds_since(t0);
  if (dt >= 5.0) fail(o, "took " + std::to_string(dt) + " s");
  return o;
}

bool names_clause(const relmod::checks::Verdict& v, const std::string& clause) {
  for (const auto& c : v.children)
    if (c.status == Status::fails && c.find_witness(clause) != nullptr) return true;
  return false;
}

Outcome negative_controls() {
  Outcome o;
  ModularDatum d = relmod::testing::identity_datum(2);
  if (!relmod::checks::check_premodular_inputs(d).ok()) fail(o, "baseline datum rejected");
  d.translation.quantum_dimension.push_back({{1}, CycScalar(2L)});
  auto v = relmod::checks::check_premodular_inputs(d);
  if (v.status != Status::fails || !names_clause(v, "translation.quantum_dimension.unit"))
    fail(o, "qdim = 2 not rejected by name");
  d = relmod::testing::identity_datum(2);
  d.grading.small_subset.push_back(d.grading.parse("1/4"));
  v = relmod::checks::check_premodular_inputs(d);
  if (v.status != Status::fails || !names_clause(v, "grading.small_subset.symmetric"))
    fail(o, "non-symmetric X not rejected by name");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 rank-bound CLI for ell in {3,5,7}", rank_bound_cli},
      {"C2 A_k relations, dimensions and weight spectra", ak_relations},
      {"C3 character identities and A fusion", character_identities},
      {"C4 modularity checks against an independent P", checks_oracle},
      {"C5 rank against field elimination", rank_oracle},
      {"C6 closure toy datum: cor1, certificates, rule deletion", closure_toy},
      {"C7 premodular negative controls", negative_controls},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    failures += !o.ok;
    std::printf("%s [PRIMARY] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), dt, o.ok ? "" : ": ",
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
