#include "relmod/sl21/relations.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace relmod::sl21 {

using checks::Status;
using checks::Verdict;
using checks::Witness;
using exactnum::quantum_integer;

namespace {

Verdict with_witness(const std::string& clause, Status status, std::string summary, Witness w) {
  Verdict v = checks::make_verdict(clause, status, std::move(summary));
  v.witnesses.push_back(std::move(w));
  return v;
}

struct Ctx {
  const WeightModuleRep& rep;
  Exec exec;
  std::vector<Verdict> children;

  ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) const { return exactnum::multiply(a, b, exec); }

  /// Super-commutator of two generators.
  ExactMatrix bracket(Gen a, Gen b) const {
    const ExactMatrix ab = mul(rep[a], rep[b]);
    const ExactMatrix ba = mul(rep[b], rep[a]);
    return is_odd(a) && is_odd(b) ? ab + ba : ab - ba;
  }

  void identity(const std::string& clause, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    const ExactMatrix diff = lhs - rhs;
    for (std::size_t c = 0; c < diff.cols(); ++c) {
      for (std::size_t r = 0; r < diff.rows(); ++r) {
        if (diff(r, c).is_zero()) continue;
        children.push_back(with_witness(clause, Status::fails, "fails on basis vector " + rep.labels[c],
                                        Witness{clause, {static_cast<long>(r), static_cast<long>(c)}, diff(r, c)}));
        return;
      }
    }
    children.push_back(with_witness(clause, Status::holds, "holds", Witness{clause, {}, CycScalar()}));
  }

  void vacuous(const std::string& clause) {
    Verdict v = with_witness(clause, Status::holds, "vacuous", Witness{"vacuous", {}, CycScalar()});
    v.notes.push_back("involves three simple roots; sl(2|1) has two");
    children.push_back(std::move(v));
  }
};

/// (K_i - K_i^{-1}) / (q - q^{-1}) = diag([h]) on weight vectors.
ExactMatrix quantum_h(const WeightModuleRep& rep, int i) {
  ExactMatrix m(rep.dim(), rep.dim());
  for (std::size_t b = 0; b < rep.dim(); ++b) m(b, b) = quantum_integer(rep.weight(i, b), rep.ell);
  return m;
}

}  // namespace

Verdict check_relations(const WeightModuleRep& rep, Exec exec) {
  Ctx c{rep, exec, {}};
  const std::size_t n = rep.dim();
  const ExactMatrix zero(n, n);
  const ExactMatrix one = ExactMatrix::identity(n);

  bool h_ok = true;
  for (int i = 1; i <= 2 && h_ok; ++i) {
    try {
      for (std::size_t b = 0; b < n; ++b) rep.weight(i, b);
    } catch (const std::invalid_argument& e) {
      c.children.push_back(with_witness("weight-module", Status::fails, e.what(), Witness{"weight-module", {i}, CycScalar()}));
      h_ok = false;
    }
  }
  if (!h_ok) return checks::aggregate("relations", std::move(c.children));

  const ExactMatrix K[3] = {one, rep.K(1), rep.K(2)};
  const ExactMatrix Kinv[3] = {one, rep.K(1, -1), rep.K(2, -1)};
  const Gen E[3] = {Gen::H1, Gen::E1, Gen::E2};
  const Gen F[3] = {Gen::H1, Gen::F1, Gen::F2};
  const Gen H[3] = {Gen::H1, Gen::H1, Gen::H2};

  c.identity("K=q^H", c.mul(K[1], Kinv[1]) + c.mul(K[2], Kinv[2]), one + one);

  c.identity("A1", c.mul(K[1], K[2]), c.mul(K[2], K[1]));

  // (A2) K_i E_j K_i^{-1} = q^{a_ij} E_j, K_i F_j K_i^{-1} = q^{-a_ij} F_j.
  {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const long a = kCartan[i - 1][j - 1];
        const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        c.identity("A2 E" + ij, c.mul(c.mul(K[i], rep[E[j]]), Kinv[i]), rep[E[j]] * CycScalar::root(rep.ell, a));
        c.identity("A2 F" + ij, c.mul(c.mul(K[i], rep[F[j]]), Kinv[i]), rep[F[j]] * CycScalar::root(rep.ell, -a));
      }
  }

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const std::string clause = "A3 (" + std::to_string(i) + "," + std::to_string(j) + ")";
      c.identity(clause, c.bracket(E[i], F[j]), i == j ? quantum_h(rep, i) : zero);
    }
  c.identity("A3 E2^2", c.mul(rep[Gen::E2], rep[Gen::E2]), zero);
  c.identity("A3 F2^2", c.mul(rep[Gen::F2], rep[Gen::F2]), zero);

  c.vacuous("A4");

  // (A5) with i = 1, j = 2: X1^2 X2 - [2] X1 X2 X1 + X2 X1^2 = 0.
  const CycScalar q2 = quantum_integer(2, rep.ell);
  for (const auto& [name, x1, x2] : {std::tuple{"A5 E", Gen::E1, Gen::E2}, std::tuple{"A5 F", Gen::F1, Gen::F2}}) {
    const ExactMatrix& a = rep[x1];
    const ExactMatrix& b = rep[x2];
    const ExactMatrix a2 = c.mul(a, a);
    c.identity(name, c.mul(a2, b) + c.mul(b, a2), c.mul(c.mul(a, b), a) * q2);
  }

  c.vacuous("A6");

  for (int i = 1; i <= 2; ++i) {
    const std::string si = std::to_string(i);
    for (int j = 1; j <= 2; ++j) {
      const std::string ij = "(" + si + "," + std::to_string(j) + ")";
      const long a = kCartan[i - 1][j - 1];
      c.identity("A7 [H,H]" + ij, c.bracket(H[i], H[j]), zero);
      c.identity("A7 [H,K]" + ij, c.mul(rep[H[i]], K[j]), c.mul(K[j], rep[H[i]]));
      c.identity("A7 [H,E]" + ij, c.bracket(H[i], E[j]), rep[E[j]] * CycScalar(a));
      c.identity("A7 [H,F]" + ij, c.bracket(H[i], F[j]), rep[F[j]] * CycScalar(-a));
    }
  }

  Verdict v = checks::aggregate("relations", std::move(c.children));
  v.notes.push_back(std::string("convention: ") + to_string(rep.convention));
  return v;
}

Convention default_convention() {
  static const Convention chosen = [] {
    for (Convention conv : {Convention::original, Convention::corrected}) {
      bool all = true;
      for (int ell : {3, 5})
        for (int k = 1; k <= ell - 1 && all; ++k) all = check_relations(build_Ak(k, ell, conv), Exec::serial).ok();
      if (all) return conv;
    }
    throw std::logic_error("no A_k convention satisfies the defining relations");
  }();
  return chosen;
}

}  // namespace relmod::sl21
