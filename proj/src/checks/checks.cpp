#include "relmod/checks/checks.hpp"

#include <map>

#include "relmod/exactnum/linalg.hpp"

namespace relmod::checks {

using catmodel::DegreeData;
using catmodel::MissingBlock;
using exactnum::ExactMatrix;

namespace {

const char* kDeltaPlusConvention =
    "convention: Delta_+ = t_j sum_i S'_{i*,j} t_i d(V_i) (mirror of Delta_-)";

const std::vector<CycScalar>& require_twists(const ModularDatum& datum, const DegreeData& d) {
  if (!d.twists) throw DataAbsent("twists absent at degree " + datum.grading.format(d.g));
  return *d.twists;
}

std::string deg(const ModularDatum& datum, const Degree& g) { return datum.grading.format(g); }

std::string block_name(const ModularDatum& datum, const Degree& g, const Degree& h) {
  return "S(" + deg(datum, g) + "," + deg(datum, h) + ")";
}

void add_kernel_witnesses(Verdict& v, const std::string& name, const std::vector<CycScalar>& kernel) {
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (!kernel[i].is_zero()) v.witnesses.push_back({name + ".kernel", {static_cast<long>(i)}, kernel[i]});
  }
}

// Row index with no zero entry, or -1.
long zero_free_row(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = !m(i, j).is_zero();
    if (ok) return static_cast<long>(i);
  }
  return -1;
}

Verdict absent(const std::string& check, const std::string& what) {
  return make_verdict(check, Status::data_absent, what);
}

// Delta_+ Delta_- when twists and the (-g,g) block allow it.
std::optional<std::pair<CycScalar, CycScalar>> deltas(const ModularDatum& datum, const Degree& g) {
  try {
    return std::pair{delta_minus(datum, g, 0), delta_plus(datum, g, 0)};
  } catch (const catmodel::DatumError&) {
    return std::nullopt;
  }
}

}  // namespace

CycScalar delta_minus(const ModularDatum& datum, const Degree& g, std::size_t j) {
  const DegreeData& d = datum.at(g);
  if (j >= d.size()) throw std::out_of_range("index j outside I_g");
  const auto& t = require_twists(datum, d);
  const ExactMatrix sp = datum.require_sprime(g, g);
  CycScalar acc;
  for (std::size_t i = 0; i < d.size(); ++i) acc += sp(i, j) * t[i].inverse() * d.dims[i];
  return t[j].inverse() * acc;
}

CycScalar delta_plus(const ModularDatum& datum, const Degree& g, std::size_t j) {
  const DegreeData& d = datum.at(g);
  if (j >= d.size()) throw std::out_of_range("index j outside I_g");
  const Degree mg = datum.grading.negate(g);
  if (datum.find(mg) == nullptr) throw DataAbsent("degree " + deg(datum, mg) + " absent: no dual index set");
  if (d.dual && d.dual->size() != d.size()) throw DataAbsent("dual map at " + deg(datum, g) + " malformed");
  const auto& t = require_twists(datum, d);
  const ExactMatrix sp = datum.require_sprime(mg, g);
  CycScalar acc;
  for (std::size_t i = 0; i < d.size(); ++i) acc += sp(d.dual_of(i), j) * t[i] * d.dims[i];
  return t[j] * acc;
}

Verdict check_nondegeneracy(const ModularDatum& datum, const Degree& g, Exec exec) {
  const std::string check = "nondegeneracy";
  const Degree mg = datum.grading.negate(g);
  datum.at(g);
  if (datum.find(mg) == nullptr) return absent(check, "degree " + deg(datum, mg) + " absent");
  ExactMatrix sg;
  ExactMatrix smg;
  try {
    sg = catmodel::modified_S(datum, g, g);
    smg = catmodel::modified_S(datum, mg, g);
  } catch (const MissingBlock& e) {
    return absent(check, e.what());
  }

  Verdict v = make_verdict(check, Status::holds, "");
  const std::string n1 = block_name(datum, g, g);
  const std::string n2 = block_name(datum, mg, g);
  const std::size_t r1 = exactnum::rank(sg, exec);
  const std::size_t r2 = exactnum::rank(smg, exec);
  v.derived.push_back({"rank " + n1, CycScalar(static_cast<long>(r1))});
  v.derived.push_back({"rank " + n2, CycScalar(static_cast<long>(r2))});
  v.witnesses.push_back({"rank " + n1, {static_cast<long>(sg.rows()), static_cast<long>(sg.cols())},
                         CycScalar(static_cast<long>(r1))});
  v.witnesses.push_back({"rank " + n2, {static_cast<long>(smg.rows()), static_cast<long>(smg.cols())},
                         CycScalar(static_cast<long>(r2))});

  const bool full1 = sg.is_square() && r1 == sg.rows();
  const bool full2 = smg.is_square() && r2 == smg.rows();
  if (!full1 || !full2) {
    v.status = Status::fails;
    v.summary = std::string(!full1 ? n1 : n2) + " is degenerate";
    if (!full1 && sg.is_square()) {
      if (auto k = exactnum::kernel_vector(sg, exec)) add_kernel_witnesses(v, n1, *k);
    }
    if (!full2 && smg.is_square()) {
      if (auto k = exactnum::kernel_vector(smg, exec)) add_kernel_witnesses(v, n2, *k);
    }
    return v;
  }

  v.summary = n1 + " and " + n2 + " are non-degenerate";
  if (auto dl = deltas(datum, g)) {
    const auto& [dm, dp] = *dl;
    v.derived.push_back({"Delta_-", dm});
    v.derived.push_back({"Delta_+", dp});
    v.derived.push_back({"Delta_+ Delta_-", dp * dm});
    v.notes.push_back(kDeltaPlusConvention);
    if ((dp * dm).is_zero()) {
      v.status = Status::fails;
      v.internal_inconsistency = true;
      v.summary += ", yet Delta_+ Delta_- = 0 (internal inconsistency)";
      v.witnesses.push_back({"Delta_+ Delta_-", {}, dp * dm});
    }
  } else {
    v.notes.push_back("Delta_+/- not computed: twists or dual block absent");
  }
  return v;
}

Verdict check_rank_constancy(const ModularDatum& datum, Exec exec) {
  const std::string check = "rank-constancy";
  if (datum.sprime.size() < 2) return absent(check, "fewer than 2 S-matrix blocks present");
  std::vector<std::pair<std::string, ExactMatrix>> blocks;
  for (const auto& [key, sp] : datum.sprime) {
    blocks.emplace_back(block_name(datum, key.first, key.second), catmodel::modified_S(datum, key.first, key.second));
  }
  for (const auto& [name, m] : blocks) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j).is_zero()) {
          Verdict v = make_verdict(check, Status::hypothesis_not_met, "the mixed S-matrices have no zero entry");
          v.witnesses.push_back({name + ".zero_entry", {static_cast<long>(i), static_cast<long>(j)}, CycScalar()});
          return v;
        }
  }
  Verdict v = make_verdict(check, Status::holds, "");
  std::size_t first = 0;
  bool constant = true;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t r = exactnum::rank(blocks[b].second, exec);
    if (b == 0) first = r;
    v.derived.push_back({"rank " + blocks[b].first, CycScalar(static_cast<long>(r))});
    v.witnesses.push_back({"rank " + blocks[b].first, {static_cast<long>(b)}, CycScalar(static_cast<long>(r))});
    constant = constant && r == first;
  }
  v.status = constant ? Status::holds : Status::fails;
  v.summary = constant ? "all " + std::to_string(blocks.size()) + " blocks have rank " + std::to_string(first)
                       : "block ranks differ";
  if (!datum.fusion) v.notes.push_back("fusion data absent: fusion identity not cross-checked");
  return v;
}

Verdict check_dmug(const ModularDatum& datum, const Degree& g, Exec exec) {
  const std::string check = "dmug";
  const DegreeData& d = datum.at(g);
  if (!datum.orbit_count) return absent(check, "orbit count N of C_0 absent");
  const Degree mg = datum.grading.negate(g);
  ExactMatrix sg;
  ExactMatrix smg;
  try {
    sg = catmodel::modified_S(datum, g, g);
    if (datum.find(mg) == nullptr) throw MissingBlock("degree " + deg(datum, mg) + " absent");
    smg = catmodel::modified_S(datum, mg, g);
  } catch (const MissingBlock& e) {
    return absent(check, e.what());
  }
  if (datum.translation.no_self_extension != true) {
    return make_verdict(check, Status::hypothesis_not_met, "{sigma(k)} has no self extensions (user-asserted flag absent or false)");
  }

  Verdict v = make_verdict(check, Status::holds, "");
  v.notes.push_back("sufficient condition for Z-trivial Muger center of C_0; the center itself is not computed");
  const long n = *datum.orbit_count;
  v.derived.push_back({"N", CycScalar(n)});
  const std::string n1 = block_name(datum, g, g);
  const std::string n2 = block_name(datum, mg, g);

  if (static_cast<long>(d.size()) != n) {
    v.status = Status::fails;
    v.summary = "condition (1): |I_g| = " + std::to_string(d.size()) + " but N = " + std::to_string(n);
    v.witnesses.push_back({"|I_g|", {static_cast<long>(d.size()), n}, CycScalar(static_cast<long>(d.size()))});
    return v;
  }
  const std::size_t r = exactnum::rank(sg, exec);
  v.derived.push_back({"rank " + n1, CycScalar(static_cast<long>(r))});
  if (r != sg.rows()) {
    v.status = Status::fails;
    v.summary = "condition (1): " + n1 + " is not invertible";
    if (auto k = exactnum::kernel_vector(sg, exec)) add_kernel_witnesses(v, n1, *k);
    return v;
  }
  v.witnesses.push_back({"rank " + n1, {static_cast<long>(r)}, CycScalar(static_cast<long>(r))});
  const long row1 = zero_free_row(sg);
  const long row2 = zero_free_row(smg);
  if (row1 < 0 || row2 < 0) {
    v.status = Status::fails;
    v.summary = "condition (2): " + std::string(row1 < 0 ? n1 : n2) + " has a zero entry in every row";
    v.witnesses.push_back({(row1 < 0 ? n1 : n2) + ".zero_free_row", {-1}, CycScalar()});
    return v;
  }
  v.witnesses.push_back({n1 + ".zero_free_row", {row1}, CycScalar(1L)});
  v.witnesses.push_back({n2 + ".zero_free_row", {row2}, CycScalar(1L)});
  v.summary = "conditions (1) and (2) hold: sufficient condition for Z-trivial Muger center";
  return v;
}

Verdict check_relative_modularity(const ModularDatum& datum, const Degree& g, const Degree& h, Exec exec) {
  const std::string check = "relative-modularity";
  const DegreeData& dg = datum.at(g);
  datum.at(h);
  const Degree mg = datum.grading.negate(g);
  if (datum.find(mg) == nullptr) return absent(check, "degree " + deg(datum, mg) + " absent");
  const DegreeData& dmg = datum.at(mg);
  ExactMatrix sgh;
  ExactMatrix shmg;
  try {
    sgh = catmodel::modified_S(datum, g, h);
    shmg = catmodel::modified_S(datum, h, mg);
  } catch (const MissingBlock& e) {
    return absent(check, e.what());
  }
  if (dg.size() != dmg.size()) {
    Verdict v = make_verdict(check, Status::fails, "|I_g| != |I_-g|: P cannot be a multiple of the identity");
    v.witnesses.push_back({"shape", {static_cast<long>(dg.size()), static_cast<long>(dmg.size())}, CycScalar()});
    return v;
  }

  const ExactMatrix p = exactnum::multiply(sgh, shmg, exec);
  Verdict v = make_verdict(check, Status::holds, "");
  const std::size_t n = p.rows();
  const CycScalar zeta = p(0, dg.dual_of(0));
  v.derived.push_back({"zeta_Omega", zeta});
  if (zeta.is_zero()) {
    v.status = Status::fails;
    v.summary = "P[0][0*] = 0, so P is not a nonzero multiple of the identity";
    v.witnesses.push_back({"P", {0, static_cast<long>(dg.dual_of(0))}, zeta});
    return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool diag = j == dg.dual_of(i);
      const CycScalar& e = p(i, j);
      if (diag ? !(e == zeta) : !e.is_zero()) {
        v.status = Status::fails;
        v.summary = "P = S_{g,h} S_{h,-g} differs from zeta Id at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        v.witnesses.push_back({"P", {static_cast<long>(i), static_cast<long>(j)}, e});
        v.witnesses.push_back({"zeta_Omega", {0, static_cast<long>(dg.dual_of(0))}, zeta});
        return v;
      }
    }
  }
  v.summary = "S_{g,h} S_{h,-g} = zeta_Omega Id";
  v.witnesses.push_back({"zeta_Omega", {0, static_cast<long>(dg.dual_of(0))}, zeta});

  if (auto dl = deltas(datum, g)) {
    const auto& [dm, dp] = *dl;
    v.derived.push_back({"Delta_-", dm});
    v.derived.push_back({"Delta_+", dp});
    v.derived.push_back({"Delta_+ Delta_-", dp * dm});
    v.notes.push_back(kDeltaPlusConvention);
    if (!(dp * dm == zeta)) {
      v.status = Status::fails;
      v.summary = "Delta_+ convention mismatch: zeta_Omega != Delta_+ Delta_-";
      v.witnesses.push_back({"Delta_+ Delta_-", {}, dp * dm});
    }
  } else {
    v.notes.push_back("zeta_Omega = Delta_+ Delta_- not cross-checked: twists or dual block absent");
  }
  return v;
}

Verdict check_premodular_inputs(const ModularDatum& datum) {
  const auto issues = catmodel::validate(datum);
  // One sub-verdict per family of clauses, in a fixed order.
  const std::vector<std::pair<std::string, std::string>> families = {
      {"grading", "grading."},       {"quantum-dimension", "translation.quantum_dimension."},
      {"psi", "translation.psi."},   {"degrees", "degrees."},
      {"s-matrices", "sprime."},     {"fusion", "fusion."},
  };
  std::vector<Verdict> children;
  for (const auto& [name, prefix] : families) {
    Verdict c = make_verdict("premodular." + name, Status::holds, "");
    long idx = 0;
    for (const auto& is : issues) {
      if (is.clause.rfind(prefix, 0) != 0) continue;
      c.status = Status::fails;
      c.witnesses.push_back({is.clause, {idx++}, CycScalar()});
      c.notes.push_back(is.clause + ": " + is.detail);
    }
    if (c.status == Status::holds) {
      c.summary = "all clauses satisfied";
      c.witnesses.push_back({prefix + "*", {}, CycScalar(1L)});
    } else {
      c.summary = c.witnesses.front().name + " violated";
    }
    if (name == "psi") c.notes.push_back("provenance: input-dependent (psi values are supplied by the datum)");
    children.push_back(std::move(c));
  }
  Verdict v = aggregate("premodular-inputs", std::move(children));
  for (const auto& p : datum.placeholders) v.notes.push_back("placeholder field: " + p);
  return v;
}

Verdict check_all(const ModularDatum& datum, Exec exec) {
  std::vector<Verdict> children;
  children.push_back(check_premodular_inputs(datum));
  children.push_back(check_rank_constancy(datum, exec));
  for (const auto& d : datum.degrees) {
    children.push_back(check_nondegeneracy(datum, d.g, exec));
    children.push_back(check_dmug(datum, d.g, exec));
    children.push_back(check_relative_modularity(datum, d.g, d.g, exec));
  }
  for (std::size_t i = 2; i < children.size(); ++i) {
    children[i].check += " g=" + datum.grading.format(datum.degrees[(i - 2) / 3].g);
  }
  return aggregate("all", std::move(children), true);
}

}  // namespace relmod::checks
