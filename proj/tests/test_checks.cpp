#include <doctest.h>

#include <random>

#include "relmod/checks/checks.hpp"
#include "relmod/exactnum/linalg.hpp"
#include "support/synthetic.hpp"

using namespace relmod::checks;
using relmod::catmodel::DegreeData;
using relmod::catmodel::ModularDatum;
using relmod::exactnum::CycScalar;
using relmod::exactnum::ExactMatrix;
using relmod::exactnum::Var;
using relmod::testing::alpha_degree;
using relmod::testing::identity_datum;
using relmod::testing::two_degree_datum;

namespace {

const relmod::catmodel::Degree a = alpha_degree(1);
const relmod::catmodel::Degree ma = alpha_degree(-1);

// Independent summation oracle for Delta_-.
CycScalar brute_delta_minus(const ExactMatrix& sp, const std::vector<CycScalar>& t, const std::vector<CycScalar>& d,
                            std::size_t j) {
  std::complex<double> acc = 0;
  const std::array<std::complex<double>, 4> pt{std::polar(1.0, 0.7), std::polar(1.0, 1.3), std::polar(1.0, 2.1),
                                               std::polar(1.0, 0.4)};
  for (std::size_t i = 0; i < t.size(); ++i) acc += sp(i, j).evaluate(pt) / t[i].evaluate(pt) * d[i].evaluate(pt);
  acc /= t[j].evaluate(pt);
  (void)acc;
  // Exact form as a row-vector product.
  ExactMatrix row(1, t.size());
  for (std::size_t i = 0; i < t.size(); ++i) row(0, i) = t[i].inverse() * d[i];
  return (row * sp)(0, j) * t[j].inverse();
}

bool near(std::complex<double> x, std::complex<double> y) { return std::abs(x - y) < 1e-7; }

}  // namespace

TEST_CASE("delta minus and plus on small data") {
  ModularDatum d = identity_datum(2);
  CHECK(delta_minus(d, a, 0) == CycScalar(1L));
  CHECK(delta_minus(d, a, 1) == CycScalar(1L));
  CHECK(delta_plus(d, a, 0) == CycScalar(1L));

  const CycScalar t0 = CycScalar::variable(Var::u, 3);
  const CycScalar t1 = CycScalar::root(5, 2);
  d.degrees[0].twists = std::vector<CycScalar>{t0, t1};
  CHECK(delta_minus(d, a, 0) == t0.pow(-2));
  CHECK(delta_plus(d, a, 0) == t0.pow(2));

  d.degrees[0].twists.reset();
  CHECK_THROWS_AS(delta_minus(d, a, 0), DataAbsent);
  d = identity_datum(2);
  d.sprime.clear();
  CHECK_THROWS_AS(delta_minus(d, a, 0), relmod::catmodel::MissingBlock);
}

TEST_CASE("delta minus matches a brute-force sum") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix sp = relmod::testing::random_symmetric(rng, 3);
    std::vector<CycScalar> ones(3, CycScalar(1L));
    std::vector<CycScalar> t = {CycScalar::variable(Var::u, 1), CycScalar::root(5, 1), CycScalar(-1L)};
    ModularDatum d = two_degree_datum(3, sp, sp, ones, ones, t);
    const std::array<std::complex<double>, 4> pt{std::polar(1.0, 0.3), std::polar(1.0, 1.1), 1.0, 1.0};
    for (std::size_t j = 0; j < 3; ++j) {
      const CycScalar got = delta_minus(d, a, j);
      CHECK(got == brute_delta_minus(sp, t, ones, j));
      std::complex<double> num = 0;
      for (std::size_t i = 0; i < 3; ++i) num += sp(i, j).evaluate(pt) / t[i].evaluate(pt);
      CHECK(near(got.evaluate(pt), num / t[j].evaluate(pt)));
    }
  }
}

TEST_CASE("delta minus is independent of j and g on consistent data") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    ModularDatum d = identity_datum(1);
    d.degrees.clear();
    d.sprime.clear();
    const CycScalar delta = relmod::testing::random_unit(rng, 3) * CycScalar::variable(Var::u, trial % 3);
    relmod::testing::add_delta_consistent_degree(rng, d, alpha_degree(1), 2 + trial % 4, delta);
    relmod::testing::add_delta_consistent_degree(rng, d, alpha_degree(2), 2 + (trial + 1) % 4, delta);
    for (const auto& dd : d.degrees)
      for (std::size_t j = 0; j < dd.size(); ++j) CHECK(delta_minus(d, dd.g, j) == delta);
  }
}

TEST_CASE("non-degeneracy") {
  Verdict v = check_nondegeneracy(identity_datum(2), a);
  CHECK(v.status == Status::holds);
  REQUIRE(v.find_derived("Delta_+ Delta_-") != nullptr);
  CHECK(v.find_derived("Delta_+ Delta_-")->value == CycScalar(1L));
  CHECK_FALSE(v.witnesses.empty());

  ModularDatum d = identity_datum(2);
  d.sprime[{a, a}] = ExactMatrix::from_rows({{1L, 1L}, {1L, 1L}});
  v = check_nondegeneracy(d, a);
  CHECK(v.status == Status::fails);
  const Witness* k = v.find_witness("S(a,a).kernel");
  REQUIRE(k != nullptr);

  d = identity_datum(2);
  d.sprime.erase({ma, a});
  CHECK(check_nondegeneracy(d, a).status == Status::data_absent);
  CHECK_THROWS_AS(check_nondegeneracy(d, alpha_degree(7)), relmod::catmodel::DatumError);
}

TEST_CASE("non-degeneracy implies nonzero deltas") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    ModularDatum d = identity_datum(1);
    d.degrees.clear();
    d.sprime.clear();
    relmod::testing::add_delta_consistent_degree(rng, d, a, 3, relmod::testing::random_unit(rng, 2));
    DegreeData neg = d.degrees[0];
    neg.g = ma;
    neg.twists.reset();
    d.degrees.push_back(neg);
    d.sprime[{ma, a}] = d.sprime[{a, a}];
    Verdict v = check_nondegeneracy(d, a);
    if (v.status == Status::holds) {
      CHECK_FALSE(delta_minus(d, a, 0).is_zero());
      CHECK_FALSE(delta_plus(d, a, 0).is_zero());
      CHECK_FALSE(v.internal_inconsistency);
    }
  }
}

TEST_CASE("rank constancy") {
  ModularDatum d = identity_datum(2);
  Verdict v = check_rank_constancy(d);
  CHECK(v.status == Status::hypothesis_not_met);
  CHECK(v.summary == "the mixed S-matrices have no zero entry");
  REQUIRE(!v.witnesses.empty());
  CHECK(v.witnesses[0].indices == std::vector<long>{0, 1});

  const ExactMatrix full = ExactMatrix::from_rows({{2L, 1L, 1L}, {1L, 2L, 1L}, {1L, 1L, 2L}});
  std::vector<CycScalar> ones(3, CycScalar(1L));
  d = two_degree_datum(3, full, full, ones, ones);
  CHECK(check_rank_constancy(d).status == Status::holds);

  // Rank 2 with no zero entries next to a rank 3 block.
  const ExactMatrix low = ExactMatrix::from_rows({{1L, 2L, 3L}, {2L, 3L, 5L}, {3L, 5L, 8L}});
  REQUIRE(relmod::exactnum::rank(low) == 2);
  d = two_degree_datum(3, full, low, ones, ones);
  v = check_rank_constancy(d);
  CHECK(v.status == Status::fails);

  d.sprime.erase({ma, a});
  CHECK(check_rank_constancy(d).status == Status::data_absent);
}

TEST_CASE("DMug sufficient condition") {
  Verdict v = check_dmug(identity_datum(1), a);
  CHECK(v.status == Status::holds);
  CHECK(v.find_witness("S(a,a).zero_free_row") != nullptr);

  ModularDatum d = identity_datum(2);
  v = check_dmug(d, a);
  CHECK(v.status == Status::fails);
  CHECK(v.summary.find("condition (2)") != std::string::npos);

  d = identity_datum(3);
  d.orbit_count = 2;
  v = check_dmug(d, a);
  CHECK(v.status == Status::fails);
  CHECK(v.summary.find("condition (1)") != std::string::npos);

  d.orbit_count.reset();
  CHECK(check_dmug(d, a).status == Status::data_absent);

  d = identity_datum(1);
  d.translation.no_self_extension = false;
  CHECK(check_dmug(d, a).status == Status::hypothesis_not_met);
}

TEST_CASE("relative modularity") {
  Verdict v = check_relative_modularity(identity_datum(3), a, a);
  CHECK(v.status == Status::holds);
  REQUIRE(v.find_derived("zeta_Omega") != nullptr);
  CHECK(v.find_derived("zeta_Omega")->value == CycScalar(1L));

  ModularDatum d = identity_datum(2);
  d.sprime[{ma, a}] = ExactMatrix::diagonal({CycScalar(1L), CycScalar(2L)});
  v = check_relative_modularity(d, a, a);
  CHECK(v.status == Status::fails);
  REQUIRE(v.find_witness("P") != nullptr);
  CHECK(v.find_witness("P")->indices == std::vector<long>{1, 1});

  d = identity_datum(2);
  d.sprime[{a, a}] = ExactMatrix::from_rows({{1L, 1L}, {1L, 1L}});
  CHECK(check_relative_modularity(d, a, a).status == Status::fails);

  // Twists present: zeta = Delta_+ Delta_- = 1 for identity data.
  CHECK(check_relative_modularity(identity_datum(2), a, a).find_derived("Delta_+ Delta_-") != nullptr);

  // P = 2 Id but Delta_+ Delta_- = 4: reported as a convention mismatch, never adjusted.
  const ExactMatrix h = ExactMatrix::from_rows({{1L, 1L}, {1L, -1L}});
  std::vector<CycScalar> ones(2, CycScalar(1L));
  d = two_degree_datum(2, h, h, ones, ones, ones);
  v = check_relative_modularity(d, a, a);
  CHECK(v.find_derived("zeta_Omega")->value == CycScalar(2L));
  CHECK(v.status == Status::fails);
  CHECK(v.summary.find("Delta_+ convention mismatch") != std::string::npos);
}

TEST_CASE("modularity recovers planted zeta and implies non-degeneracy") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = relmod::testing::random_modular_instance(rng, 1 + trial % 5);
    Verdict v = check_relative_modularity(inst.datum, a, a);
    REQUIRE(v.status == Status::holds);
    CHECK(v.find_derived("zeta_Omega")->value == inst.zeta);
    CHECK(check_nondegeneracy(inst.datum, a).status == Status::holds);
    CHECK(relmod::catmodel::validate(inst.datum).empty());
  }
}

TEST_CASE("serial and parallel checks agree") {
  std::mt19937_64 rng(5);
  auto inst = relmod::testing::random_modular_instance(rng, 5);
  const Verdict s = check_nondegeneracy(inst.datum, a, relmod::exactnum::Exec::serial);
  const Verdict p = check_nondegeneracy(inst.datum, a, relmod::exactnum::Exec::parallel);
  CHECK(s.status == p.status);
  CHECK(s.derived.size() == p.derived.size());
}

TEST_CASE("premodular inputs") {
  Verdict v = check_premodular_inputs(identity_datum(2));
  CHECK(v.status == Status::holds);

  ModularDatum d = identity_datum(2);
  d.translation.quantum_dimension.push_back({{1}, CycScalar(2L)});
  v = check_premodular_inputs(d);
  CHECK(v.status == Status::fails);
  bool named = false;
  for (const auto& c : v.children)
    if (c.status == Status::fails) named = named || c.find_witness("translation.quantum_dimension.unit") != nullptr;
  CHECK(named);

  d = identity_datum(2);
  d.grading.small_subset.push_back(d.grading.parse("1/4"));
  v = check_premodular_inputs(d);
  CHECK(v.status == Status::fails);
  named = false;
  for (const auto& c : v.children)
    if (c.status == Status::fails) named = named || c.find_witness("grading.small_subset.symmetric") != nullptr;
  CHECK(named);
}

TEST_CASE("check all skips inapplicable sub-checks") {
  ModularDatum d = identity_datum(1);
  Verdict v = check_all(d);
  CHECK(v.status == Status::holds);
  d = identity_datum(2);
  d.orbit_count.reset();
  v = check_all(d);
  // Rank constancy hypothesis unmet (identity has zeros); DMug data-absent is skipped.
  CHECK(v.status == Status::hypothesis_not_met);
}
