#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "relmod/exactnum/linalg.hpp"
#include "support/random.hpp"

using namespace relmod::exactnum;
using relmod::testing::naive_field_rank;
using relmod::testing::random_cyclotomic;
using relmod::testing::random_laurent;
using relmod::testing::random_matrix;
using relmod::testing::random_matrix_of_rank;

namespace {

std::complex<double> numeric_qint(long n, int ell) {
  const double t = 2.0 * std::numbers::pi / ell;
  if (n == 0) return 0.0;
  return std::sin(n * t) / std::sin(t);
}

std::array<std::complex<double>, kVarCount> sample_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::array<std::complex<double>, kVarCount> p{};
  for (auto& v : p) v = std::polar(1.0, ang(rng));
  return p;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

}  // namespace

TEST_CASE("cyclotomic fields") {
  CHECK(CyclotomicField::get(5).degree() == 4);
  CHECK(CyclotomicField::get(12).degree() == 4);
  CHECK(CyclotomicField::get(7).degree() == 6);
  CHECK(&CyclotomicField::get(5) == &CyclotomicField::get(5));
  // Phi_6 = x^2 - x + 1
  CHECK(CyclotomicField::get(6).minimal_polynomial() == std::vector<long>{1, -1, 1});

  const Cyclotomic z = Cyclotomic::root_power(5, 1);
  Cyclotomic sum;
  for (int e = 0; e < 5; ++e) sum += Cyclotomic::root_power(5, e);
  CHECK(sum.is_zero());
  CHECK(Cyclotomic::root_power(5, 5) == Cyclotomic(1L));
  CHECK(Cyclotomic::root_power(10, 2) == z);
  CHECK(Cyclotomic::root_power(4, 2) == Cyclotomic(-1L));
  CHECK(Cyclotomic::root_power(4, 2).conductor() == 1);
}

TEST_CASE("cyclotomic inverse and lifting") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = std::array{3, 5, 7, 12, 15}[trial % 5];
    Cyclotomic a = random_cyclotomic(rng, m, 5);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == Cyclotomic(1L));
    CHECK(near(a.lifted(m * 4).evaluate(), a.evaluate()));
    CHECK(a.lifted(m * 4) == a);
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), ArithmeticError);
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1, 5) == CycScalar(1L));
  CHECK(quantum_integer(5, 5).is_zero());
  CHECK(quantum_integer(0, 7).is_zero());
  // q = zeta_3: [2] = q + q^-1 = 2 cos(2 pi / 3) = -1
  CHECK(quantum_integer(2, 3) == CycScalar(-1L));
  CHECK(near(quantum_integer(2, 3).evaluate({}), 2.0 * std::cos(2.0 * std::numbers::pi / 3.0)));
  CHECK(quantum_integer(-3, 7) == -quantum_integer(3, 7));
  CHECK_THROWS_AS(quantum_integer(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(quantum_integer(2, 1), std::invalid_argument);

  for (int ell : {3, 5, 7, 9}) {
    for (long n = -12; n <= 12; ++n) {
      CHECK(near(quantum_integer(n, ell).evaluate({}), numeric_qint(n, ell)));
    }
  }
}

TEST_CASE("quantum integer identity [n][m+1] - [n+1][m] = [n-m]") {
  for (int ell : {3, 5, 7}) {
    for (long n = -8; n <= 8; ++n) {
      for (long m = -8; m <= 8; ++m) {
        const CycScalar lhs = quantum_integer(n, ell) * quantum_integer(m + 1, ell) -
                              quantum_integer(n + 1, ell) * quantum_integer(m, ell);
        CHECK(lhs == quantum_integer(n - m, ell));
      }
    }
  }
}

TEST_CASE("laurent scalars behave like a commutative ring") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const CycScalar a = random_laurent(rng, 5);
    const CycScalar b = random_laurent(rng, 3);
    const CycScalar c = random_laurent(rng, 5);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    const auto p = sample_point(rng);
    CHECK(near((a * b).evaluate(p), a.evaluate(p) * b.evaluate(p)));
    CHECK(near((a + c).evaluate(p), a.evaluate(p) + c.evaluate(p)));
  }
}

TEST_CASE("units and exact division") {
  const CycScalar u = CycScalar::variable(Var::u);
  CHECK(u.is_unit());
  CHECK(u * u.inverse() == CycScalar(1L));
  CHECK(u.pow(-4) == u.inverse().pow(4));
  CHECK_THROWS_AS((u + CycScalar(1L)).inverse(), ArithmeticError);
  CHECK_THROWS_AS(CycScalar().inverse(), ArithmeticError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const CycScalar a = random_laurent(rng, 5);
    const CycScalar b = random_laurent(rng, 5);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // 1 / (1 + x) is not a Laurent polynomial.
  const CycScalar one_plus_x = CycScalar(1L) + CycScalar::variable(Var::x);
  CHECK_FALSE(divide_exact(CycScalar(1L), one_plus_x).has_value());
  CHECK_FALSE(divide_exact(CycScalar::variable(Var::x, 2) + CycScalar(1L), one_plus_x).has_value());
  CHECK_THROWS_AS(divide_exact(CycScalar(1L), CycScalar()), ArithmeticError);
}

TEST_CASE("substitution") {
  const CycScalar w = CycScalar::variable(Var::w);
  const CycScalar y = CycScalar::variable(Var::y);
  CHECK((w.pow(-2) + w).substitute(Var::w, y.pow(2)) == y.pow(-4) + y.pow(2));
}

TEST_CASE("scalar text form round trips") {
  CHECK(parse_scalar("-u^(-4)") == -CycScalar::variable(Var::u, -4));
  CHECK(parse_scalar("z5^5") == CycScalar(1L));
  CHECK(parse_scalar("3/4") == CycScalar(Rational(3, 4)));
  CHECK(parse_scalar("(x^2 - 1)/(x - 1)") == CycScalar::variable(Var::x) + CycScalar(1L));
  CHECK(to_string(CycScalar()) == "0");
  CHECK(to_string(-CycScalar::variable(Var::u, 2)) == "-u^2");
  CHECK_THROWS_AS(parse_scalar("1/(1+x)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2 +"), ParseError);
  CHECK_THROWS_AS(parse_scalar("q"), ParseError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const CycScalar a = random_laurent(rng, trial % 2 == 0 ? 5 : 12, 4);
    CHECK(parse_scalar(to_string(a)) == a);
  }
}

TEST_CASE("matrix products") {
  std::mt19937_64 rng(13);
  const ExactMatrix a = random_matrix(rng, 3, 4, 5, 3);
  const ExactMatrix b = random_matrix(rng, 4, 2, 5, 3);
  const ExactMatrix c = random_matrix(rng, 2, 3, 5, 3);
  CHECK(multiply(a, b, Exec::serial) == multiply(a, b, Exec::parallel));
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(ExactMatrix::identity(3) * a == a);
  CHECK_THROWS_AS(a * a, std::invalid_argument);

  // (A (x) B)(C (x) D) = AC (x) BD
  const ExactMatrix d = random_matrix(rng, 2, 2, 3, 2);
  const ExactMatrix e = random_matrix(rng, 2, 2, 3, 2);
  CHECK(kronecker(a, d, Exec::serial) == kronecker(a, d, Exec::parallel));
  CHECK(kronecker(a, d) * kronecker(b, e) == kronecker(a * b, d * e));
}

TEST_CASE("rank, determinant and inverse on small examples") {
  const ExactMatrix ones = ExactMatrix::from_rows({{1L, 1L}, {1L, 1L}});
  CHECK(rank(ones) == 1);
  CHECK(determinant(ones).is_zero());
  auto inv = invert(ones);
  REQUIRE(inv.status == InverseResult::Status::singular);
  REQUIRE(inv.kernel.size() == 2);
  CHECK(inv.kernel[0] == -inv.kernel[1]);
  CHECK_FALSE(inv.kernel[0].is_zero());

  CHECK(rank(ExactMatrix::identity(4)) == 4);
  CHECK(rank(ExactMatrix(3, 5)) == 0);
  CHECK(determinant(ExactMatrix::from_rows({{0L, 1L}, {1L, 0L}})) == CycScalar(-1L));
  CHECK(determinant(ExactMatrix::from_rows({{2L, 1L}, {7L, 4L}})) == CycScalar(1L));
  CHECK_THROWS_AS(invert(ExactMatrix(2, 3)), std::invalid_argument);

  const CycScalar u = CycScalar::variable(Var::u);
  const ExactMatrix lm = ExactMatrix::from_rows({{u, CycScalar(1L)}, {CycScalar(0L), u.pow(-2)}});
  auto li = invert(lm);
  REQUIRE(li.status == InverseResult::Status::inverted);
  CHECK(lm * li.inverse == ExactMatrix::identity(2));

  // det = x^2 - 1 is not a Laurent unit.
  const CycScalar x = CycScalar::variable(Var::x);
  const ExactMatrix nm = ExactMatrix::from_rows({{x, CycScalar(1L)}, {CycScalar(1L), x}});
  CHECK(invert(nm).status == InverseResult::Status::not_ring_invertible);
  CHECK(rank(nm) == 2);
}

TEST_CASE("rank agrees with naive field elimination") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t r = static_cast<std::size_t>(trial) % (n + 1);
    const ExactMatrix m = r == n ? random_matrix(rng, n, n, 5, 10) : random_matrix_of_rank(rng, n, n, r, 5, 3);
    const std::size_t expected = naive_field_rank(m);
    CHECK(rank(m, Exec::serial) == expected);
    CHECK(rank(m, Exec::parallel) == expected);
    CHECK(rank(m.transpose()) == expected);
  }
}

TEST_CASE("invert or produce a kernel vector") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const bool singular = trial % 3 == 0;
    const ExactMatrix m = singular ? random_matrix_of_rank(rng, n, n, n - 1, 5, 3) : random_matrix(rng, n, n, 5, 6);
    auto res = invert(m, trial % 2 == 0 ? Exec::serial : Exec::parallel);
    if (res.status == InverseResult::Status::inverted) {
      CHECK(m * res.inverse == ExactMatrix::identity(n));
      CHECK(res.inverse * m == ExactMatrix::identity(n));
    } else {
      REQUIRE(res.status == InverseResult::Status::singular);
      bool nonzero = false;
      for (const auto& e : res.kernel) nonzero = nonzero || !e.is_zero();
      CHECK(nonzero);
      for (const auto& e : m.apply(res.kernel)) CHECK(e.is_zero());
    }
    CHECK((res.status == InverseResult::Status::singular) == singular);
  }
}

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const ExactMatrix m = random_matrix(rng, 6, 6, 7, 4);
    const Reduction s = fraction_free_reduce(m, true, Exec::serial);
    const Reduction p = fraction_free_reduce(m, true, Exec::parallel);
    CHECK(s.reduced == p.reduced);
    CHECK(s.pivot == p.pivot);
    CHECK(determinant(m, Exec::serial) == determinant(m, Exec::parallel));
  }
}
