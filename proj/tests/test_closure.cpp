#include <doctest.h>

#include <random>

#include "relmod/closure/engine.hpp"
#include "support/closure_words.hpp"

using namespace relmod::closure;
using relmod::checks::Status;

namespace {

ClosureDatum toy() { return load_closure(RELMOD_DATA_DIR "/closure_toy.json"); }
ClosureDatum graded() { return load_closure(RELMOD_DATA_DIR "/closure_graded.json"); }

ClosureDatum single_atom() {
  ClosureDatum d;
  d.atoms = {{"a", std::nullopt, "a", true, std::nullopt}, {"v", std::nullopt, "v", true, std::nullopt}};
  d.v = "v";
  d.bound = 2;
  d.products = {{"a", "a", {{"a", 0}}}};
  d.powers = {{"a", std::nullopt}};
  return d;
}

int count_kind(const CertNode& n, NodeKind k) {
  int c = n.kind == k;
  for (const auto& ch : n.children) c += count_kind(ch, k);
  return c;
}

Expr random_expr(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
  switch (pick(rng)) {
    case 1:
      return Expr::tensor({random_expr(rng, atoms, depth - 1), random_expr(rng, atoms, depth - 1)});
    case 2:
      return Expr::sum({random_expr(rng, atoms, depth - 1), random_expr(rng, atoms, depth - 1)});
    case 3:
      return Expr::retract(random_expr(rng, atoms, depth - 1));
    default:
      return Expr::make_atom(atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)]);
  }
}

}  // namespace

TEST_CASE("expression grammar") {
  const Expr e = parse_expr("a*(b + retract(a*v^2))");
  CHECK(to_string(e) == "a*(b + retract(a*v^2))");
  CHECK(parse_expr(to_string(e)) == e);
  CHECK(parse_expr("a^3") == parse_expr("a*a*a"));
  const auto t = expand(parse_expr("(a + b)*retract(a)"));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == Term{true, {"a", "a"}});
  CHECK(t[1] == Term{true, {"a", "b"}});
  CHECK(expand(parse_expr("b*a")) == expand(parse_expr("a*b")));
  CHECK_THROWS_AS(parse_expr("a*"), ExprError);
  CHECK_THROWS_AS(parse_expr("retract a"), ExprError);
  CHECK_THROWS_AS(parse_expr("a^0"), ExprError);
  CHECK_THROWS_AS(parse_expr("(a"), ExprError);
}

TEST_CASE("loading and validation") {
  const ClosureDatum d = toy();
  CHECK(d.atoms.size() == 3);
  CHECK(d.base_atoms() == std::vector<std::string>{"a", "b"});
  CHECK(parse_closure_datum(closure_to_json(d)) == d);

  auto doc = closure_to_json(d);
  doc["rules"]["products"][0]["rhs"][0]["atom"] = "c";
  try {
    parse_closure_datum(doc);
    FAIL("expected an error");
  } catch (const ClosureError& e) {
    CHECK(e.path() == "/rules/products/0/rhs/0/atom");
  }

  doc = closure_to_json(d);
  doc["rules"]["products"][0]["rhs"][0]["atom"] = "a";
  try {
    parse_closure_datum(doc);
    FAIL("expected an error");
  } catch (const ClosureError& e) {
    CHECK(e.path() == "/rules/products/0/rhs/0");
  }

  doc = closure_to_json(graded());
  doc["atoms"][0]["dual"] = "v";
  CHECK_THROWS_AS(parse_closure_datum(doc), ClosureError);
}

TEST_CASE("cor1") {
  CHECK(check_cor1(single_atom()).ok());
  CHECK(check_cor1(toy()).ok());

  ClosureDatum d = toy();
  d.products.erase(d.products.begin() + 1);
  const auto v = check_cor1(d);
  CHECK(v.status == Status::fails);
  CHECK(v.summary == "no rule for (a,b)");

  ClosureDatum p = toy();
  p.powers.erase(p.powers.begin());
  CHECK(check_cor1(p).summary == "no rule for a*v^1");

  ClosureDatum f = toy();
  f.atoms[1].strong = false;
  CHECK(check_cor1(f).summary == "atom b lacks the strong decomposition flag");

  ClosureDatum nov = toy();
  nov.v.reset();
  CHECK_THROWS_AS(check_cor1(nov), ClosureError);
}

TEST_CASE("cor2 gates on genericity") {
  const ClosureDatum g = graded();
  CHECK(check_cor1(g).status == Status::fails);
  CHECK(check_cor2(g).ok());

  ClosureDatum generic = g;
  generic.atoms[1].degree = generic.grading->parse("1/3");
  generic.atoms[1].dual = "q";
  // q is no longer self dual in degree; only the verdict matters here.
  CHECK(check_cor2(generic).status == Status::fails);
  CHECK(check_cor2(generic).summary == "no rule for (p,q)");

  // Enlarging X never breaks a holding verdict.
  ClosureDatum bigger = generic;
  bigger.grading->small_subset.push_back(bigger.grading->parse("5/6"));
  bigger.grading->small_subset.push_back(bigger.grading->parse("1/6"));
  bigger.grading->small_subset.push_back(bigger.grading->parse("2/3"));
  bigger.grading->small_subset.push_back(bigger.grading->parse("1/3"));
  CHECK(check_cor2(bigger).ok());

  ClosureDatum none = toy();
  none.grading.reset();
  for (auto& a : none.atoms) a.degree.reset();
  CHECK_THROWS_AS(check_cor2(none), ClosureError);
}

TEST_CASE("certify small targets") {
  const ClosureDatum one = single_atom();
  auto r = certify(one, parse_expr("a"), 1);
  REQUIRE(r.status == CertifyResult::Status::certified);
  CHECK(r.certificate->root.kind == NodeKind::atom);
  CHECK(r.certificate->root.children.empty());

  const ClosureDatum d = toy();
  r = certify(d, parse_expr("a*b + a"), 2);
  REQUIRE(r.status == CertifyResult::Status::certified);
  const auto& c = *r.certificate;
  CHECK(c.root.kind == NodeKind::direct_sum);
  CHECK(count_kind(c.root, NodeKind::direct_sum) == 1);
  CHECK(count_kind(c.root, NodeKind::rewrite) == 1);
  CHECK(replay(d, c).ok);

  r = certify(d, parse_expr("a*a*a"), 3);
  REQUIRE(r.status == CertifyResult::Status::certified);
  CHECK(r.certificate->rewrites == 2);
  CHECK(replay(d, *r.certificate).ok);

  CHECK(certify(d, parse_expr("a*a*a"), 1).status == CertifyResult::Status::depth_exhausted);
  CHECK_THROWS_AS(certify(d, parse_expr("c"), 1), ClosureError);
}

TEST_CASE("certify under cor2 only covers generic targets") {
  const ClosureDatum g = graded();
  auto r = certify(g, parse_expr("p*v^2"), 2);
  REQUIRE(r.status == CertifyResult::Status::certified);
  CHECK(r.certificate->hypothesis == "cor2");
  CHECK(replay(g, *r.certificate).ok);
  r = certify(g, parse_expr("p*q"), 2);
  CHECK(r.status == CertifyResult::Status::hypothesis_not_met);
  CHECK(certify(g, parse_expr("q*v^4"), 2).status == CertifyResult::Status::stuck);
}

TEST_CASE("every bounded word certifies and replays") {
  const ClosureDatum d = toy();
  const auto exprs = relmod::testing::tensor_expressions({"a", "b"}, 3, 3);
  CHECK(exprs.size() == 56);
  for (const auto& s : exprs) {
    const auto r = certify(d, parse_expr(s), 3);
    REQUIRE_MESSAGE(r.status == CertifyResult::Status::certified, s);
    CHECK_MESSAGE(replay(d, *r.certificate).ok, s);
  }
}

TEST_CASE("replay rejects tampered certificates") {
  const ClosureDatum d = toy();
  const auto r = certify(d, parse_expr("a*a*b"), 3);
  REQUIRE(r.certificate);

  Certificate wrong_target = *r.certificate;
  wrong_target.target = parse_expr("a*b*b");
  CHECK_FALSE(replay(d, wrong_target).ok);

  Certificate wrong_rule = *r.certificate;
  wrong_rule.root.rule = 2;
  CHECK_FALSE(replay(d, wrong_rule).ok);

  Certificate wrong_child = *r.certificate;
  wrong_child.root.children.front().object = Expr::retract(parse_expr("b*v"));
  CHECK_FALSE(replay(d, wrong_child).ok);

  ClosureDatum unflagged = d;
  unflagged.atoms[0].strong = false;
  const auto leaf = certify(d, parse_expr("a"), 1);
  CHECK_FALSE(replay(unflagged, *leaf.certificate).ok);
}

TEST_CASE("negligibility propagation") {
  ClosureDatum d = toy();
  d.atoms[0].negligible = true;
  CHECK(negligible_closure(d, parse_expr("a*b")) == Negligibility::negligible);
  CHECK(negligible_closure(d, parse_expr("v*retract(a)")) == Negligibility::negligible);
  CHECK(negligible_closure(toy(), parse_expr("a + b")) == Negligibility::non_negligible);
  CHECK(negligible_closure(toy(), parse_expr("retract(v)")) == Negligibility::unknown);
  CHECK(negligible_closure(toy(), parse_expr("a*b")) == Negligibility::unknown);
}

TEST_CASE("negligibility is monotone in the flags") {
  std::mt19937 rng(7);
  const std::vector<std::string> atoms{"a", "b", "v"};
  for (int trial = 0; trial < 200; ++trial) {
    ClosureDatum d = toy();
    for (auto& a : d.atoms) {
      const int r = std::uniform_int_distribution<int>(0, 2)(rng);
      a.negligible = r == 0 ? std::nullopt : std::optional<bool>(r == 1);
    }
    ClosureDatum more = d;
    for (auto& a : more.atoms)
      if (!a.negligible && std::uniform_int_distribution<int>(0, 1)(rng) == 1) a.negligible = true;
    const Expr e = random_expr(rng, atoms, 3);
    if (negligible_closure(d, e) == Negligibility::negligible)
      CHECK(negligible_closure(more, e) == Negligibility::negligible);
  }
}
