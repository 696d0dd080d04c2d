#include "relmod/closure/engine.hpp"

#include <algorithm>
#include <functional>

namespace relmod::closure {

using checks::Status;
using checks::Verdict;
using checks::Witness;

namespace {

Verdict condition(std::string name, const std::string& failure, std::vector<long> indices, long checked) {
  Verdict v = checks::make_verdict(std::move(name), failure.empty() ? Status::holds : Status::fails,
                                   failure.empty() ? std::to_string(checked) + " requirement(s) met" : failure);
  if (failure.empty()) {
    v.witnesses.push_back({"requirements_checked", {}, exactnum::CycScalar(checked)});
  } else {
    v.witnesses.push_back({"violation", std::move(indices), exactnum::CycScalar(checked)});
  }
  return v;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

/// gate(word) says whether the requirement about `word` applies.
Verdict run_conditions(const ClosureDatum& d, const std::string& name,
                       const std::function<bool(const std::vector<std::string>&)>& gate) {
  const auto base = d.base_atoms();
  const std::string& v = *d.v;
  std::vector<Verdict> parts;

  {
    std::string failure;
    std::vector<long> idx;
    long checked = 0;
    std::vector<std::string> all = base;
    if (name == "cor2") all.push_back(v);
    for (std::size_t i = 0; i < all.size() && failure.empty(); ++i) {
      if (!gate({all[i]})) continue;
      ++checked;
      if (!d.find(all[i])->strong) {
        failure = "atom " + all[i] + " lacks the strong decomposition flag";
        idx = {static_cast<long>(i)};
      }
    }
    parts.push_back(condition("flags", failure, idx, checked));
  }
  {
    std::string failure;
    std::vector<long> idx;
    long checked = 0;
    for (std::size_t i = 0; i < base.size() && failure.empty(); ++i)
      for (long n = 1; n <= d.bound && failure.empty(); ++n) {
        std::vector<std::string> word(static_cast<std::size_t>(n), v);
        word.push_back(base[i]);
        if (!gate(word)) continue;
        ++checked;
        if (d.find_power(base[i], n) < 0) {
          failure = "no rule for " + base[i] + "*" + v + "^" + std::to_string(n);
          idx = {static_cast<long>(i), n};
        }
      }
    parts.push_back(condition("powers", failure, idx, checked));
  }
  {
    std::string failure;
    std::vector<long> idx;
    long checked = 0;
    for (std::size_t i = 0; i < base.size() && failure.empty(); ++i)
      for (std::size_t j = i; j < base.size() && failure.empty(); ++j) {
        if (!gate({base[i], base[j]})) continue;
        ++checked;
        if (d.find_product(base[i], base[j]) < 0) {
          failure = "no rule for " + pair_name(base[i], base[j]);
          idx = {static_cast<long>(i), static_cast<long>(j)};
        }
      }
    parts.push_back(condition("products", failure, idx, checked));
  }

  Verdict out = checks::aggregate(name, std::move(parts));
  for (const auto& c : out.children)
    if (c.status == Status::fails) {
      out.summary = c.summary;
      out.witnesses.push_back({c.check, c.witnesses.front().indices, c.witnesses.front().value});
      break;
    }
  return out;
}

}  // namespace

Verdict check_cor1(const ClosureDatum& d) {
  if (!d.v) throw ClosureError("/v", "no distinguished atom");
  return run_conditions(d, "cor1", [](const std::vector<std::string>&) { return true; });
}

Verdict check_cor2(const ClosureDatum& d) {
  if (!d.grading) throw ClosureError("/grading", "grading absent");
  if (!d.v) throw ClosureError("/v", "no distinguished atom");
  Verdict v = run_conditions(d, "cor2", [&](const std::vector<std::string>& word) {
    const auto g = d.degree_of(word);
    return g && d.grading->is_generic(*g);
  });
  v.notes.push_back("requirements on non-generic objects are vacuous");
  return v;
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::atom:
      return "atom";
    case NodeKind::power_rule:
      return "power-rule";
    case NodeKind::rewrite:
      return "rewrite";
    case NodeKind::direct_sum:
      return "direct-sum";
    case NodeKind::retract:
      return "retract";
  }
  return "unknown";
}

const char* to_string(CertifyResult::Status s) {
  switch (s) {
    case CertifyResult::Status::certified:
      return "certified";
    case CertifyResult::Status::stuck:
      return "stuck";
    case CertifyResult::Status::depth_exhausted:
      return "depth-exhausted";
    case CertifyResult::Status::hypothesis_not_met:
      return "hypothesis-not-met";
  }
  return "unknown";
}

const char* to_string(Negligibility n) {
  switch (n) {
    case Negligibility::negligible:
      return "negligible";
    case Negligibility::non_negligible:
      return "non-negligible";
    case Negligibility::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

constexpr const char* kLemmaRet = "direct sums and retracts of strongly decomposable objects are strongly decomposable";

using Word = std::vector<std::string>;

std::string rule_text(const ClosureDatum& d, long r) {
  const auto& p = d.products[static_cast<std::size_t>(r)];
  return "rule products/" + std::to_string(r) + ": " + p.left + "*" + p.right;
}

/// Splits a sorted word into base atoms and the v count.
std::pair<Word, long> split(const ClosureDatum& d, const Word& w) {
  Word base;
  long n = 0;
  for (const auto& a : w) {
    if (d.v && a == *d.v) {
      ++n;
    } else {
      base.push_back(a);
    }
  }
  return {base, n};
}

/// rest (x) atom (x) v^(n + power), sorted.
Word rewritten(const ClosureDatum& d, const Word& rest, long n, const RetractTerm& t) {
  Word w = rest;
  w.push_back(t.atom);
  for (long k = 0; k < n + t.power; ++k) w.push_back(*d.v);
  std::sort(w.begin(), w.end());
  return w;
}

/// Removes one occurrence each of a and b; false when absent.
bool remove_pair(Word& w, const std::string& a, const std::string& b) {
  auto ia = std::find(w.begin(), w.end(), a);
  if (ia == w.end()) return false;
  w.erase(ia);
  auto ib = std::find(w.begin(), w.end(), b);
  if (ib == w.end()) return false;
  w.erase(ib);
  return true;
}

struct Search {
  const ClosureDatum& d;
  bool depth_hit = false;
  std::string stuck_at;
  long rewrites = 0;

  std::optional<CertNode> word(const Word& w, int depth) {
    const auto [base, n] = split(d, w);
    const Expr obj = word_expr(w);
    if (w.size() == 1) {
      const Atom* a = d.find(w.front());
      if (a != nullptr && a->strong) return CertNode{NodeKind::atom, obj, "asserted strong decomposition", -1, {}};
      note_stuck(obj);
      return std::nullopt;
    }
    if (base.size() == 1 && n >= 1) {
      const long r = d.find_power(base.front(), n);
      if (r >= 0)
        return CertNode{NodeKind::power_rule, obj, "rule powers/" + std::to_string(r) + ": " + base.front() + "*v^n", r, {}};
      note_stuck(obj);
      return std::nullopt;
    }
    if (base.size() < 2) {
      note_stuck(obj);
      return std::nullopt;
    }
    if (depth <= 0) {
      depth_hit = true;
      note_stuck(obj);
      return std::nullopt;
    }
    for (std::size_t r = 0; r < d.products.size(); ++r) {
      const ProductRule& rule = d.products[r];
      Word rest = base;
      if (!remove_pair(rest, rule.left, rule.right)) continue;
      CertNode node{NodeKind::rewrite, obj, rule_text(d, static_cast<long>(r)), static_cast<long>(r), {}};
      bool ok = true;
      for (const auto& t : rule.rhs) {
        const Word next = rewritten(d, rest, n, t);
        auto child = word(next, depth - 1);
        if (!child) {
          ok = false;
          break;
        }
        node.children.push_back(CertNode{NodeKind::retract, Expr::retract(word_expr(next)), kLemmaRet, -1, {*child}});
      }
      if (ok) {
        ++rewrites;
        return node;
      }
    }
    note_stuck(obj);
    return std::nullopt;
  }

  void note_stuck(const Expr& e) {
    if (stuck_at.empty()) stuck_at = to_string(e);
  }
};

long count_rewrites(const CertNode& n) {
  long c = n.kind == NodeKind::rewrite ? 1 : 0;
  for (const auto& k : n.children) c += count_rewrites(k);
  return c;
}

}  // namespace

CertifyResult certify(const ClosureDatum& d, const Expr& target, int depth) {
  CertifyResult res;
  for (const auto& t : expand(target))
    for (const auto& a : t.word)
      if (d.find(a) == nullptr) throw ClosureError("", "undeclared atom '" + a + "' in expression");

  std::string hypothesis;
  if (d.v && check_cor1(d).ok()) {
    hypothesis = "cor1";
  } else if (d.v && d.grading && check_cor2(d).ok()) {
    hypothesis = "cor2";
    for (const auto& t : expand(target)) {
      const auto g = d.degree_of(t.word);
      if (!g || !d.grading->is_generic(*g)) {
        res.status = CertifyResult::Status::hypothesis_not_met;
        res.stuck_at = to_string(word_expr(t.word));
        res.message = "only generic objects are covered and " + res.stuck_at + " is not generic";
        return res;
      }
    }
  } else {
    res.status = CertifyResult::Status::hypothesis_not_met;
    res.message = "neither set of closure conditions holds";
    return res;
  }

  Search s{d, false, {}, 0};
  const auto terms = expand(target);
  std::vector<CertNode> parts;
  for (const auto& t : terms) {
    auto node = s.word(t.word, depth);
    if (!node) {
      res.status = s.depth_hit ? CertifyResult::Status::depth_exhausted : CertifyResult::Status::stuck;
      res.stuck_at = s.stuck_at;
      res.message = s.depth_hit ? "rewrite depth exhausted at " + s.stuck_at : "no derivation for " + s.stuck_at;
      return res;
    }
    if (t.retract) {
      node = CertNode{NodeKind::retract, Expr::retract(word_expr(t.word)), kLemmaRet, -1, {*node}};
    }
    parts.push_back(std::move(*node));
  }

  Certificate c;
  c.target = target;
  c.hypothesis = hypothesis;
  if (parts.size() == 1 && target.kind != Expr::Kind::sum) {
    c.root = std::move(parts.front());
  } else {
    c.root = CertNode{NodeKind::direct_sum, target, kLemmaRet, -1, std::move(parts)};
  }
  c.rewrites = count_rewrites(c.root);
  res.status = CertifyResult::Status::certified;
  res.certificate = std::move(c);
  return res;
}

namespace {

struct Replayer {
  const ClosureDatum& d;
  std::string error;

  bool fail(const CertNode& n, const std::string& what) {
    if (error.empty()) error = std::string(to_string(n.kind)) + " node for " + to_string(n.object) + ": " + what;
    return false;
  }

  /// The node's object as a single plain word, if it is one.
  static std::optional<Word> plain_word(const Expr& e) {
    const auto t = expand(e);
    if (t.size() != 1 || t.front().retract) return std::nullopt;
    return t.front().word;
  }

  bool check(const CertNode& n) {
    switch (n.kind) {
      case NodeKind::atom: {
        const auto w = plain_word(n.object);
        if (!w || w->size() != 1) return fail(n, "not a single atom");
        const Atom* a = d.find(w->front());
        if (a == nullptr || !a->strong) return fail(n, "atom is not flagged");
        return n.children.empty() || fail(n, "leaf has children");
      }
      case NodeKind::power_rule: {
        const auto w = plain_word(n.object);
        if (!w) return fail(n, "not a tensor word");
        const auto [base, k] = split(d, *w);
        if (base.size() != 1 || k < 1) return fail(n, "not of the form atom*v^n");
        if (n.rule < 0 || n.rule >= static_cast<long>(d.powers.size())) return fail(n, "rule index out of range");
        const PowerRule& r = d.powers[static_cast<std::size_t>(n.rule)];
        if (r.atom != base.front() || !r.covers(k)) return fail(n, "rule does not cover this power");
        return n.children.empty() || fail(n, "leaf has children");
      }
      case NodeKind::rewrite: {
        const auto w = plain_word(n.object);
        if (!w) return fail(n, "not a tensor word");
        if (n.rule < 0 || n.rule >= static_cast<long>(d.products.size())) return fail(n, "rule index out of range");
        const ProductRule& r = d.products[static_cast<std::size_t>(n.rule)];
        auto [rest, k] = split(d, *w);
        if (!remove_pair(rest, r.left, r.right)) return fail(n, "rule inputs not present");
        if (n.children.size() != r.rhs.size()) return fail(n, "wrong number of summands");
        for (std::size_t i = 0; i < r.rhs.size(); ++i) {
          const CertNode& c = n.children[i];
          if (c.kind != NodeKind::retract) return fail(n, "summand is not a retract");
          const std::vector<Term> want{{true, rewritten(d, rest, k, r.rhs[i])}};
          if (expand(c.object) != want) return fail(n, "summand differs from the rule");
          if (!check(c)) return false;
        }
        return true;
      }
      case NodeKind::direct_sum: {
        std::vector<Term> joined;
        for (const auto& c : n.children) {
          const auto t = expand(c.object);
          joined.insert(joined.end(), t.begin(), t.end());
        }
        std::sort(joined.begin(), joined.end());
        if (joined != expand(n.object)) return fail(n, "summands do not add up to the object");
        for (const auto& c : n.children)
          if (!check(c)) return false;
        return true;
      }
      case NodeKind::retract: {
        if (n.children.size() != 1) return fail(n, "retract needs one child");
        auto inner = expand(n.children.front().object);
        for (auto& t : inner) t.retract = true;
        if (inner != expand(n.object)) return fail(n, "not a retract of the child");
        return check(n.children.front());
      }
    }
    return fail(n, "unknown node kind");
  }
};

}  // namespace

ReplayResult replay(const ClosureDatum& d, const Certificate& c) {
  ReplayResult r;
  if (expand(c.root.object) != expand(c.target)) {
    r.error = "root object " + to_string(c.root.object) + " is not the target " + to_string(c.target);
    return r;
  }
  bool hyp = false;
  if (c.hypothesis == "cor1") {
    hyp = d.v && check_cor1(d).ok();
  } else if (c.hypothesis == "cor2") {
    hyp = d.v && d.grading && check_cor2(d).ok();
  }
  if (!hyp) {
    r.error = "hypothesis '" + c.hypothesis + "' does not hold for this datum";
    return r;
  }
  Replayer rp{d, {}};
  r.ok = rp.check(c.root);
  r.error = rp.error;
  return r;
}

Negligibility negligible_closure(const ClosureDatum& d, const Expr& e) {
  using N = Negligibility;
  switch (e.kind) {
    case Expr::Kind::atom: {
      const Atom* a = d.find(e.atom);
      if (a == nullptr) throw ClosureError("", "undeclared atom '" + e.atom + "' in expression");
      if (!a->negligible) return N::unknown;
      return *a->negligible ? N::negligible : N::non_negligible;
    }
    case Expr::Kind::tensor: {
      for (const auto& k : e.kids)
        if (negligible_closure(d, k) == N::negligible) return N::negligible;
      return N::unknown;
    }
    case Expr::Kind::sum: {
      bool all = true;
      bool any_non = false;
      for (const auto& k : e.kids) {
        const N r = negligible_closure(d, k);
        all = all && r == N::negligible;
        any_non = any_non || r == N::non_negligible;
      }
      if (any_non) return N::non_negligible;
      return all ? N::negligible : N::unknown;
    }
    case Expr::Kind::retract:
      return negligible_closure(d, e.kids.front()) == N::negligible ? N::negligible : N::unknown;
  }
  return N::unknown;
}

}  // namespace relmod::closure
