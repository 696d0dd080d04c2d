#include "relmod/closure/expr.hpp"

#include <algorithm>
#include <cctype>

namespace relmod::closure {

Expr Expr::make_atom(std::string name) {
  Expr e;
  e.atom = std::move(name);
  return e;
}

Expr Expr::tensor(std::vector<Expr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  Expr e;
  e.kind = Kind::tensor;
  for (auto& f : factors) {
    if (f.kind == Kind::tensor) {
      for (auto& k : f.kids) e.kids.push_back(std::move(k));
    } else {
      e.kids.push_back(std::move(f));
    }
  }
  return e;
}

Expr Expr::sum(std::vector<Expr> summands) {
  if (summands.size() == 1) return std::move(summands.front());
  Expr e;
  e.kind = Kind::sum;
  for (auto& s : summands) {
    if (s.kind == Kind::sum) {
      for (auto& k : s.kids) e.kids.push_back(std::move(k));
    } else {
      e.kids.push_back(std::move(s));
    }
  }
  return e;
}

Expr Expr::retract(Expr inner) {
  Expr e;
  e.kind = Kind::retract;
  e.kids.push_back(std::move(inner));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError("expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    std::vector<Expr> parts{product()};
    while (eat('+')) parts.push_back(product());
    return Expr::sum(std::move(parts));
  }

  Expr product() {
    std::vector<Expr> parts{factor()};
    while (eat('*')) parts.push_back(factor());
    return Expr::tensor(std::move(parts));
  }

  Expr factor() {
    if (eat('(')) {
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    std::string name(s_.substr(start, pos_ - start));
    if (name == "retract") {
      if (!eat('(')) fail("expected '(' after retract");
      Expr inner = sum();
      if (!eat(')')) fail("expected ')'");
      return Expr::retract(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(name.front()))) fail("atom names start with a letter");
    if (!eat('^')) return Expr::make_atom(std::move(name));
    skip();
    const std::size_t ns = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (ns == pos_) fail("expected an exponent");
    const long n = std::stol(std::string(s_.substr(ns, pos_ - ns)));
    if (n < 1) fail("exponent must be >= 1");
    if (n > 64) fail("exponent too large");
    return Expr::tensor(std::vector<Expr>(static_cast<std::size_t>(n), Expr::make_atom(name)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(const Expr& e, std::string& out, int parent) {
  // parent: 0 top/sum, 1 tensor
  switch (e.kind) {
    case Expr::Kind::atom:
      out += e.atom;
      return;
    case Expr::Kind::retract:
      out += "retract(";
      print(e.kids.front(), out, 0);
      out += ")";
      return;
    case Expr::Kind::tensor: {
      // Runs of one atom print as name^n.
      for (std::size_t i = 0; i < e.kids.size();) {
        std::size_t j = i;
        while (j < e.kids.size() && e.kids[j].kind == Expr::Kind::atom && e.kids[i].kind == Expr::Kind::atom &&
               e.kids[j].atom == e.kids[i].atom)
          ++j;
        if (i > 0) out += "*";
        if (j - i > 1) {
          out += e.kids[i].atom + "^" + std::to_string(j - i);
          i = j;
        } else {
          print(e.kids[i], out, 1);
          ++i;
        }
      }
      return;
    }
    case Expr::Kind::sum:
      if (parent == 1) out += "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i > 0) out += " + ";
        print(e.kids[i], out, 0);
      }
      if (parent == 1) out += ")";
      return;
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out, 0);
  return out;
}

std::vector<Term> expand(const Expr& e) {
  std::vector<Term> out;
  switch (e.kind) {
    case Expr::Kind::atom:
      out.push_back({false, {e.atom}});
      break;
    case Expr::Kind::retract:
      out = expand(e.kids.front());
      for (auto& t : out) t.retract = true;
      break;
    case Expr::Kind::sum:
      for (const auto& k : e.kids) {
        auto part = expand(k);
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    case Expr::Kind::tensor: {
      out.push_back({false, {}});
      for (const auto& k : e.kids) {
        const auto part = expand(k);
        std::vector<Term> next;
        for (const auto& a : out)
          for (const auto& b : part) {
            Term t{a.retract || b.retract, a.word};
            t.word.insert(t.word.end(), b.word.begin(), b.word.end());
            next.push_back(std::move(t));
          }
        out = std::move(next);
      }
      break;
    }
  }
  for (auto& t : out) std::sort(t.word.begin(), t.word.end());
  std::sort(out.begin(), out.end());
  return out;
}

Expr word_expr(const std::vector<std::string>& word) {
  std::vector<Expr> f;
  for (const auto& w : word) f.push_back(Expr::make_atom(w));
  return Expr::tensor(std::move(f));
}

}  // namespace relmod::closure
