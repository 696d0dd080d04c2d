#include "relmod/exactnum/scalar.hpp"

#include <cctype>
#include <sstream>

namespace relmod::exactnum {

CycScalar::CycScalar(long value) : CycScalar(Cyclotomic(value)) {}
CycScalar::CycScalar(Rational value) : CycScalar(Cyclotomic(std::move(value))) {}
CycScalar::CycScalar(Cyclotomic value) {
  if (!value.is_zero()) terms_.emplace(Monomial{}, std::move(value));
}

CycScalar CycScalar::term(Cyclotomic coeff, Monomial mono) {
  CycScalar s;
  if (!coeff.is_zero()) s.terms_.emplace(mono, std::move(coeff));
  return s;
}

CycScalar CycScalar::variable(Var v, int power) {
  Monomial m{};
  m[static_cast<int>(v)] = power;
  return term(Cyclotomic(1L), m);
}

CycScalar CycScalar::root(int conductor, long e) {
  return CycScalar(Cyclotomic::root_power(conductor, e));
}

bool CycScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int CycScalar::conductor() const {
  long m = 1;
  for (const auto& [mono, c] : terms_) m = lcm_long(m, c.conductor());
  return static_cast<int>(m);
}

Cyclotomic CycScalar::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void CycScalar::add_term(const Monomial& m, const Cyclotomic& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    if (it->second.is_zero()) terms_.erase(it);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  CycScalar out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m;
      for (int i = 0; i < kVarCount; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (!is_unit()) {
    throw ArithmeticError(is_zero() ? "inverse of zero" : "inverse of a non-unit Laurent polynomial");
  }
  const auto& [m, c] = *terms_.begin();
  Monomial neg;
  for (int i = 0; i < kVarCount; ++i) neg[i] = -m[i];
  return term(c.inverse(), neg);
}

CycScalar CycScalar::pow(long n) const {
  CycScalar base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CycScalar acc(1L);
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

std::complex<double> CycScalar::evaluate(const std::array<std::complex<double>, kVarCount>& vars) const {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.evaluate();
    for (int i = 0; i < kVarCount; ++i) {
      if (m[i] != 0) t *= std::pow(vars[i], m[i]);
    }
    acc += t;
  }
  return acc;
}

CycScalar CycScalar::substitute(Var v, const CycScalar& value) const {
  CycScalar out;
  const int idx = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[idx] = 0;
    out += term(c, rest) * value.pow(m[idx]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<CycScalar> divide_exact(const CycScalar& a, const CycScalar& b) {
  if (b.is_zero()) throw ArithmeticError("exact division by zero");
  if (a.is_zero()) return CycScalar();
  if (b.is_unit()) return a * b.inverse();

  // Per-variable degree box the quotient must live in.
  auto degree_range = [](const CycScalar& s, int var) {
    int lo = s.terms().begin()->first[var];
    int hi = lo;
    for (const auto& [m, c] : s.terms()) {
      lo = std::min(lo, m[var]);
      hi = std::max(hi, m[var]);
    }
    return std::pair{lo, hi};
  };
  Monomial box_lo;
  Monomial box_hi;
  for (int v = 0; v < kVarCount; ++v) {
    auto [alo, ahi] = degree_range(a, v);
    auto [blo, bhi] = degree_range(b, v);
    box_lo[v] = alo - blo;
    box_hi[v] = ahi - bhi;
    if (box_lo[v] > box_hi[v]) return std::nullopt;
  }

  const auto& [lead_mono, lead_coeff] = *b.terms().rbegin();
  const Cyclotomic lead_inv = lead_coeff.inverse();
  CycScalar quotient;
  CycScalar rem = a;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    Monomial qm;
    for (int v = 0; v < kVarCount; ++v) {
      qm[v] = rm[v] - lead_mono[v];
      if (qm[v] < box_lo[v] || qm[v] > box_hi[v]) return std::nullopt;
    }
    CycScalar t = CycScalar::term(rc * lead_inv, qm);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

CycScalar quantum_integer(long n, int ell) {
  if (ell < 3 || ell % 2 == 0) {
    throw std::invalid_argument("quantum_integer requires an odd ell >= 3");
  }
  if (n < 0) return -quantum_integer(-n, ell);
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
  CycScalar acc;
  for (long j = 0; j < n; ++j) acc += CycScalar::root(ell, n - 1 - 2 * j);
  return acc;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string rational_text(const Rational& r) { return r.get_str(); }

// A Cyclotomic coefficient as a sum of "c*zM^e" pieces.
std::vector<std::pair<Rational, long>> cyclotomic_pieces(const Cyclotomic& c) {
  std::vector<std::pair<Rational, long>> out;
  const auto& co = c.coefficients();
  for (std::size_t i = 0; i < co.size(); ++i) {
    if (co[i] != 0) out.emplace_back(co[i], static_cast<long>(i));
  }
  return out;
}

}  // namespace

std::string to_string(const CycScalar& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first reads naturally for polynomials.
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    std::string vars;
    for (int v = 0; v < kVarCount; ++v) {
      if (mono[v] == 0) continue;
      vars += '*';
      vars += kVarNames[v];
      if (mono[v] != 1) vars += "^" + std::to_string(mono[v]);
    }
    for (const auto& [r, e] : cyclotomic_pieces(coeff)) {
      Rational mag = abs(r);
      const bool negative = r < 0;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string body;
      if (e != 0) {
        body = "z" + std::to_string(coeff.conductor());
        if (e != 1) body += "^" + std::to_string(e);
      }
      body += vars;
      if (!body.empty() && body.front() == '*') body.erase(0, 1);
      if (body.empty()) {
        os << rational_text(mag);
      } else if (mag == 1) {
        os << body;
      } else {
        os << rational_text(mag) << '*' << body;
      }
    }
  }
  return os.str();
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  CycScalar parse() {
    CycScalar v = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycScalar sum() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    CycScalar acc = product();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        break;
      }
    }
    return acc;
  }

  CycScalar product() {
    CycScalar acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        CycScalar d = power();
        auto q = divide_exact(acc, d);
        if (!q) fail("non-exact division");
        acc = *q;
      } else {
        break;
      }
    }
    return acc;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  long exponent() {
    if (accept('(')) {
      long e = integer();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return integer();
  }

  CycScalar power() {
    CycScalar base = atom();
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  CycScalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CycScalar v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return CycScalar(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'z') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected conductor after 'z'");
      int m = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (m < 1) fail("conductor must be positive");
      return CycScalar::root(m, 1);
    }
    for (int v = 0; v < kVarCount; ++v) {
      if (c == kVarNames[v]) {
        ++pos_;
        return CycScalar::variable(static_cast<Var>(v));
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace relmod::exactnum
