#include "relmod/exactnum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace relmod::exactnum {

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

namespace {

using IntPoly = std::vector<long>;

// Exact quotient of integer polynomials, divisor monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

IntPoly cyclotomic_polynomial(int m, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d, memo));
  }
  memo[m] = p;
  return p;
}

const CyclotomicField* rational_field() {
  static const CyclotomicField* const field = &CyclotomicField::get(1);
  return field;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

CyclotomicField::CyclotomicField(int conductor) : conductor_(conductor) {
  static std::map<int, IntPoly> memo;  // guarded by the registry mutex
  phi_ = cyclotomic_polynomial(conductor, memo);
  degree_ = static_cast<int>(phi_.size()) - 1;

  powers_.resize(static_cast<std::size_t>(conductor));
  std::vector<Rational> cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int e = 0; e < conductor; ++e) {
    powers_[static_cast<std::size_t>(e)] = cur;
    // multiply by zeta, folding zeta^degree through the monic relation
    Rational top = cur.back();
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[static_cast<std::size_t>(i)];
    }
  }
}

const std::vector<Rational>& CyclotomicField::power(long e) const {
  return powers_[static_cast<std::size_t>(mod_floor(e, conductor_))];
}

std::vector<Rational> CyclotomicField::reduce(const std::vector<Rational>& by_exponent) const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_), 0);
  for (std::size_t e = 0; e < by_exponent.size(); ++e) {
    const Rational& c = by_exponent[e];
    if (c == 0) continue;
    const auto& p = power(static_cast<long>(e));
    for (int i = 0; i < degree_; ++i) {
      if (p[i] != 0) out[i] += c * p[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}
Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}
Cyclotomic::Cyclotomic(Rational value)
    : field_(rational_field()), coeffs_{std::move(value)} {}

Cyclotomic::Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::root_power(int conductor, long e) {
  const auto& f = CyclotomicField::get(conductor);
  return Cyclotomic(&f, f.power(e));
}

Cyclotomic Cyclotomic::from_coefficients(int conductor, std::vector<Rational> coeffs) {
  const auto& f = CyclotomicField::get(conductor);
  if (static_cast<int>(coeffs.size()) != f.degree()) {
    throw std::invalid_argument("coefficient count does not match field degree");
  }
  return Cyclotomic(&f, std::move(coeffs));
}

void Cyclotomic::normalize() {
  if (field_->conductor() == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  Rational c = coeffs_.front();
  field_ = rational_field();
  coeffs_.assign(1, c);
}

bool Cyclotomic::is_zero() const { return is_rational() && coeffs_.front() == 0; }
bool Cyclotomic::is_rational() const { return field_->conductor() == 1; }

Cyclotomic Cyclotomic::lifted(int target) const {
  const int m = conductor();
  if (target == m) return *this;
  if (target % m != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  const auto& tf = CyclotomicField::get(target);
  if (is_rational()) {
    std::vector<Rational> c(static_cast<std::size_t>(tf.degree()), 0);
    c[0] = coeffs_.front();
    Cyclotomic out;
    out.field_ = &tf;
    out.coeffs_ = std::move(c);
    return out;
  }
  const long step = target / m;
  std::vector<Rational> raw(static_cast<std::size_t>(target), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    raw[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * step, target))] += coeffs_[i];
  }
  Cyclotomic out;
  out.field_ = &tf;
  out.coeffs_ = tf.reduce(raw);
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
    normalize();
    return *this;
  }
  const int m = static_cast<int>(lcm_long(conductor(), rhs.conductor()));
  Cyclotomic a = lifted(m);
  Cyclotomic b = rhs.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.is_rational()) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    normalize();
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  const int m = static_cast<int>(lcm_long(conductor(), rhs.conductor()));
  Cyclotomic a = lifted(m);
  Cyclotomic b = rhs.lifted(m);
  std::vector<Rational> raw(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[(i + j) % static_cast<std::size_t>(m)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  field_ = a.field_;
  coeffs_ = field_->reduce(raw);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta)");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);

  // Solve (a * x = 1) as a linear system over Q in the power basis.
  const int n = field_->degree();
  const int m = field_->conductor();
  std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n) + 1, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> raw(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) raw[static_cast<std::size_t>((i + j) % m)] += coeffs_[i];
    auto col = field_->reduce(raw);
    for (int i = 0; i < n; ++i) aug[i][j] = col[i];
  }
  aug[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw ArithmeticError("singular multiplication map in Q(zeta)");
    std::swap(aug[p], aug[c]);
    Rational piv = aug[c][c];
    for (int k = c; k <= n; ++k) aug[c][k] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (int k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return Cyclotomic(field_, std::move(x));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() != b.is_rational()) {
    // a rational never equals an irrational element in canonical form
    return false;
  }
  const int m = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::complex<double> Cyclotomic::evaluate() const {
  const double m = conductor();
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    acc += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

}  // namespace relmod::exactnum
