#include "relmod/catmodel/degree.hpp"

#include <algorithm>
#include <cctype>

namespace relmod::catmodel {

namespace {

Rational mod_one(Rational r) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  r -= fl;
  r.canonicalize();
  return r;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

long parse_long(const std::string& s, std::string_view whole) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DatumError("degree '" + std::string(whole) + "': bad integer component '" + s + "'");
  }
}

// alpha*a + shift, e.g. "a", "-2a+1/3", "1/2".
void parse_torus(const std::string& text, std::string_view whole, long& alpha, Rational& shift) {
  alpha = 0;
  shift = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw DatumError("degree '" + std::string(whole) + "': expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string term = trim(std::string_view(text).substr(pos, end - pos));
    if (term.empty()) throw DatumError("degree '" + std::string(whole) + "': empty term");
    if (term.back() == 'a') {
      std::string coeff = trim(std::string_view(term).substr(0, term.size() - 1));
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      alpha += sign * (coeff.empty() ? 1L : parse_long(coeff, whole));
    } else {
      try {
        Rational r(term);
        r.canonicalize();
        shift += sign * r;
      } catch (const std::exception&) {
        throw DatumError("degree '" + std::string(whole) + "': bad term '" + term + "'");
      }
    }
    any = true;
    pos = end;
  }
  if (!any) throw DatumError("degree '" + std::string(whole) + "': empty torus component");
}

}  // namespace

Degree GradingSpec::zero() const {
  Degree d;
  d.cyclic.assign(cyclic_orders.size(), 0);
  return d;
}

Degree GradingSpec::normalized(Degree d) const {
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    const long n = cyclic_orders[i];
    if (n > 0) d.cyclic[i] = ((d.cyclic[i] % n) + n) % n;
  }
  d.shift = mod_one(d.shift);
  if (!torus) {
    d.alpha = 0;
    d.shift = 0;
  }
  return d;
}

Degree GradingSpec::add(const Degree& a, const Degree& b) const {
  Degree out = a;
  for (std::size_t i = 0; i < out.cyclic.size(); ++i) out.cyclic[i] += b.cyclic[i];
  out.alpha += b.alpha;
  out.shift += b.shift;
  return normalized(std::move(out));
}

Degree GradingSpec::negate(const Degree& a) const {
  Degree out = a;
  for (auto& c : out.cyclic) c = -c;
  out.alpha = -out.alpha;
  out.shift = -out.shift;
  return normalized(std::move(out));
}

Degree GradingSpec::parse(std::string_view text) const {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  const std::size_t expected = cyclic_orders.size() + (torus ? 1 : 0);
  if (parts.size() != expected) {
    throw DatumError("degree '" + std::string(text) + "': expected " + std::to_string(expected) +
                     " component(s), got " + std::to_string(parts.size()));
  }
  Degree d;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) d.cyclic.push_back(parse_long(parts[i], text));
  if (torus) parse_torus(parts.back(), text, d.alpha, d.shift);
  return normalized(std::move(d));
}

std::string GradingSpec::format(const Degree& d) const {
  std::string out;
  for (std::size_t i = 0; i < d.cyclic.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(d.cyclic[i]);
  }
  if (!torus) return out.empty() ? "0" : out;
  if (!d.cyclic.empty()) out += ',';
  std::string t;
  if (d.alpha == 1) {
    t = "a";
  } else if (d.alpha == -1) {
    t = "-a";
  } else if (d.alpha != 0) {
    t = std::to_string(d.alpha) + "a";
  }
  if (d.shift != 0) {
    if (!t.empty()) t += '+';
    t += d.shift.get_str();
  }
  if (t.empty()) t = "0";
  return out + t;
}

bool GradingSpec::in_small_subset(const Degree& d) const {
  if (rule == SubsetRule::torsion) {
    if (d.alpha != 0) return false;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
      if (cyclic_orders[i] == 0 && d.cyclic[i] != 0) return false;
    return true;
  }
  return std::find(small_subset.begin(), small_subset.end(), d) != small_subset.end();
}

bool GradingSpec::subset_is_symmetric() const {
  if (rule == SubsetRule::torsion) return true;
  return std::all_of(small_subset.begin(), small_subset.end(),
                     [&](const Degree& x) { return in_small_subset(negate(x)); });
}

std::string format_translation(const TranslationElement& k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(k[i]);
  }
  return out + ")";
}

}  // namespace relmod::catmodel
