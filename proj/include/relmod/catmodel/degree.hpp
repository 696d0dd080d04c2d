#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relmod/exactnum/cyclotomic.hpp"

namespace relmod::catmodel {

using exactnum::Rational;

class DatumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of G = (product of cyclic factors) x (optional C/Z torus).
///
/// The torus part is alpha * a + shift with `a` the formal generic degree
/// and shift an exact rational in [0, 1). Cyclic parts are reduced into
/// [0, n) for finite factors and left as is for infinite ones (order 0).
struct Degree {
  std::vector<long> cyclic;
  long alpha = 0;
  Rational shift = 0;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.cyclic == b.cyclic && a.alpha == b.alpha && a.shift == b.shift;
  }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (a.cyclic != b.cyclic) return a.cyclic < b.cyclic;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.shift < b.shift;
  }
};

/// G together with the small symmetric subset X.
class GradingSpec {
 public:
  enum class SubsetRule { listed, torsion };

  std::vector<long> cyclic_orders;
  bool torus = false;
  SubsetRule rule = SubsetRule::listed;
  std::vector<Degree> small_subset;

  Degree zero() const;
  Degree normalized(Degree d) const;
  Degree add(const Degree& a, const Degree& b) const;
  Degree negate(const Degree& a) const;

  /// Text form: comma-separated cyclic components, then the torus part
  /// ("a", "-a+1/2", "0").
  Degree parse(std::string_view text) const;
  std::string format(const Degree& d) const;

  bool in_small_subset(const Degree& d) const;
  bool is_generic(const Degree& d) const { return !in_small_subset(d); }
  /// X = -X. Always true for the torsion rule.
  bool subset_is_symmetric() const;

  friend bool operator==(const GradingSpec&, const GradingSpec&) = default;
};

/// Element of the translation group Z, one component per cyclic factor.
using TranslationElement = std::vector<long>;

std::string format_translation(const TranslationElement& k);

}  // namespace relmod::catmodel
