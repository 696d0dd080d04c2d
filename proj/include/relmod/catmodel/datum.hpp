#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relmod/catmodel/degree.hpp"
#include "relmod/exactnum/matrix.hpp"

namespace relmod::catmodel {

using exactnum::CycScalar;
using exactnum::ExactMatrix;

/// Translation group Z with quantum dimensions of sigma(k) and the pairing psi.
struct TranslationSpec {
  struct QDim {
    TranslationElement k;
    CycScalar value;
    friend bool operator==(const QDim&, const QDim&) = default;
  };
  struct Psi {
    Degree g;
    TranslationElement k;
    CycScalar value;
    friend bool operator==(const Psi&, const Psi&) = default;
  };

  std::vector<long> cyclic_orders;
  std::vector<QDim> quantum_dimension;
  std::vector<Psi> psi;
  std::optional<bool> no_self_extension;

  TranslationElement zero() const { return TranslationElement(cyclic_orders.size(), 0); }
  TranslationElement normalized(TranslationElement k) const;
  TranslationElement add(const TranslationElement& a, const TranslationElement& b) const;
  /// Order of k in Z, or 0 when infinite.
  long order(const TranslationElement& k) const;

  const CycScalar* find_qdim(const TranslationElement& k) const;
  const CycScalar* find_psi(const Degree& g, const TranslationElement& k) const;

  friend bool operator==(const TranslationSpec&, const TranslationSpec&) = default;
};

/// Data carried per generic degree g: the index set I_g and its scalars.
struct DegreeData {
  Degree g;
  std::vector<std::string> labels;
  std::vector<CycScalar> dims;
  std::optional<std::vector<CycScalar>> twists;
  /// i -> i*, an index into I_{-g}. Identity when absent.
  std::optional<std::vector<std::size_t>> dual;

  std::size_t size() const { return labels.size(); }
  std::size_t dual_of(std::size_t i) const { return dual ? (*dual)[i] : i; }
  friend bool operator==(const DegreeData&, const DegreeData&) = default;
};

/// c_{i1,i2}^{i3} for V_{i1} (x) V_{i2} with i3 in I_{g1+g2}.
struct FusionEntry {
  Degree g1;
  std::size_t i1 = 0;
  Degree g2;
  std::size_t i2 = 0;
  std::size_t i3 = 0;
  long coefficient = 0;
  friend bool operator==(const FusionEntry&, const FusionEntry&) = default;
};

using BlockKey = std::pair<Degree, Degree>;

/// Raised when a (g, h) block is required but not derivable from the datum.
class MissingBlock : public DatumError {
 public:
  using DatumError::DatumError;
};

struct ModularDatum {
  std::string name;
  GradingSpec grading;
  TranslationSpec translation;
  std::vector<DegreeData> degrees;
  std::map<BlockKey, ExactMatrix> sprime;
  std::optional<std::vector<FusionEntry>> fusion;
  std::optional<long> orbit_count;
  /// Fields filled with stand-in values rather than derived ones.
  std::vector<std::string> placeholders;

  const DegreeData* find(const Degree& g) const;
  /// Throws DatumError naming the degree when it is not listed.
  const DegreeData& at(const Degree& g) const;

  /// S'_{g,h} as stored, or derived from S'_{h,g} using S_{g,h} = S_{h,g}^T.
  std::optional<ExactMatrix> sprime_block(const Degree& g, const Degree& h) const;
  /// Same, throwing MissingBlock when unavailable.
  ExactMatrix require_sprime(const Degree& g, const Degree& h) const;

  friend bool operator==(const ModularDatum&, const ModularDatum&) = default;
};

/// S_{g,h} = S'_{g,h} * diag(d(V_j)), j in I_h.
ExactMatrix modified_S(const ModularDatum& datum, const Degree& g, const Degree& h);
inline ExactMatrix modified_S(const ModularDatum& datum, const Degree& g) { return modified_S(datum, g, g); }

/// Omega_g = sum_i d(V_i) V_i as (index, coefficient) pairs in I_g order.
/// Throws DatumError("non-generic degree ...") for g in X.
std::vector<std::pair<std::size_t, CycScalar>> kirby_color(const ModularDatum& datum, const Degree& g);

/// A violated datum invariant. `clause` is a stable identifier.
struct Issue {
  std::string clause;
  std::string detail;
  friend bool operator==(const Issue&, const Issue&) = default;
};

namespace clause {
inline constexpr const char* kSubsetSymmetric = "grading.small_subset.symmetric";
inline constexpr const char* kDegreeGeneric = "degrees.generic";
inline constexpr const char* kQDimUnit = "translation.quantum_dimension.unit";
inline constexpr const char* kQDimIdentity = "translation.quantum_dimension.identity";
inline constexpr const char* kQDimMultiplicative = "translation.quantum_dimension.multiplicative";
inline constexpr const char* kPsiBilinear = "translation.psi.bilinear";
inline constexpr const char* kPsiIdentity = "translation.psi.identity";
inline constexpr const char* kPsiFiniteOrder = "translation.psi.finite_order";
inline constexpr const char* kDimsNonzero = "degrees.dims.nonzero";
inline constexpr const char* kTwistsInvertible = "degrees.twists.invertible";
inline constexpr const char* kDualPermutation = "degrees.dual.permutation";
inline constexpr const char* kSymmetric = "sprime.symmetric";
inline constexpr const char* kTranspose = "sprime.transpose";
inline constexpr const char* kFusionGrading = "fusion.grading";
}  // namespace clause

/// Checks every invariant the data model states; empty means valid.
std::vector<Issue> validate(const ModularDatum& datum);

}  // namespace relmod::catmodel
