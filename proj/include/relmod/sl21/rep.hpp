#pragma once

#include <array>
#include <string>
#include <vector>

#include "relmod/exactnum/matrix.hpp"

namespace relmod::sl21 {

using exactnum::CycScalar;
using exactnum::ExactMatrix;
using exactnum::Exec;

/// Coefficient of F_2 in A_k: `original` uses [i+1], `corrected` uses [i].
enum class Convention { original, corrected };

const char* to_string(Convention c);

enum class Gen : int { H1 = 0, H2, E1, F1, E2, F2 };
inline constexpr int kGenCount = 6;
inline constexpr std::array<const char*, kGenCount> kGenNames{"H1", "H2", "E1", "F1", "E2", "F2"};

/// E2 and F2 are odd, everything else even.
constexpr bool is_odd(Gen g) { return g == Gen::E2 || g == Gen::F2; }

/// Cartan matrix of sl(2|1); symmetrizers d = (1, 1).
inline constexpr std::array<std::array<int, 2>, 2> kCartan{{{2, -1}, {-1, 0}}};

/// Explicit U_q^H sl(2|1) module: generator matrices on a weight basis.
struct WeightModuleRep {
  int ell = 3;
  Convention convention = Convention::corrected;
  std::vector<std::string> labels;
  /// 0 even, 1 odd.
  std::vector<int> parity;
  std::array<ExactMatrix, kGenCount> gens;

  std::size_t dim() const { return labels.size(); }
  const ExactMatrix& operator[](Gen g) const { return gens[static_cast<int>(g)]; }
  ExactMatrix& operator[](Gen g) { return gens[static_cast<int>(g)]; }

  /// Integer eigenvalue of H_i (i = 1, 2) on basis vector b. Throws when
  /// H_i is not diagonal with integer entries.
  long weight(int i, std::size_t b) const;
  /// K_i^power = q^(power * H_i) with q = zeta_ell.
  ExactMatrix K(int i, long power = 1) const;
  /// diag((-1)^parity).
  ExactMatrix parity_operator() const;
};

/// The 2k+1 dimensional module A_k, basis v^j_i (j = 0, 1; 0 <= i <= k-j)
/// ordered j = 0 first. Requires odd ell >= 3 and 1 <= k <= ell-1.
WeightModuleRep build_Ak(int k, int ell, Convention convention);

/// One-dimensional module with trivial action, even or odd (C-bar).
WeightModuleRep trivial_module(int ell, bool odd = false);

/// Tensor product via the coproduct, with Koszul signs for odd generators
/// acting on the second factor.
WeightModuleRep tensor_rep(const WeightModuleRep& a, const WeightModuleRep& b, Exec exec = Exec::parallel);

}  // namespace relmod::sl21
