#pragma once

#include <string>
#include <vector>

#include "relmod/catmodel/datum.hpp"
#include "relmod/checks/verdict.hpp"
#include "relmod/sl21/characters.hpp"

namespace relmod::sl21 {

/// Theta: labels (k, i), 0 <= k <= ell-2, 0 <= i <= ell-1, k-major order.
std::vector<WeightLabel> theta_labels(int ell);

/// One orbit {first, fuse_A(first)} with row(first) = factor * row(second)
/// in S'(-, W) for W of degree alpha.
struct OrbitPair {
  WeightLabel first;
  WeightLabel second;
  /// i + k + 1 >= ell: the partner is a sigma(0,1)-translate.
  bool wraps = false;
  CycScalar factor;
};

struct RankBoundReport {
  int ell = 3;
  std::vector<OrbitPair> classes;
  long bound = 0;
  long index_count = 0;
  bool fixed_point_free = false;
  /// fuse_A o fuse_A = id with parity restored, on every label.
  bool double_fusion_identity = false;
  checks::Verdict verdict;
  std::vector<std::string> open_questions;
};

/// Throws std::invalid_argument for even or small ell.
RankBoundReport rank_bound_analysis(int ell);

/// Symbolic datum for degrees a and -a. Undetermined inputs (dims, the
/// S' core on orbit classes, duals) are stand-ins listed in `placeholders`.
catmodel::ModularDatum emit_datum(int ell);

}  // namespace relmod::sl21
