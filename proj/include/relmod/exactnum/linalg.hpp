#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relmod/exactnum/matrix.hpp"

namespace relmod::exactnum {

/// Result of fraction-free elimination.
///
/// In the Gauss-Jordan form every pivot entry equals `pivot`, the last
/// pivot produced (a signed minor of the input), and every entry is a
/// ring element: no fractions are ever formed.
struct Reduction {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  CycScalar pivot{1L};
  int swap_sign = 1;
};

/// Bareiss elimination. Pivot: first nonzero entry at or below the current
/// row, columns scanned left to right. With `full_reduce` the rows above
/// each pivot are cleared as well (fraction-free Gauss-Jordan).
Reduction fraction_free_reduce(const ExactMatrix& m, bool full_reduce, Exec exec = Exec::parallel);

std::size_t rank(const ExactMatrix& m, Exec exec = Exec::parallel);
CycScalar determinant(const ExactMatrix& m, Exec exec = Exec::parallel);

/// A nonzero ring vector v with m * v = 0, or nullopt when m has full column rank.
std::optional<std::vector<CycScalar>> kernel_vector(const ExactMatrix& m, Exec exec = Exec::parallel);

struct InverseResult {
  enum class Status {
    inverted,
    singular,
    /// Nonsingular over the fraction field but the determinant is not a
    /// unit of the Laurent ring, so the inverse has no entrywise form here.
    not_ring_invertible,
  };
  Status status = Status::singular;
  ExactMatrix inverse;
  std::vector<CycScalar> kernel;
  CycScalar determinant;
};

/// Throws std::invalid_argument for non-square input.
InverseResult invert(const ExactMatrix& m, Exec exec = Exec::parallel);

}  // namespace relmod::exactnum
