#pragma once

#include "relmod/catmodel/datum.hpp"
#include "relmod/checks/verdict.hpp"
#include "relmod/exactnum/matrix.hpp"

namespace relmod::checks {

using catmodel::Degree;
using catmodel::ModularDatum;
using exactnum::Exec;

/// Raised when a scalar needs data the datum does not carry (twists, blocks).
class DataAbsent : public catmodel::DatumError {
 public:
  using DatumError::DatumError;
};

/// Delta_- = t_j^-1 sum_i S'_{ij} t_i^-1 d(V_i).
CycScalar delta_minus(const ModularDatum& datum, const Degree& g, std::size_t j);

/// Delta_+ = t_j sum_i S'_{i*,j} t_i d(V_i), with S'_{i*,j} read from the
/// (-g, g) block. Mirror of delta_minus; reports flag it as a convention.
CycScalar delta_plus(const ModularDatum& datum, const Degree& g, std::size_t j);

Verdict check_nondegeneracy(const ModularDatum& datum, const Degree& g, Exec exec = Exec::parallel);
Verdict check_rank_constancy(const ModularDatum& datum, Exec exec = Exec::parallel);
Verdict check_dmug(const ModularDatum& datum, const Degree& g, Exec exec = Exec::parallel);
Verdict check_relative_modularity(const ModularDatum& datum, const Degree& g, const Degree& h,
                                  Exec exec = Exec::parallel);
Verdict check_premodular_inputs(const ModularDatum& datum);

/// Premodular inputs, rank constancy, and per listed degree g the
/// non-degeneracy, DMug and (g, g) modularity checks.
Verdict check_all(const ModularDatum& datum, Exec exec = Exec::parallel);

}  // namespace relmod::checks
