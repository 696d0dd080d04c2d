#pragma once

#include "relmod/checks/verdict.hpp"
#include "relmod/sl21/rep.hpp"

namespace relmod::sl21 {

/// Evaluates (A1)-(A7), E2^2 = F2^2 = 0 and K = q^H as matrix identities.
/// One child verdict per clause; a failing clause carries the first
/// nonzero entry of LHS - RHS as witness (row, basis column).
checks::Verdict check_relations(const WeightModuleRep& rep, Exec exec = Exec::parallel);

/// First convention (original, then corrected) under which every A_k,
/// 1 <= k <= ell-1, ell in {3, 5}, passes check_relations. Computed once.
Convention default_convention();

}  // namespace relmod::sl21
