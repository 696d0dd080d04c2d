#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relmod/checks/verdict.hpp"
#include "relmod/closure/datum.hpp"
#include "relmod/closure/expr.hpp"

namespace relmod::closure {

/// Conditions with v: flags on the base atoms, atom (x) v^n covered for
/// 1 <= n <= bound, and a product rule for every pair of base atoms.
/// Throws ClosureError when the datum has no distinguished atom.
checks::Verdict check_cor1(const ClosureDatum& d);

/// As check_cor1, each condition required only when the object it concerns
/// has generic degree. Throws ClosureError without a grading.
checks::Verdict check_cor2(const ClosureDatum& d);

enum class NodeKind { atom, power_rule, rewrite, direct_sum, retract };
const char* to_string(NodeKind k);

/// Derivation step. `object` is what the node certifies; `rule` indexes
/// products (rewrite) or powers (power_rule).
struct CertNode {
  NodeKind kind = NodeKind::atom;
  Expr object;
  std::string justification;
  long rule = -1;
  std::vector<CertNode> children;
};

struct Certificate {
  Expr target;
  /// "cor1" or "cor2": the hypothesis the derivation relies on.
  std::string hypothesis;
  CertNode root;
  long rewrites = 0;
};

struct CertifyResult {
  enum class Status { certified, stuck, depth_exhausted, hypothesis_not_met };
  Status status = Status::stuck;
  std::optional<Certificate> certificate;
  /// The sub-object no rule could reduce, when not certified.
  std::string stuck_at;
  std::string message;
};

const char* to_string(CertifyResult::Status s);

/// Searches for a derivation, trying product rules in declaration order.
/// `depth` bounds the number of nested rewrites.
CertifyResult certify(const ClosureDatum& d, const Expr& target, int depth);

struct ReplayResult {
  bool ok = false;
  std::string error;
};

/// Independently re-derives every node of the certificate from the datum.
ReplayResult replay(const ClosureDatum& d, const Certificate& c);

enum class Negligibility { negligible, non_negligible, unknown };
const char* to_string(Negligibility n);

/// Propagates atom flags: a negligible factor absorbs a tensor product, a
/// sum is negligible when every summand is and non-negligible when any is,
/// a retract of a negligible object is negligible.
Negligibility negligible_closure(const ClosureDatum& d, const Expr& e);

}  // namespace relmod::closure
