#pragma once

#include <string>
#include <vector>

#include "relmod/exactnum/scalar.hpp"

namespace relmod::checks {

using exactnum::CycScalar;

enum class Status { holds, fails, hypothesis_not_met, data_absent };

const char* to_string(Status s);

struct Witness {
  std::string name;
  std::vector<long> indices;
  CycScalar value;
};

struct NamedScalar {
  std::string name;
  CycScalar value;
};

/// Outcome of one decision procedure.
///
/// holds/fails always carry at least one witness; hypothesis-not-met
/// names the unmet hypothesis in `summary`.
struct Verdict {
  std::string check;
  Status status = Status::data_absent;
  std::string summary;
  std::vector<Witness> witnesses;
  std::vector<NamedScalar> derived;
  std::vector<std::string> notes;
  std::vector<Verdict> children;
  /// A theorem-level consequence failed on data that passed its premises.
  bool internal_inconsistency = false;

  bool ok() const { return status == Status::holds; }
  const NamedScalar* find_derived(const std::string& name) const;
  const Witness* find_witness(const std::string& name) const;
};

Verdict make_verdict(std::string check, Status status, std::string summary);

/// Combines children: fails if any fails, else hypothesis-not-met or
/// data-absent if any is, else holds. With `skip_absent`, data-absent
/// children only count when every child is data-absent.
Verdict aggregate(std::string check, std::vector<Verdict> children, bool skip_absent = false);

}  // namespace relmod::checks
