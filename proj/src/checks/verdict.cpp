#include "relmod/checks/verdict.hpp"

namespace relmod::checks {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::hypothesis_not_met:
      return "hypothesis-not-met";
    case Status::data_absent:
      return "data-absent";
  }
  return "unknown";
}

const NamedScalar* Verdict::find_derived(const std::string& name) const {
  for (const auto& d : derived)
    if (d.name == name) return &d;
  return nullptr;
}

const Witness* Verdict::find_witness(const std::string& name) const {
  for (const auto& w : witnesses)
    if (w.name == name) return &w;
  return nullptr;
}

Verdict make_verdict(std::string check, Status status, std::string summary) {
  Verdict v;
  v.check = std::move(check);
  v.status = status;
  v.summary = std::move(summary);
  return v;
}

Verdict aggregate(std::string check, std::vector<Verdict> children, bool skip_absent) {
  Verdict v;
  v.check = std::move(check);
  int fails = 0;
  int unmet = 0;
  int absent = 0;
  for (const auto& c : children) {
    fails += c.status == Status::fails;
    unmet += c.status == Status::hypothesis_not_met;
    absent += c.status == Status::data_absent;
    v.internal_inconsistency = v.internal_inconsistency || c.internal_inconsistency;
  }
  if (fails > 0) {
    v.status = Status::fails;
  } else if (unmet > 0) {
    v.status = Status::hypothesis_not_met;
  } else if (absent > 0 && (!skip_absent || absent == static_cast<int>(children.size()))) {
    v.status = Status::data_absent;
  } else {
    v.status = Status::holds;
  }
  v.summary = std::to_string(children.size()) + " sub-check(s): " + std::to_string(fails) + " failing, " +
              std::to_string(unmet) + " hypothesis-not-met, " + std::to_string(absent) + " data-absent";
  v.witnesses.push_back({"failing_subchecks", {}, CycScalar(static_cast<long>(fails))});
  v.children = std::move(children);
  return v;
}

}  // namespace relmod::checks
