#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relmod/checks/verdict.hpp"
#include "relmod/closure/engine.hpp"

namespace relmod::cli {

inline constexpr const char* kReportSchema = "relmod-report/1";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

/// Scalars are written in the grammar parse_scalar reads back.
nlohmann::json verdict_to_json(const checks::Verdict& v);
nlohmann::json certificate_to_json(const closure::CertNode& n);

void render_verdict(const checks::Verdict& v, std::ostream& out, int indent = 0);
void render_certificate(const closure::CertNode& n, std::ostream& out, int indent = 0);

/// Collected output of one invocation.
struct RunReport {
  std::vector<std::string> invocation;
  std::vector<checks::Verdict> verdicts;
  nlohmann::json payload = nlohmann::json::object();
  /// Extra human-readable lines for text output, printed before verdicts.
  std::vector<std::string> text;
  int exit_code = kOk;

  /// Exit code from the verdicts: internal inconsistency wins, then any
  /// non-holding verdict (hypothesis-not-met tolerated with allow_unmet).
  int compute_exit(bool allow_unmet) const;

  nlohmann::json to_json() const;
  void render_text(std::ostream& out) const;
};

}  // namespace relmod::cli
