#include "relmod/cli/report.hpp"

#include <functional>

namespace relmod::cli {

using nlohmann::json;

namespace {

std::string indices_text(const std::vector<long>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

void collect_derived(const checks::Verdict& v, const std::string& prefix, json& out) {
  const std::string path = prefix.empty() ? v.check : prefix + "/" + v.check;
  for (const auto& d : v.derived) out.push_back({{"check", path}, {"name", d.name}, {"value", exactnum::to_string(d.value)}});
  for (const auto& c : v.children) collect_derived(c, path, out);
}

bool any_inconsistency(const checks::Verdict& v) {
  if (v.internal_inconsistency) return true;
  for (const auto& c : v.children)
    if (any_inconsistency(c)) return true;
  return false;
}

}  // namespace

json verdict_to_json(const checks::Verdict& v) {
  json j;
  j["check"] = v.check;
  j["status"] = checks::to_string(v.status);
  j["summary"] = v.summary;
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back({{"name", w.name}, {"indices", w.indices}, {"value", exactnum::to_string(w.value)}});
  j["witnesses"] = ws;
  json ds = json::array();
  for (const auto& d : v.derived) ds.push_back({{"name", d.name}, {"value", exactnum::to_string(d.value)}});
  j["derived"] = ds;
  j["notes"] = v.notes;
  json cs = json::array();
  for (const auto& c : v.children) cs.push_back(verdict_to_json(c));
  j["children"] = cs;
  j["internal_inconsistency"] = v.internal_inconsistency;
  return j;
}

json certificate_to_json(const closure::CertNode& n) {
  json j{{"kind", closure::to_string(n.kind)}, {"object", closure::to_string(n.object)}, {"justification", n.justification}};
  if (n.rule >= 0) j["rule"] = n.rule;
  json cs = json::array();
  for (const auto& c : n.children) cs.push_back(certificate_to_json(c));
  j["children"] = cs;
  return j;
}

void render_verdict(const checks::Verdict& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad << "[" << checks::to_string(v.status) << "] " << v.check;
  if (!v.summary.empty()) out << ": " << v.summary;
  out << "\n";
  for (const auto& w : v.witnesses)
    out << pad << "  witness " << w.name << " " << indices_text(w.indices) << " = " << exactnum::to_string(w.value) << "\n";
  for (const auto& d : v.derived) out << pad << "  derived " << d.name << " = " << exactnum::to_string(d.value) << "\n";
  for (const auto& n : v.notes) out << pad << "  note " << n << "\n";
  if (v.internal_inconsistency) out << pad << "  INTERNAL INCONSISTENCY\n";
  for (const auto& c : v.children) render_verdict(c, out, indent + 2);
}

void render_certificate(const closure::CertNode& n, std::ostream& out, int indent) {
  out << std::string(static_cast<std::size_t>(indent), ' ') << closure::to_string(n.kind) << " " << closure::to_string(n.object)
      << "  {" << n.justification << "}\n";
  for (const auto& c : n.children) render_certificate(c, out, indent + 2);
}

int RunReport::compute_exit(bool allow_unmet) const {
  for (const auto& v : verdicts)
    if (any_inconsistency(v)) return kInternal;
  for (const auto& v : verdicts) {
    if (v.status == checks::Status::holds) continue;
    if (v.status == checks::Status::hypothesis_not_met && allow_unmet) continue;
    return kCheckFailed;
  }
  return kOk;
}

json RunReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["invocation"] = invocation;
  json vs = json::array();
  json derived = json::array();
  for (const auto& v : verdicts) {
    vs.push_back(verdict_to_json(v));
    collect_derived(v, "", derived);
  }
  j["results"] = vs;
  j["derived"] = derived;
  j["payload"] = payload;
  j["exit_code"] = exit_code;
  return j;
}

void RunReport::render_text(std::ostream& out) const {
  out << "relmod";
  for (const auto& a : invocation) out << " " << a;
  out << "\n";
  for (const auto& line : text) out << line << "\n";
  for (const auto& v : verdicts) render_verdict(v, out);
  out << "exit " << exit_code << "\n";
}

}  // namespace relmod::cli
