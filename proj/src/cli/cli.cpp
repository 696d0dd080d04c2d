#include "relmod/cli/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <sstream>

#include "relmod/catmodel/io.hpp"
#include "relmod/checks/checks.hpp"
#include "relmod/cli/report.hpp"
#include "relmod/closure/engine.hpp"
#include "relmod/sl21/rank_bound.hpp"
#include "relmod/sl21/relations.hpp"

namespace relmod::cli {

using nlohmann::json;

namespace {

/// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string datum;
  std::string format = "text";
  bool allow_unmet = false;

  std::string g, h;
  int ell = 3;
  int k = 1;
  long i = 0;
  bool odd = false;
  std::string convention;
  std::string out_path;
  int cor = 1;
  std::string expr;
  int depth = 3;
};

void apply_thread_cap() {
  const char* env = std::getenv("RELMOD_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError(std::string("RELMOD_THREADS must be a positive integer, got '") + env + "'");
  omp_set_num_threads(static_cast<int>(n));
}

std::string require_datum(const Options& o) {
  if (o.datum.empty()) throw UsageError("--datum is required for this command");
  return o.datum;
}

catmodel::ModularDatum load(const Options& o, bool strict) {
  return catmodel::load_datum(require_datum(o), catmodel::LoadOptions{strict});
}

catmodel::Degree degree(const catmodel::ModularDatum& d, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  catmodel::Degree g;
  try {
    g = d.grading.parse(text);
  } catch (const catmodel::DatumError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (d.find(g) == nullptr) throw UsageError(std::string(flag) + ": unknown degree '" + text + "'");
  return g;
}

json label_json(const sl21::WeightLabel& l) {
  return {{"k", l.k}, {"shift", l.shift}, {"odd", l.odd}, {"text", sl21::to_string(l)}};
}

sl21::Convention parse_convention(const std::string& s) {
  if (s.empty()) return sl21::default_convention();
  if (s == "original") return sl21::Convention::original;
  if (s == "corrected") return sl21::Convention::corrected;
  throw UsageError("--convention must be 'original' or 'corrected'");
}

void cmd_check(const std::string& which, const Options& o, RunReport& r) {
  const bool lenient = which == "premodular" || which == "all";
  const catmodel::ModularDatum d = load(o, !lenient);
  if (which == "nondeg") {
    r.verdicts.push_back(checks::check_nondegeneracy(d, degree(d, o.g, "--g")));
  } else if (which == "dmug") {
    r.verdicts.push_back(checks::check_dmug(d, degree(d, o.g, "--g")));
  } else if (which == "modularity") {
    const auto g = degree(d, o.g, "--g");
    const auto h = o.h.empty() ? g : degree(d, o.h, "--h");
    r.verdicts.push_back(checks::check_relative_modularity(d, g, h));
  } else if (which == "rank-constancy") {
    r.verdicts.push_back(checks::check_rank_constancy(d));
  } else if (which == "premodular") {
    r.verdicts.push_back(checks::check_premodular_inputs(d));
  } else {
    r.verdicts.push_back(checks::check_all(d));
  }
  r.payload["datum"] = d.name;
  if (!d.placeholders.empty()) r.payload["placeholders"] = d.placeholders;
}

void cmd_sl21_emit(const Options& o, RunReport& r, std::ostream& out, bool& printed) {
  const catmodel::ModularDatum d = sl21::emit_datum(o.ell);
  if (o.out_path.empty()) {
    out << catmodel::datum_to_json(d).dump(2) << "\n";
    printed = true;
    return;
  }
  catmodel::save_datum(d, o.out_path);
  r.payload = {{"ell", o.ell}, {"out", o.out_path}, {"index_size", d.degrees.front().size()}, {"placeholders", d.placeholders}};
  r.text.push_back("wrote " + o.out_path + " (" + std::to_string(d.degrees.front().size()) + " labels per degree)");
  r.text.push_back("placeholders: " + [&] {
    std::string s;
    for (const auto& p : d.placeholders) s += (s.empty() ? "" : ", ") + p;
    return s;
  }());
}

void cmd_sl21_relations(const Options& o, RunReport& r) {
  const sl21::Convention c = parse_convention(o.convention);
  const sl21::WeightModuleRep rep = sl21::build_Ak(o.k, o.ell, c);
  std::vector<long> h1, h2;
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    h1.push_back(rep.weight(1, b));
    h2.push_back(rep.weight(2, b));
  }
  r.payload = {{"ell", o.ell}, {"k", o.k}, {"convention", sl21::to_string(c)}, {"dim", rep.dim()},
               {"basis", rep.labels}, {"H1", h1}, {"H2", h2}};
  r.text.push_back("A_" + std::to_string(o.k) + " at ell=" + std::to_string(o.ell) + ", convention " + sl21::to_string(c) +
                   ", dim " + std::to_string(rep.dim()));
  r.verdicts.push_back(sl21::check_relations(rep));
}

void cmd_sl21_fuse(const Options& o, RunReport& r) {
  const sl21::WeightLabel in{o.k, o.i, o.odd, 0, 1};
  const sl21::WeightLabel f = sl21::fuse_A(in, o.ell);
  const auto d = sl21::decompose_typical(sl21::closed_form_Ak(o.ell - 1) * sl21::character_of_label(in, o.ell));
  const bool agrees =
      d.ok && sl21::reduce_modulo_negligible(d.labels, o.ell).kept == std::vector<sl21::LabelCount>{{f, 1}};
  r.payload = {{"ell", o.ell}, {"input", label_json(in)}, {"output", label_json(f)}};
  r.text.push_back("A * " + sl21::to_string(in) + " = " + sl21::to_string(f));
  checks::Verdict v = checks::make_verdict("fuse", agrees ? checks::Status::holds : checks::Status::fails,
                                           agrees ? "agrees with the character decomposition"
                                                  : "differs from the character decomposition");
  v.witnesses.push_back({"output", {f.k, f.shift, f.odd ? 1L : 0L}, exactnum::CycScalar(1L)});
  v.internal_inconsistency = !agrees;
  r.verdicts.push_back(std::move(v));
}

void cmd_sl21_rank_bound(const Options& o, RunReport& r) {
  const sl21::RankBoundReport rb = sl21::rank_bound_analysis(o.ell);
  json classes = json::array();
  for (const auto& p : rb.classes)
    classes.push_back({{"first", label_json(p.first)}, {"second", label_json(p.second)}, {"wraps", p.wraps},
                       {"factor", exactnum::to_string(p.factor)}});
  r.payload = {{"ell", rb.ell},
               {"classes", classes},
               {"bound", rb.bound},
               {"index_count", rb.index_count},
               {"fixed_point_free", rb.fixed_point_free},
               {"double_fusion_identity", rb.double_fusion_identity},
               {"open_questions", rb.open_questions}};
  r.text.push_back("ell = " + std::to_string(rb.ell));
  r.text.push_back("classes = " + std::to_string(rb.bound) + " (index set size " + std::to_string(rb.index_count) + ")");
  r.text.push_back(std::string("involution fixed-point-free: ") + (rb.fixed_point_free ? "yes" : "no"));
  r.text.push_back("bound = " + std::to_string(rb.bound));
  for (const auto& p : rb.classes)
    r.text.push_back("  " + sl21::to_string(p.first) + " ~ " + sl21::to_string(p.second) +
                     "  factor " + exactnum::to_string(p.factor));
  r.text.push_back("open questions:");
  for (const auto& q : rb.open_questions) r.text.push_back("  - " + q);
  r.verdicts.push_back(rb.verdict);
}

closure::ClosureDatum load_closure(const Options& o) { return closure::load_closure(require_datum(o)); }

void cmd_closure_check(const Options& o, RunReport& r) {
  const closure::ClosureDatum d = load_closure(o);
  if (o.cor != 1 && o.cor != 2) throw UsageError("--cor must be 1 or 2");
  r.verdicts.push_back(o.cor == 1 ? closure::check_cor1(d) : closure::check_cor2(d));
  r.payload = {{"datum", d.name}, {"cor", o.cor}};
}

void cmd_closure_certify(const Options& o, RunReport& r) {
  const closure::ClosureDatum d = load_closure(o);
  if (o.expr.empty()) throw UsageError("--expr is required");
  if (o.depth < 0) throw UsageError("--depth must be >= 0");
  closure::Expr e;
  try {
    e = closure::parse_expr(o.expr);
  } catch (const closure::ExprError& ex) {
    throw UsageError(ex.what());
  }
  const closure::CertifyResult res = closure::certify(d, e, o.depth);
  using S = closure::CertifyResult::Status;
  r.payload = {{"datum", d.name}, {"expr", closure::to_string(e)}, {"depth", o.depth}, {"result", closure::to_string(res.status)}};
  checks::Verdict v;
  if (res.status == S::certified) {
    const closure::ReplayResult rp = closure::replay(d, *res.certificate);
    v = checks::make_verdict("certify", rp.ok ? checks::Status::holds : checks::Status::fails,
                             rp.ok ? "strong decomposition certified; replay ok" : "replay failed: " + rp.error);
    v.internal_inconsistency = !rp.ok;
    v.witnesses.push_back({"rewrites", {}, exactnum::CycScalar(res.certificate->rewrites)});
    v.notes.push_back("hypothesis: " + res.certificate->hypothesis);
    r.payload["hypothesis"] = res.certificate->hypothesis;
    r.payload["certificate"] = certificate_to_json(res.certificate->root);
    std::ostringstream tree;
    render_certificate(res.certificate->root, tree, 2);
    r.text.push_back("certificate (hypothesis " + res.certificate->hypothesis + "):");
    std::string line;
    std::istringstream lines(tree.str());
    while (std::getline(lines, line)) r.text.push_back(line);
  } else {
    const auto st = res.status == S::hypothesis_not_met ? checks::Status::hypothesis_not_met : checks::Status::fails;
    v = checks::make_verdict("certify", st, res.message);
    v.witnesses.push_back({res.status == S::depth_exhausted ? "depth_exhausted" : "stuck", {}, exactnum::CycScalar()});
    r.payload["stuck_at"] = res.stuck_at;
  }
  r.verdicts.push_back(std::move(v));
}

void cmd_closure_negligible(const Options& o, RunReport& r) {
  const closure::ClosureDatum d = load_closure(o);
  if (o.expr.empty()) throw UsageError("--expr is required");
  closure::Expr e;
  try {
    e = closure::parse_expr(o.expr);
  } catch (const closure::ExprError& ex) {
    throw UsageError(ex.what());
  }
  const auto n = closure::negligible_closure(d, e);
  r.payload = {{"datum", d.name}, {"expr", closure::to_string(e)}, {"negligibility", closure::to_string(n)}};
  r.text.push_back(closure::to_string(e) + ": " + closure::to_string(n));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decision procedures for relative modular data"};
  app.name("relmod");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--datum", o.datum, "datum or closure JSON file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--allow-unmet", o.allow_unmet, "exit 0 when a hypothesis is not met");

  auto* check = app.add_subcommand("check", "run a check on a datum");
  check->require_subcommand(1);
  std::string check_name;
  for (const char* name : {"nondeg", "dmug", "modularity", "rank-constancy", "premodular", "all"}) {
    auto* sub = check->add_subcommand(name);
    if (std::string(name) == "nondeg" || std::string(name) == "dmug" || std::string(name) == "modularity")
      sub->add_option("--g", o.g, "degree")->required();
    if (std::string(name) == "modularity") {
      sub->set_help_flag("--help", "Print this help message and exit");
      sub->add_option("--h", o.h, "second degree (default: g)");
    }
    sub->callback([&check_name, name] { check_name = name; });
  }

  auto* sl21cmd = app.add_subcommand("sl21", "sl(2|1) model");
  sl21cmd->require_subcommand(1);
  auto* emit = sl21cmd->add_subcommand("emit", "write the symbolic datum");
  emit->add_option("--ell", o.ell)->required();
  emit->add_option("--out", o.out_path, "output file (default: stdout)");
  auto* rel = sl21cmd->add_subcommand("relations", "check the defining relations on A_k");
  rel->add_option("--ell", o.ell)->required();
  rel->add_option("--k", o.k)->required();
  rel->add_option("--convention", o.convention)->check(CLI::IsMember({"original", "corrected"}));
  auto* fuse = sl21cmd->add_subcommand("fuse", "A tensor a typical label");
  fuse->add_option("--ell", o.ell)->required();
  fuse->add_option("--k", o.k)->required();
  fuse->add_option("--i", o.i)->required();
  fuse->add_flag("--odd", o.odd, "parity-shifted input");
  auto* rb = sl21cmd->add_subcommand("rank-bound", "S-matrix rank bound");
  rb->add_option("--ell", o.ell)->required();

  auto* clo = app.add_subcommand("closure", "strong decomposition engine");
  clo->require_subcommand(1);
  auto* cc = clo->add_subcommand("check", "closure conditions");
  cc->add_option("--cor", o.cor)->required();
  auto* cert = clo->add_subcommand("certify", "certify an expression");
  cert->add_option("--expr", o.expr)->required();
  cert->add_option("--depth", o.depth);
  auto* negl = clo->add_subcommand("negligible", "negligibility of an expression");
  negl->add_option("--expr", o.expr)->required();

  std::vector<std::string> argv_store{"relmod"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  RunReport report;
  report.invocation = args;
  bool printed = false;
  try {
    apply_thread_cap();
    if (check->parsed()) {
      cmd_check(check_name, o, report);
    } else if (emit->parsed()) {
      cmd_sl21_emit(o, report, out, printed);
    } else if (rel->parsed()) {
      cmd_sl21_relations(o, report);
    } else if (fuse->parsed()) {
      cmd_sl21_fuse(o, report);
    } else if (rb->parsed()) {
      cmd_sl21_rank_bound(o, report);
    } else if (cc->parsed()) {
      cmd_closure_check(o, report);
    } else if (cert->parsed()) {
      cmd_closure_certify(o, report);
    } else if (negl->parsed()) {
      cmd_closure_negligible(o, report);
    }
  } catch (const catmodel::SchemaError& e) {
    err << "error: malformed datum at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const catmodel::InvariantError& e) {
    err << "error: datum invariant violated: " << e.what() << "\n";
    for (const auto& issue : e.issues()) err << "  " << issue.clause << ": " << issue.detail << "\n";
    return kUsage;
  } catch (const closure::ClosureError& e) {
    err << "error: closure datum at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const catmodel::DatumError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  if (printed) return kOk;

  report.exit_code = report.compute_exit(o.allow_unmet);
  if (o.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    report.render_text(out);
  }
  return report.exit_code;
}

}  // namespace relmod::cli
