#include "relmod/catmodel/io.hpp"

#include <fstream>
#include <set>

namespace relmod::catmodel {

using nlohmann::json;

InvariantError::InvariantError(std::vector<Issue> issues)
    : DatumError(issues.empty() ? std::string("datum invariant violated")
                                : issues.front().clause + ": " + issues.front().detail),
      issues_(std::move(issues)) {}

namespace {

class Reader {
 public:
  const json& field(const json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "/" + key, "required field missing");
    return *it;
  }

  const json* optional(const json& obj, const char* key) const {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
  }

  long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<long>();
  }

  bool boolean(const json& j, const std::string& path) const {
    if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
    return j.get<bool>();
  }

  CycScalar scalar(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return CycScalar(j.get<long>());
    if (!j.is_string()) throw SchemaError(path, "expected a scalar string");
    try {
      return exactnum::parse_scalar(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }

  Degree degree(const GradingSpec& gr, const json& j, const std::string& path) const {
    try {
      return gr.parse(string(j, path));
    } catch (const SchemaError&) {
      throw;
    } catch (const DatumError& e) {
      throw SchemaError(path, e.what());
    }
  }

  std::vector<long> long_list(const json& j, const std::string& path) const {
    std::vector<long> out;
    const json& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(integer(a[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<CycScalar> scalar_list(const json& j, const std::string& path, std::size_t expected) const {
    const json& a = array(j, path);
    if (a.size() != expected) {
      throw SchemaError(path, "expected " + std::to_string(expected) + " entries, got " + std::to_string(a.size()));
    }
    std::vector<CycScalar> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scalar(a[i], path + "/" + std::to_string(i)));
    return out;
  }
};

GradingSpec read_grading(const Reader& rd, const json& j, const std::string& path) {
  GradingSpec gr;
  if (const json* c = rd.optional(j, "cyclic")) gr.cyclic_orders = rd.long_list(*c, path + "/cyclic");
  for (std::size_t i = 0; i < gr.cyclic_orders.size(); ++i)
    if (gr.cyclic_orders[i] < 0) throw SchemaError(path + "/cyclic/" + std::to_string(i), "order must be >= 0");
  if (const json* t = rd.optional(j, "torus")) gr.torus = rd.boolean(*t, path + "/torus");
  if (gr.cyclic_orders.empty() && !gr.torus) throw SchemaError(path, "grading group is trivial");
  const std::string xp = path + "/small_subset";
  const json& x = rd.field(j, path, "small_subset");
  if (const json* rule = rd.optional(x, "rule")) {
    if (rd.string(*rule, xp + "/rule") != "torsion") throw SchemaError(xp + "/rule", "unknown rule (expected \"torsion\")");
    gr.rule = GradingSpec::SubsetRule::torsion;
  } else {
    const json& els = rd.array(rd.field(x, xp, "elements"), xp + "/elements");
    for (std::size_t i = 0; i < els.size(); ++i)
      gr.small_subset.push_back(rd.degree(gr, els[i], xp + "/elements/" + std::to_string(i)));
  }
  return gr;
}

TranslationElement read_element(const Reader& rd, const TranslationSpec& tr, const json& j, const std::string& path) {
  TranslationElement k = rd.long_list(j, path);
  if (k.size() != tr.cyclic_orders.size()) {
    throw SchemaError(path, "expected " + std::to_string(tr.cyclic_orders.size()) + " component(s)");
  }
  return tr.normalized(std::move(k));
}

TranslationSpec read_translation(const Reader& rd, const GradingSpec& gr, const json& j, const std::string& path) {
  TranslationSpec tr;
  tr.cyclic_orders = rd.long_list(rd.field(j, path, "cyclic"), path + "/cyclic");
  if (const json* q = rd.optional(j, "quantum_dimension")) {
    const json& a = rd.array(*q, path + "/quantum_dimension");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = path + "/quantum_dimension/" + std::to_string(i);
      tr.quantum_dimension.push_back(
          {read_element(rd, tr, rd.field(a[i], p, "k"), p + "/k"), rd.scalar(rd.field(a[i], p, "value"), p + "/value")});
    }
  }
  if (const json* ps = rd.optional(j, "psi")) {
    const json& a = rd.array(*ps, path + "/psi");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = path + "/psi/" + std::to_string(i);
      tr.psi.push_back({rd.degree(gr, rd.field(a[i], p, "g"), p + "/g"),
                        read_element(rd, tr, rd.field(a[i], p, "k"), p + "/k"),
                        rd.scalar(rd.field(a[i], p, "value"), p + "/value")});
    }
  }
  if (const json* n = rd.optional(j, "no_self_extension")) tr.no_self_extension = rd.boolean(*n, path + "/no_self_extension");
  return tr;
}

DegreeData read_degree(const Reader& rd, const GradingSpec& gr, const json& j, const std::string& path) {
  DegreeData d;
  d.g = rd.degree(gr, rd.field(j, path, "g"), path + "/g");
  const json& labels = rd.array(rd.field(j, path, "labels"), path + "/labels");
  if (labels.empty()) throw SchemaError(path + "/labels", "index set must not be empty");
  for (std::size_t i = 0; i < labels.size(); ++i) d.labels.push_back(rd.string(labels[i], path + "/labels/" + std::to_string(i)));
  d.dims = rd.scalar_list(rd.field(j, path, "dims"), path + "/dims", d.size());
  if (const json* t = rd.optional(j, "twists")) d.twists = rd.scalar_list(*t, path + "/twists", d.size());
  if (const json* du = rd.optional(j, "dual")) {
    std::vector<long> raw = rd.long_list(*du, path + "/dual");
    if (raw.size() != d.size()) throw SchemaError(path + "/dual", "expected " + std::to_string(d.size()) + " entries");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] < 0) throw SchemaError(path + "/dual/" + std::to_string(i), "negative index");
      idx.push_back(static_cast<std::size_t>(raw[i]));
    }
    d.dual = std::move(idx);
  }
  return d;
}

}  // namespace

ModularDatum datum_from_json(const json& doc, LoadOptions opts) {
  Reader rd;
  const std::string schema = rd.string(rd.field(doc, "", "schema"), "/schema");
  if (schema != kDatumSchema) throw SchemaError("/schema", "unsupported schema '" + schema + "'");

  ModularDatum d;
  if (const json* n = rd.optional(doc, "name")) d.name = rd.string(*n, "/name");
  d.grading = read_grading(rd, rd.field(doc, "", "grading"), "/grading");
  d.translation = read_translation(rd, d.grading, rd.field(doc, "", "translation"), "/translation");

  const json& degs = rd.array(rd.field(doc, "", "degrees"), "/degrees");
  for (std::size_t i = 0; i < degs.size(); ++i) {
    const std::string p = "/degrees/" + std::to_string(i);
    DegreeData dd = read_degree(rd, d.grading, degs[i], p);
    if (d.find(dd.g) != nullptr) throw SchemaError(p + "/g", "duplicate degree");
    d.degrees.push_back(std::move(dd));
  }

  if (const json* sp = rd.optional(doc, "sprime")) {
    const json& a = rd.array(*sp, "/sprime");
    for (std::size_t b = 0; b < a.size(); ++b) {
      const std::string p = "/sprime/" + std::to_string(b);
      const Degree g = rd.degree(d.grading, rd.field(a[b], p, "g"), p + "/g");
      const Degree h = rd.degree(d.grading, rd.field(a[b], p, "h"), p + "/h");
      const DegreeData* dg = d.find(g);
      const DegreeData* dh = d.find(h);
      if (dg == nullptr) throw SchemaError(p + "/g", "degree not listed in /degrees");
      if (dh == nullptr) throw SchemaError(p + "/h", "degree not listed in /degrees");
      const json& rows = rd.array(rd.field(a[b], p, "matrix"), p + "/matrix");
      if (rows.size() != dg->size()) throw SchemaError(p + "/matrix", "expected " + std::to_string(dg->size()) + " rows");
      ExactMatrix m(dg->size(), dh->size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto row = rd.scalar_list(rows[r], p + "/matrix/" + std::to_string(r), dh->size());
        for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = std::move(row[c]);
      }
      if (!d.sprime.emplace(BlockKey{g, h}, std::move(m)).second) throw SchemaError(p, "duplicate block");
    }
  }

  if (const json* fu = rd.optional(doc, "fusion")) {
    const json& a = rd.array(*fu, "/fusion");
    std::vector<FusionEntry> entries;
    for (std::size_t e = 0; e < a.size(); ++e) {
      const std::string p = "/fusion/" + std::to_string(e);
      FusionEntry f;
      f.g1 = rd.degree(d.grading, rd.field(a[e], p, "g1"), p + "/g1");
      f.g2 = rd.degree(d.grading, rd.field(a[e], p, "g2"), p + "/g2");
      auto index = [&](const char* key, std::size_t bound) {
        long v = rd.integer(rd.field(a[e], p, key), p + "/" + key);
        if (v < 0 || static_cast<std::size_t>(v) >= bound) throw SchemaError(p + "/" + key, "index out of range");
        return static_cast<std::size_t>(v);
      };
      const DegreeData* d1 = d.find(f.g1);
      const DegreeData* d2 = d.find(f.g2);
      if (d1 == nullptr) throw SchemaError(p + "/g1", "degree not listed in /degrees");
      if (d2 == nullptr) throw SchemaError(p + "/g2", "degree not listed in /degrees");
      f.i1 = index("i1", d1->size());
      f.i2 = index("i2", d2->size());
      const DegreeData* d3 = d.find(d.grading.add(f.g1, f.g2));
      f.i3 = index("i3", d3 ? d3->size() : 0);
      f.coefficient = rd.integer(rd.field(a[e], p, "c"), p + "/c");
      if (f.coefficient < 0) throw SchemaError(p + "/c", "fusion coefficient must be non-negative");
      entries.push_back(std::move(f));
    }
    d.fusion = std::move(entries);
  }

  if (const json* n = rd.optional(doc, "orbit_count")) {
    d.orbit_count = rd.integer(*n, "/orbit_count");
    if (*d.orbit_count < 1) throw SchemaError("/orbit_count", "must be positive");
  }
  if (const json* ph = rd.optional(doc, "placeholders")) {
    const json& a = rd.array(*ph, "/placeholders");
    for (std::size_t i = 0; i < a.size(); ++i) d.placeholders.push_back(rd.string(a[i], "/placeholders/" + std::to_string(i)));
  }

  if (opts.strict) {
    auto issues = validate(d);
    if (!issues.empty()) throw InvariantError(std::move(issues));
  }
  return d;
}

GradingSpec grading_from_json(const json& j, const std::string& path) { return read_grading(Reader{}, j, path); }

json grading_to_json(const GradingSpec& gr) {
  json grading;
  grading["cyclic"] = gr.cyclic_orders;
  grading["torus"] = gr.torus;
  if (gr.rule == GradingSpec::SubsetRule::torsion) {
    grading["small_subset"] = {{"rule", "torsion"}};
  } else {
    json els = json::array();
    for (const auto& x : gr.small_subset) els.push_back(gr.format(x));
    grading["small_subset"] = {{"elements", els}};
  }
  return grading;
}

json datum_to_json(const ModularDatum& d) {
  const GradingSpec& gr = d.grading;
  json doc;
  doc["schema"] = kDatumSchema;
  if (!d.name.empty()) doc["name"] = d.name;

  doc["grading"] = grading_to_json(gr);

  json tr;
  tr["cyclic"] = d.translation.cyclic_orders;
  json qd = json::array();
  for (const auto& q : d.translation.quantum_dimension) qd.push_back({{"k", q.k}, {"value", exactnum::to_string(q.value)}});
  tr["quantum_dimension"] = qd;
  json psi = json::array();
  for (const auto& p : d.translation.psi)
    psi.push_back({{"g", gr.format(p.g)}, {"k", p.k}, {"value", exactnum::to_string(p.value)}});
  tr["psi"] = psi;
  if (d.translation.no_self_extension) tr["no_self_extension"] = *d.translation.no_self_extension;
  doc["translation"] = tr;

  auto scalars = [](const std::vector<CycScalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(exactnum::to_string(s));
    return a;
  };
  json degs = json::array();
  for (const auto& dd : d.degrees) {
    json e;
    e["g"] = gr.format(dd.g);
    e["labels"] = dd.labels;
    e["dims"] = scalars(dd.dims);
    if (dd.twists) e["twists"] = scalars(*dd.twists);
    if (dd.dual) e["dual"] = *dd.dual;
    degs.push_back(e);
  }
  doc["degrees"] = degs;

  json blocks = json::array();
  for (const auto& [key, m] : d.sprime) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exactnum::to_string(m(r, c)));
      rows.push_back(row);
    }
    blocks.push_back({{"g", gr.format(key.first)}, {"h", gr.format(key.second)}, {"matrix", rows}});
  }
  doc["sprime"] = blocks;

  if (d.fusion) {
    json fu = json::array();
    for (const auto& f : *d.fusion)
      fu.push_back({{"g1", gr.format(f.g1)}, {"i1", f.i1}, {"g2", gr.format(f.g2)}, {"i2", f.i2}, {"i3", f.i3},
                    {"c", f.coefficient}});
    doc["fusion"] = fu;
  }
  if (d.orbit_count) doc["orbit_count"] = *d.orbit_count;
  if (!d.placeholders.empty()) doc["placeholders"] = d.placeholders;
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

ModularDatum load_datum(const std::filesystem::path& path, LoadOptions opts) {
  return datum_from_json(read_json_file(path), opts);
}

void save_datum(const ModularDatum& datum, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DatumError("cannot write '" + path.string() + "'");
  out << datum_to_json(datum).dump(2) << '\n';
}

}  // namespace relmod::catmodel
