#include "relmod/closure/datum.hpp"

#include <algorithm>
#include <set>

#include "relmod/catmodel/io.hpp"

namespace relmod::closure {

using nlohmann::json;

bool PowerRule::covers(long n) const {
  if (n < 1) return false;
  return !exponents || std::find(exponents->begin(), exponents->end(), n) != exponents->end();
}

const Atom* ClosureDatum::find(const std::string& name) const {
  for (const auto& a : atoms)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::string> ClosureDatum::base_atoms() const {
  std::vector<std::string> out;
  for (const auto& a : atoms)
    if (!v || a.name != *v) out.push_back(a.name);
  return out;
}

std::optional<Degree> ClosureDatum::degree_of(const std::vector<std::string>& word) const {
  if (!grading) return std::nullopt;
  Degree total = grading->zero();
  for (const auto& w : word) {
    const Atom* a = find(w);
    if (a == nullptr || !a->degree) return std::nullopt;
    total = grading->add(total, *a->degree);
  }
  return total;
}

long ClosureDatum::find_product(const std::string& a, const std::string& b) const {
  for (std::size_t i = 0; i < products.size(); ++i) {
    const auto& r = products[i];
    if ((r.left == a && r.right == b) || (r.left == b && r.right == a)) return static_cast<long>(i);
  }
  return -1;
}

long ClosureDatum::find_power(const std::string& atom, long n) const {
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i].atom == atom && powers[i].covers(n)) return static_cast<long>(i);
  return -1;
}

namespace {

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ClosureError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ClosureError(path + "/" + key, "required field missing");
  return *it;
}

const json* optional(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) throw ClosureError(path, "expected a string");
  return j.get<std::string>();
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ClosureError(path, "expected an integer");
  return j.get<long>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ClosureError(path, "expected an array");
  return j;
}

void validate(const ClosureDatum& d) {
  const auto declared = [&](const std::string& name, const std::string& path) {
    if (d.find(name) == nullptr) throw ClosureError(path, "undeclared atom '" + name + "'");
  };
  std::set<std::string> names;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    const std::string p = "/atoms/" + std::to_string(i);
    const Atom& a = d.atoms[i];
    if (!names.insert(a.name).second) throw ClosureError(p + "/name", "duplicate atom '" + a.name + "'");
    if (d.grading && !a.degree) throw ClosureError(p + "/degree", "required when a grading is given");
  }
  if (d.v) declared(*d.v, "/v");
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    const Atom& a = d.atoms[i];
    const std::string p = "/atoms/" + std::to_string(i) + "/dual";
    declared(a.dual, p);
    if (d.grading && d.grading->negate(*a.degree) != *d.find(a.dual)->degree)
      throw ClosureError(p, "dual of '" + a.name + "' must have the negated degree");
  }
  for (std::size_t i = 0; i < d.products.size(); ++i) {
    const std::string p = "/rules/products/" + std::to_string(i);
    const ProductRule& r = d.products[i];
    declared(r.left, p + "/left");
    declared(r.right, p + "/right");
    const auto lhs = d.degree_of({r.left, r.right});
    for (std::size_t t = 0; t < r.rhs.size(); ++t) {
      const std::string tp = p + "/rhs/" + std::to_string(t);
      declared(r.rhs[t].atom, tp + "/atom");
      if (r.rhs[t].power < 0) throw ClosureError(tp + "/power", "must be >= 0");
      if (d.grading) {
        std::vector<std::string> word(static_cast<std::size_t>(r.rhs[t].power), d.v.value_or(""));
        word.push_back(r.rhs[t].atom);
        if (r.rhs[t].power > 0 && !d.v) throw ClosureError(tp + "/power", "v powers need a distinguished atom");
        if (d.degree_of(word) != lhs) throw ClosureError(tp, "degree of the term differs from the degree of the product");
      }
    }
  }
  for (std::size_t i = 0; i < d.powers.size(); ++i) {
    const std::string p = "/rules/powers/" + std::to_string(i);
    declared(d.powers[i].atom, p + "/atom");
    if (!d.v) throw ClosureError(p, "power rules need a distinguished atom");
  }
}

}  // namespace

ClosureDatum parse_closure_datum(const json& doc) {
  const std::string schema = str(field(doc, "", "schema"), "/schema");
  if (schema != kClosureSchema) throw ClosureError("/schema", "unsupported schema '" + schema + "'");
  ClosureDatum d;
  if (const json* n = optional(doc, "name")) d.name = str(*n, "/name");
  if (const json* g = optional(doc, "grading")) {
    try {
      d.grading = catmodel::grading_from_json(*g, "/grading");
    } catch (const catmodel::SchemaError& e) {
      throw ClosureError(e.path(), e.what());
    }
  }
  if (const json* b = optional(doc, "bound")) d.bound = integer(*b, "/bound");
  if (d.bound < 0) throw ClosureError("/bound", "must be >= 0");

  const json& atoms = array(field(doc, "", "atoms"), "/atoms");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = "/atoms/" + std::to_string(i);
    Atom a;
    a.name = str(field(atoms[i], p, "name"), p + "/name");
    a.dual = a.name;
    if (const json* x = optional(atoms[i], "dual")) a.dual = str(*x, p + "/dual");
    if (const json* x = optional(atoms[i], "strong")) {
      if (!x->is_boolean()) throw ClosureError(p + "/strong", "expected a boolean");
      a.strong = x->get<bool>();
    }
    if (const json* x = optional(atoms[i], "negligible")) {
      if (!x->is_boolean()) throw ClosureError(p + "/negligible", "expected a boolean");
      a.negligible = x->get<bool>();
    }
    if (const json* x = optional(atoms[i], "degree")) {
      if (!d.grading) throw ClosureError(p + "/degree", "degree given without a grading");
      try {
        a.degree = d.grading->parse(str(*x, p + "/degree"));
      } catch (const catmodel::DatumError& e) {
        throw ClosureError(p + "/degree", e.what());
      }
    }
    d.atoms.push_back(std::move(a));
  }
  if (const json* v = optional(doc, "v")) d.v = str(*v, "/v");

  if (const json* rules = optional(doc, "rules")) {
    if (const json* ps = optional(*rules, "products")) {
      const json& a = array(*ps, "/rules/products");
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = "/rules/products/" + std::to_string(i);
        ProductRule r;
        r.left = str(field(a[i], p, "left"), p + "/left");
        r.right = str(field(a[i], p, "right"), p + "/right");
        const json& rhs = array(field(a[i], p, "rhs"), p + "/rhs");
        for (std::size_t t = 0; t < rhs.size(); ++t) {
          const std::string tp = p + "/rhs/" + std::to_string(t);
          RetractTerm term;
          term.atom = str(field(rhs[t], tp, "atom"), tp + "/atom");
          if (const json* pw = optional(rhs[t], "power")) term.power = integer(*pw, tp + "/power");
          r.rhs.push_back(term);
        }
        d.products.push_back(std::move(r));
      }
    }
    if (const json* ps = optional(*rules, "powers")) {
      const json& a = array(*ps, "/rules/powers");
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = "/rules/powers/" + std::to_string(i);
        PowerRule r;
        r.atom = str(field(a[i], p, "atom"), p + "/atom");
        const json& ex = field(a[i], p, "exponents");
        if (ex.is_string()) {
          if (ex.get<std::string>() != "all") throw ClosureError(p + "/exponents", "expected \"all\" or a list");
        } else {
          std::vector<long> list;
          const json& arr = array(ex, p + "/exponents");
          for (std::size_t k = 0; k < arr.size(); ++k) list.push_back(integer(arr[k], p + "/exponents/" + std::to_string(k)));
          r.exponents = std::move(list);
        }
        d.powers.push_back(std::move(r));
      }
    }
  }
  validate(d);
  return d;
}

json closure_to_json(const ClosureDatum& d) {
  json doc;
  doc["schema"] = kClosureSchema;
  if (!d.name.empty()) doc["name"] = d.name;
  if (d.grading) doc["grading"] = catmodel::grading_to_json(*d.grading);
  doc["bound"] = d.bound;
  json atoms = json::array();
  for (const auto& a : d.atoms) {
    json j{{"name", a.name}, {"dual", a.dual}, {"strong", a.strong}};
    if (a.degree) j["degree"] = d.grading->format(*a.degree);
    if (a.negligible) j["negligible"] = *a.negligible;
    atoms.push_back(j);
  }
  doc["atoms"] = atoms;
  if (d.v) doc["v"] = *d.v;
  json products = json::array();
  for (const auto& r : d.products) {
    json rhs = json::array();
    for (const auto& t : r.rhs) rhs.push_back({{"atom", t.atom}, {"power", t.power}});
    products.push_back({{"left", r.left}, {"right", r.right}, {"rhs", rhs}});
  }
  json powers = json::array();
  for (const auto& r : d.powers) {
    json j{{"atom", r.atom}};
    if (r.exponents) {
      j["exponents"] = *r.exponents;
    } else {
      j["exponents"] = "all";
    }
    powers.push_back(j);
  }
  doc["rules"] = {{"products", products}, {"powers", powers}};
  return doc;
}

ClosureDatum load_closure(const std::filesystem::path& path) {
  try {
    return parse_closure_datum(catmodel::read_json_file(path));
  } catch (const catmodel::SchemaError& e) {
    throw ClosureError(e.path(), e.what());
  }
}

}  // namespace relmod::closure
