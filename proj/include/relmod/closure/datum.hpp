#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relmod/catmodel/degree.hpp"

namespace relmod::closure {

using catmodel::Degree;
using catmodel::GradingSpec;

inline constexpr const char* kClosureSchema = "relmod-closure/1";

struct Atom {
  std::string name;
  std::optional<Degree> degree;
  std::string dual;
  /// Asserted strong decomposition.
  bool strong = false;
  /// Unset when negligibility is unknown.
  std::optional<bool> negligible;
  bool operator==(const Atom&) const = default;
};

/// retract-of(atom (x) v^power)
struct RetractTerm {
  std::string atom;
  long power = 0;
  bool operator==(const RetractTerm&) const = default;
};

/// left (x) right = direct sum of the rhs terms.
struct ProductRule {
  std::string left;
  std::string right;
  std::vector<RetractTerm> rhs;
  bool operator==(const ProductRule&) const = default;
};

/// atom (x) v^n has strong decomposition for n in `exponents`, or for
/// every n >= 1 when `exponents` is unset.
struct PowerRule {
  std::string atom;
  std::optional<std::vector<long>> exponents;
  bool covers(long n) const;
  bool operator==(const PowerRule&) const = default;
};

struct ClosureDatum {
  std::string name;
  std::optional<GradingSpec> grading;
  /// Every declared atom, including the distinguished one.
  std::vector<Atom> atoms;
  std::optional<std::string> v;
  /// Largest power of v the conditions are checked up to.
  long bound = 3;
  std::vector<ProductRule> products;
  std::vector<PowerRule> powers;

  const Atom* find(const std::string& name) const;
  /// Declared atoms other than v, in declaration order.
  std::vector<std::string> base_atoms() const;
  /// Sum of factor degrees, or nullopt without grading.
  std::optional<Degree> degree_of(const std::vector<std::string>& word) const;
  /// Index of the product rule for {a, b} in either order, or -1.
  long find_product(const std::string& a, const std::string& b) const;
  /// Index of the first power rule covering atom (x) v^n, or -1.
  long find_power(const std::string& atom, long n) const;

  bool operator==(const ClosureDatum&) const = default;
};

/// Structural or invariant problem; `path` is a JSON pointer.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Parses and validates: names unique, references declared, duals
/// declared with negated degree, rule degrees additive.
ClosureDatum parse_closure_datum(const nlohmann::json& doc);
nlohmann::json closure_to_json(const ClosureDatum& d);
ClosureDatum load_closure(const std::filesystem::path& path);

}  // namespace relmod::closure
