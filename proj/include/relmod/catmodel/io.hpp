#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "relmod/catmodel/datum.hpp"

namespace relmod::catmodel {

inline constexpr const char* kDatumSchema = "relmod-datum/1";

/// Structural problem in a datum document; `path` is a JSON pointer.
class SchemaError : public DatumError {
 public:
  SchemaError(std::string path, const std::string& what)
      : DatumError(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Raised by strict loading when validate() reports issues.
class InvariantError : public DatumError {
 public:
  explicit InvariantError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

struct LoadOptions {
  /// Throw InvariantError when validate() is not empty.
  bool strict = true;
};

/// The "grading" object shared by datum and closure documents.
GradingSpec grading_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json grading_to_json(const GradingSpec& gr);

ModularDatum datum_from_json(const nlohmann::json& doc, LoadOptions opts = {});
nlohmann::json datum_to_json(const ModularDatum& datum);

ModularDatum load_datum(const std::filesystem::path& path, LoadOptions opts = {});
void save_datum(const ModularDatum& datum, const std::filesystem::path& path);

/// Reads a JSON file; throws SchemaError with path "" on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace relmod::catmodel
