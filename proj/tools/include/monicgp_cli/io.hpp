#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "monicgp/gallery.hpp"

namespace monicgp::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; `path` names the file, `where` the offending JSON location.
class InputError : public Error {
 public:
  InputError(std::string path, std::string where, const std::string& what,
             std::vector<std::size_t> witness = {})
      : Error(what), path_(std::move(path)), where_(std::move(where)), witness_(std::move(witness)) {}
  const std::string& path() const { return path_; }
  const std::string& where() const { return where_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string path_, where_;
  std::vector<std::size_t> witness_;
};

/// Loads files once per canonical path so that references resolve to shared objects.
class Loader {
 public:
  AlgebraPtr algebra(const std::string& path);
  /// algebra_override replaces the module's own algebra_ref.
  Module module(const std::string& path, const std::string& algebra_override = "");
  Quiver quiver(const std::string& path);
  Bimodule bimodule(const std::string& path);
  Json read(const std::string& path);
  /// ref resolved against the directory of `from`.
  static std::string resolve(const std::string& from, const std::string& ref);
  std::string algebra_path_of(const std::string& module_path);

 private:
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, Module> modules_;
};

Scalar parse_scalar(const Field& f, const Json& j, const std::string& path, const std::string& where);
Matrix parse_sparse(const Field& f, const Json& j, std::size_t rows, std::size_t cols,
                    const std::string& path, const std::string& where);
AlgebraPresentation parse_algebra(const Json& j, const std::string& path);
Quiver parse_quiver(const Json& j, const std::string& path);

Json sparse_json(const Matrix& m);
Json vec_json(const Vec& v);
Json algebra_json(const Algebra& a);
/// algebra_ref null when empty.
Json module_json(const Module& m, const std::string& algebra_ref);
Json verdict_json(const Verdict& v);
Json classification_json(const ClassificationReport& r);
Json triple_report_json(const TripleReport& r);
Json scenario_json(const ScenarioReport& r);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace monicgp::cli
