#include "monicgp_cli/io.hpp"

#include <fstream>
#include <sstream>

namespace monicgp::cli {

namespace fs = std::filesystem;

namespace {

std::string canonical(const std::string& path) {
  std::error_code ec;
  auto p = fs::weakly_canonical(fs::path(path), ec);
  return ec ? path : p.string();
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(path, key, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const std::string& path, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(path, where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Vec parse_dense(const Field& f, const Json& j, std::size_t n, const std::string& path,
                const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw InputError(path, where, "expected an array of " + std::to_string(n) + " scalars");
  Vec v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(parse_scalar(f, j[i], path, where + "[" + std::to_string(i) + "]"));
  return v;
}

Json dense_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["data"] = c.data;
  if (c.matrix) {
    j["rows"] = c.matrix->rows();
    j["cols"] = c.matrix->cols();
    j["matrix"] = sparse_json(*c.matrix);
  }
  return j;
}

Json data_json(const DataValue& d) {
  return std::visit([](const auto& x) { return Json(x); }, d);
}

}  // namespace

Scalar parse_scalar(const Field& f, const Json& j, const std::string& path, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
  } catch (const Error& e) {
    throw InputError(path, where, std::string("bad scalar: ") + e.what());
  }
  throw InputError(path, where, "scalars are strings such as \"3/4\"");
}

Matrix parse_sparse(const Field& f, const Json& j, std::size_t rows, std::size_t cols,
                    const std::string& path, const std::string& where) {
  if (!j.is_array()) throw InputError(path, where, "expected [[r, c, \"val\"], ...]");
  Matrix m(f, rows, cols);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    std::string at = where + "[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3) throw InputError(path, at, "expected [r, c, \"val\"]");
    std::size_t r = as_index(e[0], path, at), c = as_index(e[1], path, at);
    if (r >= rows || c >= cols)
      throw InputError(path, at, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    m(r, c) = parse_scalar(f, e[2], path, at);
  }
  return m;
}

AlgebraPresentation parse_algebra(const Json& j, const std::string& path) {
  AlgebraPresentation p;
  try {
    p.field = Field::parse(need(j, "field", path).get<std::string>());
  } catch (const Error& e) {
    throw InputError(path, "field", e.what());
  } catch (const nlohmann::json::exception&) {
    throw InputError(path, "field", "field must be a string such as \"Q\" or \"GF(7)\"");
  }
  p.dim = as_index(need(j, "dim", path), path, "dim");
  const auto& labels = need(j, "labels", path);
  if (!labels.is_array() || labels.size() != p.dim)
    throw InputError(path, "labels", "expected " + std::to_string(p.dim) + " labels");
  for (const auto& l : labels) {
    if (!l.is_string()) throw InputError(path, "labels", "labels are strings");
    p.labels.push_back(l.get<std::string>());
  }
  p.unit = parse_dense(p.field, need(j, "unit", path), p.dim, path, "unit");
  const auto& sc = need(j, "struct_consts", path);
  if (!sc.is_array()) throw InputError(path, "struct_consts", "expected [[i, j, k, \"val\"], ...]");
  for (std::size_t n = 0; n < sc.size(); ++n) {
    const auto& e = sc[n];
    std::string at = "struct_consts[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() != 4) throw InputError(path, at, "expected [i, j, k, \"val\"]");
    StructConst c{as_index(e[0], path, at), as_index(e[1], path, at), as_index(e[2], path, at),
                  parse_scalar(p.field, e[3], path, at)};
    if (c.i >= p.dim || c.j >= p.dim || c.k >= p.dim)
      throw InputError(path, at, "basis index out of range");
    p.struct_consts.push_back(std::move(c));
  }
  for (const char* key : {"idempotents", "radical_basis"}) {
    if (!j.contains(key) || j.at(key).is_null()) continue;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw InputError(path, key, "expected an array of vectors");
    std::vector<Vec> vs;
    for (std::size_t n = 0; n < arr.size(); ++n)
      vs.push_back(parse_dense(p.field, arr[n], p.dim, path, std::string(key) + "[" + std::to_string(n) + "]"));
    (std::string(key) == "idempotents" ? p.idempotents : p.radical_basis) = std::move(vs);
  }
  return p;
}

Quiver parse_quiver(const Json& j, const std::string& path) {
  Quiver q;
  const auto& vs = need(j, "vertices", path);
  if (!vs.is_array()) throw InputError(path, "vertices", "expected an array of names");
  for (const auto& v : vs) q.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  auto vertex = [&](const Json& v, const std::string& at) {
    std::string name = v.is_string() ? v.get<std::string>() : v.dump();
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
      if (q.vertices[i] == name) return i;
    throw InputError(path, at, "unknown vertex '" + name + "'");
  };
  const auto& as = need(j, "arrows", path);
  if (!as.is_array()) throw InputError(path, "arrows", "expected an array of {name, source, target}");
  for (std::size_t n = 0; n < as.size(); ++n) {
    std::string at = "arrows[" + std::to_string(n) + "]";
    const auto& a = as[n];
    q.arrows.push_back({need(a, "name", path).get<std::string>(), vertex(need(a, "source", path), at),
                        vertex(need(a, "target", path), at)});
  }
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      std::vector<std::string> rel;
      for (const auto& a : r) rel.push_back(a.get<std::string>());
      q.relations.push_back(std::move(rel));
    }
  }
  try {
    q.relation_indices();
  } catch (const Error& e) {
    throw InputError(path, "relations", e.what());
  }
  return q;
}

std::string Loader::resolve(const std::string& from, const std::string& ref) {
  fs::path r(ref);
  if (r.is_absolute()) return r.string();
  return (fs::path(from).parent_path() / r).string();
}

Json Loader::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "", "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path, "", std::string("invalid JSON: ") + e.what());
  }
}

AlgebraPtr Loader::algebra(const std::string& path) {
  auto key = canonical(path);
  if (auto it = algebras_.find(key); it != algebras_.end()) return it->second;
  auto p = parse_algebra(read(path), path);
  try {
    auto a = Algebra::validate(p);
    algebras_[key] = a;
    return a;
  } catch (const AlgebraError& e) {
    static const char* kinds[] = {"malformed", "associativity", "unit law", "idempotents", "radical"};
    throw InputError(path, kinds[static_cast<int>(e.kind())], e.what(), e.witness());
  }
}

std::string Loader::algebra_path_of(const std::string& module_path) {
  auto j = read(module_path);
  const auto& ref = need(j, "algebra_ref", module_path);
  if (!ref.is_string()) throw InputError(module_path, "algebra_ref", "expected a file path");
  return resolve(module_path, ref.get<std::string>());
}

Module Loader::module(const std::string& path, const std::string& algebra_override) {
  auto key = canonical(path) + "|" + algebra_override;
  if (auto it = modules_.find(key); it != modules_.end()) return it->second;
  auto j = read(path);
  auto a = algebra(algebra_override.empty() ? algebra_path_of(path) : algebra_override);
  Side side;
  auto s = need(j, "side", path);
  if (s == "left") side = Side::Left;
  else if (s == "right") side = Side::Right;
  else throw InputError(path, "side", "side must be \"left\" or \"right\"");
  std::size_t dim = as_index(need(j, "dim", path), path, "dim");
  const auto& acts = need(j, "actions", path);
  if (!acts.is_object()) throw InputError(path, "actions", "expected {label: [[r, c, \"val\"], ...]}");
  for (const auto& [label, _] : acts.items())
    if (!a->label_index(label)) throw InputError(path, "actions." + label, "unknown basis label");
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    const auto& label = a->labels()[i];
    if (acts.contains(label))
      actions.push_back(parse_sparse(a->field(), acts.at(label), dim, dim, path, "actions." + label));
    else
      actions.push_back(Matrix(a->field(), dim, dim));
  }
  auto label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>()
                                                               : fs::path(path).stem().string();
  try {
    auto m = Module::validate(a, side, std::move(actions), label);
    modules_[key] = m;
    return m;
  } catch (const ModuleError& e) {
    std::string where = "actions";
    if (e.witness().size() == 2)
      where += "." + a->labels()[e.witness()[0]] + "*" + a->labels()[e.witness()[1]];
    else if (e.witness().size() == 1)
      where += "." + a->labels()[e.witness()[0]];
    throw InputError(path, where, e.what(), e.witness());
  }
}

Quiver Loader::quiver(const std::string& path) { return parse_quiver(read(path), path); }

// {A_ref, B_ref, dim, left_actions: {label: sparse}, right_actions: {label: sparse}}
Bimodule Loader::bimodule(const std::string& path) {
  auto j = read(path);
  auto a = algebra(resolve(path, need(j, "A_ref", path).get<std::string>()));
  auto b = algebra(resolve(path, need(j, "B_ref", path).get<std::string>()));
  std::size_t dim = as_index(need(j, "dim", path), path, "dim");
  auto side = [&](const AlgebraPtr& alg, const char* key, Side s) {
    const auto& acts = need(j, key, path);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      const auto& label = alg->labels()[i];
      ms.push_back(acts.contains(label)
                       ? parse_sparse(alg->field(), acts.at(label), dim, dim, path, std::string(key) + "." + label)
                       : Matrix(alg->field(), dim, dim));
    }
    try {
      return Module::validate(alg, s, std::move(ms), fs::path(path).stem().string());
    } catch (const ModuleError& e) {
      throw InputError(path, key, e.what());
    }
  };
  auto l = side(a, "left_actions", Side::Left);
  auto r = side(b, "right_actions", Side::Right);
  try {
    return Bimodule::make(l, r);
  } catch (const Error& e) {
    throw InputError(path, "", e.what());
  }
}

Json sparse_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) a.push_back(Json::array({r, c, m(r, c).to_string()}));
  return a;
}

Json vec_json(const Vec& v) { return dense_json(v); }

Json algebra_json(const Algebra& a) {
  Json j;
  j["field"] = a.field().to_string();
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  j["unit"] = dense_json(a.unit());
  Json sc = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& [l, v] : a.product(i, k))
        if (!v.is_zero()) sc.push_back(Json::array({i, k, l, v.to_string()}));
  j["struct_consts"] = sc;
  if (a.idempotents()) {
    Json e = Json::array();
    for (const auto& v : *a.idempotents()) e.push_back(dense_json(v));
    j["idempotents"] = e;
  }
  if (a.presentation().radical_basis) {
    Json r = Json::array();
    for (const auto& v : *a.presentation().radical_basis) r.push_back(dense_json(v));
    j["radical_basis"] = r;
  }
  return j;
}

Json module_json(const Module& m, const std::string& algebra_ref) {
  Json j;
  j["algebra_ref"] = algebra_ref.empty() ? Json(nullptr) : Json(algebra_ref);
  j["side"] = to_string(m.side());
  j["dim"] = m.dim();
  Json acts = Json::object();
  const auto& labels = m.algebra()->labels();
  for (std::size_t i = 0; i < labels.size(); ++i) acts[labels[i]] = sparse_json(m.action(i));
  j["actions"] = acts;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.witness) j["witness"] = *v.witness;
  if (v.bound) j["bound"] = *v.bound;
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (v.is_unknown()) j["complete"] = v.complete;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["torsionless"] = r.torsionless;
  j["reflexive"] = r.reflexive;
  j["semi_gp"] = verdict_json(r.semi_gp);
  j["dual_semi_gp"] = verdict_json(r.dual_semi_gp);
  j["double_semi_gp"] = verdict_json(r.double_semi_gp);
  j["gp"] = verdict_json(r.gp);
  j["phi"] = {{"rank", r.phi_rank}, {"kernel_dim", r.phi_kernel_dim}, {"cokernel_dim", r.phi_cokernel_dim}};
  return j;
}

Json triple_report_json(const TripleReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["t2"] = r.t2;
  Json monic;
  monic["monic"] = r.monic.monic;
  if (r.monic.kernel_vector) monic["kernel_vector"] = dense_json(*r.monic.kernel_vector);
  j["monic"] = monic;
  Json ext = Json::object();
  for (const auto& n : r.ext_comparison) ext[n.name] = verdict_json(n.verdict);
  j["components"] = ext;
  j["perp_components"] = verdict_json(r.perp_components);
  j["gp_components"] = verdict_json(r.gp_components);
  if (r.t2) {
    Json cond = Json::object();
    for (const auto& n : r.conditions) cond[n.name] = verdict_json(n.verdict);
    j["conditions"] = cond;
    j["conditions_1_6"] = verdict_json(r.cond_1_6);
    j["conditions_7_8"] = verdict_json(r.cond_7_8);
    j["torsionless_components"] = r.torsionless_components;
    j["epi_components"] = r.epi_components;
    j["reflexive_components"] = r.reflexive_components;
    j["torsionless_double_semi_gp"] = verdict_json(r.torsionless_dsgp);
    j["double_semi_gp_phi_epi"] = verdict_json(r.dsgp_phi_epi);
    j["beta_invertible"] = r.beta_invertible;
    j["phi_star_onto"] = r.phi_star_onto;
  }
  j["flat"] = classification_json(r.flat);
  j["flat"]["phi_epi"] = r.flat_phi_epi;
  j["disagreements"] = r.disagreements;
  j["notes"] = r.notes;
  return j;
}

Json scenario_json(const ScenarioReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["description"] = c.description;
    cj["anchor"] = c.anchor;
    cj["status"] = to_string(c.status);
    Json data = Json::object();
    for (const auto& [k, v] : c.data) data[k] = data_json(v);
    cj["data"] = data;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["warnings"] = r.warnings;
  j["overall"] = to_string(r.overall());
  return j;
}

namespace {

bool scalar_like(const Json& j) { return !j.is_object() && !(j.is_array() && !j.empty() && !j.front().is_primitive()); }

void render(const Json& j, std::ostringstream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar_like(v)) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    std::size_t n = 0;
    for (const auto& v : j) {
      if (scalar_like(v)) {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << "[" << n << "]\n";
        render(v, os, indent + 2);
      }
      ++n;
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, os, 0);
  return os.str();
}

}  // namespace monicgp::cli
