#include "monicgp_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "monicgp_cli/io.hpp"

namespace monicgp::cli {

namespace {

int exit_for(Status s) {
  switch (s) {
    case Status::Holds: return Ok;
    case Status::Fails: return Failed;
    default: return Undecided;
  }
}

int exit_for(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return Ok;
    case ClaimStatus::Fail: return Failed;
    default: return Undecided;
  }
}

// All-positive -> 0, anything negative -> 1, otherwise 2.
int exit_for(const ClassificationReport& r) {
  if (!r.torsionless || !r.reflexive) return Failed;
  return exit_for(r.gp.status);
}

struct Run {
  WorkspaceConfig cfg;
  Loader loader;
  std::ostream& out;

  void emit(const Json& j) {
    if (cfg.format == "text") out << render_text(j);
    else out << j.dump(2) << "\n";
  }
};

struct Triple {
  TripleModule triple;
  std::string a_path;
};

Triple load_triple(Loader& ld, const std::string& path) {
  auto j = ld.read(path);
  auto ref = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_string()) throw InputError(path, key, "expected a file path");
    return Loader::resolve(path, j.at(key).get<std::string>());
  };
  auto a_path = ref("A_ref");
  if (!a_path) throw InputError(path, "A_ref", "missing field 'A_ref'");
  auto a = ld.algebra(*a_path);
  auto b_path = ref("B_ref");
  auto b = b_path ? ld.algebra(*b_path) : a;
  TriangularPtr t;
  if (auto bm = ref("bimodule_ref")) {
    auto m = ld.bimodule(*bm);
    if (!same_algebra(m.left.algebra(), a) || !same_algebra(m.right.algebra(), b))
      throw InputError(path, "bimodule_ref", "bimodule is not over (A, B)");
    t = build_triangular(a, b, m);
  } else {
    if (!same_algebra(a, b))
      throw InputError(path, "B_ref", "without bimodule_ref the triple is over T2(A), so B must equal A");
    t = build_t2(a);
  }
  auto xp = ref("X_ref"), yp = ref("Y_ref");
  if (!xp) throw InputError(path, "X_ref", "missing field 'X_ref'");
  if (!yp) throw InputError(path, "Y_ref", "missing field 'Y_ref'");
  auto x = ld.module(*xp), y = ld.module(*yp);
  if (x.side() != Side::Left || !same_algebra(x.algebra(), a))
    throw InputError(path, "X_ref", "X must be a left A-module");
  if (y.side() != Side::Left || !same_algebra(y.algebra(), b))
    throw InputError(path, "Y_ref", "Y must be a left B-module");
  std::size_t mt = m_tensor(*t, y).result.dim();
  if (!j.contains("phi")) throw InputError(path, "phi", "missing field 'phi'");
  auto phi = parse_sparse(a->field(), j.at("phi"), x.dim(), mt, path, "phi");
  try {
    return {TripleModule::make(t, x, y, phi), *a_path};
  } catch (const Error& e) {
    throw InputError(path, "phi", e.what());
  }
}

Json resolution_json(const ProjResolution& r) {
  Json terms = Json::array(), diffs = Json::array();
  for (std::size_t i = 0; i < r.computed(); ++i) {
    terms.push_back({{"i", i}, {"dim", r.terms[i].module.dim()}, {"generators", r.terms[i].generator_count()},
                     {"kinds", r.terms[i].kinds}});
    const auto& d = r.differentials[i];
    diffs.push_back({{"i", i}, {"rows", d.rows()}, {"cols", d.cols()}, {"matrix", sparse_json(d)}});
  }
  return {{"minimal", r.minimal}, {"complete", r.complete}, {"terms", terms}, {"differentials", diffs}};
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < dims.size(); ++i) rows.push_back({{"i", i}, {"dim", dims[i]}});
  return rows;
}

Json shape_json(const Matrix& m) {
  auto s = shape(m);
  return {{"rank", s.rank}, {"kernel_dim", s.kernel_dim}, {"cokernel_dim", s.cokernel_dim}};
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message,
                const InputError* in = nullptr, const std::vector<std::size_t>* witness = nullptr) {
  Json j;
  j["error"] = kind;
  if (in) {
    j["path"] = in->path();
    if (!in->where().empty()) j["invariant"] = in->where();
  }
  j["message"] = message;
  if (witness && !witness->empty()) j["witness"] = *witness;
  err << j.dump(2) << "\n";
}

}  // namespace

WorkspaceConfig load_config() {
  WorkspaceConfig c;
  const char* env = std::getenv("MONICGP_CONFIG");
  if (!env || !*env) return c;
  Loader ld;
  auto j = ld.read(env);
  try {
    if (j.contains("field")) c.field = j.at("field").get<std::string>();
    if (j.contains("bound")) c.bound = j.at("bound").get<std::size_t>();
    if (j.contains("cap")) c.cap = j.at("cap").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(env, "", std::string("bad config: ") + e.what());
  }
  if (c.bound < 1) throw InputError(env, "bound", "bound must be at least 1");
  if (c.cap < 1) throw InputError(env, "cap", "cap must be at least 1");
  if (c.format != "json" && c.format != "text") throw InputError(env, "format", "format is json or text");
  return c;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  WorkspaceConfig cfg;
  try {
    cfg = load_config();
  } catch (const InputError& e) {
    error_json(err, "config", e.what(), &e);
    return Usage;
  }

  CLI::App app{"Modules over triangular and tensor algebras: duals, Ext, Gorenstein-projective checks", "monicgp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::string> format, field;
  std::optional<std::size_t> bound, cap;
  std::optional<std::uint64_t> seed;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", cap, "dimension cap")->check(CLI::PositiveNumber);

  std::function<int(Run&)> action;
  std::string f1, f2, algebra_file, mode = "combinatorial", q = "2", c = "0", scenario;
  std::size_t steps = 3, samples = 20;
  bool minimal = false;
  auto bound_opt = [&](CLI::App* s) {
    s->add_option("--bound", bound, "Ext/Tor bound")->check(CLI::PositiveNumber);
  };
  auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", seed, "random seed"); };

  // algebra validate
  auto* alg = app.add_subcommand("algebra", "algebra files")->require_subcommand(1);
  auto* alg_v = alg->add_subcommand("validate", "check the algebra axioms");
  alg_v->add_option("file", f1)->required();
  alg_v->callback([&] {
    action = [&](Run& r) {
      auto a = r.loader.algebra(f1);
      Json j{{"valid", true}, {"field", a->field().to_string()}, {"dim", a->dim()},
             {"idempotents", a->idempotents() ? a->idempotents()->size() : 0}};
      if (a->has_radical()) j["radical_dim"] = a->radical().cols();
      else j["radical_dim"] = nullptr;
      r.emit(j);
      return Ok;
    };
  });

  // module ...
  auto* mod = app.add_subcommand("module", "module files")->require_subcommand(1);
  auto* mod_v = mod->add_subcommand("validate", "check the action law");
  mod_v->add_option("file", f1)->required();
  mod_v->add_option("--algebra", algebra_file, "algebra file overriding algebra_ref");
  mod_v->callback([&] {
    action = [&](Run& r) {
      auto m = r.loader.module(f1, algebra_file);
      r.emit({{"valid", true}, {"side", to_string(m.side())}, {"dim", m.dim()},
              {"algebra_dim", m.algebra()->dim()}});
      return Ok;
    };
  });
  auto* mod_c = mod->add_subcommand("classify", "torsionless / reflexive / semi-GP / GP");
  mod_c->add_option("file", f1)->required();
  bound_opt(mod_c);
  seed_opt(mod_c);
  mod_c->callback([&] {
    action = [&](Run& r) {
      auto m = r.loader.module(f1);
      auto rep = classify(m, r.cfg.bound, r.cfg.seed);
      Json j{{"dim", m.dim()}, {"bound", r.cfg.bound}};
      j["classification"] = classification_json(rep);
      j["projective"] = is_projective(m);
      r.emit(j);
      return exit_for(rep);
    };
  });
  auto* mod_d = mod->add_subcommand("dual", "M* = Hom(M, A) as a module file");
  mod_d->add_option("file", f1)->required();
  mod_d->callback([&] {
    action = [&](Run& r) {
      auto m = r.loader.module(f1);
      auto d = a_dual(m);
      // same algebra_ref string, so the output can sit next to the input
      r.emit(module_json(d.dual, r.loader.read(f1).at("algebra_ref").get<std::string>()));
      return Ok;
    };
  });
  auto* mod_r = mod->add_subcommand("resolve", "projective resolution");
  mod_r->add_option("file", f1)->required();
  mod_r->add_option("--steps", steps, "last term P_n")->check(CLI::NonNegativeNumber);
  mod_r->add_flag("--minimal", minimal, "minimal covers (needs idempotents and radical)");
  mod_r->callback([&] {
    action = [&](Run& r) {
      auto m = r.loader.module(f1);
      r.emit(resolution_json(resolve(m, steps, minimal)));
      return Ok;
    };
  });

  auto* ext = app.add_subcommand("ext", "dim Ext^i(m, n), 0 <= i <= bound");
  ext->add_option("m", f1)->required();
  ext->add_option("n", f2)->required();
  bound_opt(ext);
  ext->callback([&] {
    action = [&](Run& r) {
      auto m = r.loader.module(f1), n = r.loader.module(f2);
      auto t = ext_dims(m, n, r.cfg.bound);
      r.emit({{"bound", r.cfg.bound}, {"ext", dims_json(t.dims)}});
      return Ok;
    };
  });
  auto* tor = app.add_subcommand("tor", "dim Tor_i(u, x), 0 <= i <= bound");
  tor->add_option("u", f1)->required();
  tor->add_option("x", f2)->required();
  bound_opt(tor);
  tor->callback([&] {
    action = [&](Run& r) {
      auto u = r.loader.module(f1), x = r.loader.module(f2);
      r.emit({{"bound", r.cfg.bound}, {"tor", dims_json(tor_dims(u, x, r.cfg.bound))}});
      return Ok;
    };
  });

  // t2 build|dual|classify
  auto* t2 = app.add_subcommand("t2", "triangular-matrix modules (X, Y)_phi")->require_subcommand(1);
  auto* t2_b = t2->add_subcommand("build", "flat algebra and module");
  t2_b->add_option("triple", f1)->required();
  t2_b->callback([&] {
    action = [&](Run& r) {
      auto t = load_triple(r.loader, f1);
      auto flat = triple_to_module(t.triple);
      auto mono = is_monic_bimodule(t.triple);
      Json j{{"algebra", algebra_json(*t.triple.parent->flat)}, {"module", module_json(flat, "")}};
      j["monic"] = mono.monic;
      if (mono.kernel_vector) j["kernel_vector"] = vec_json(*mono.kernel_vector);
      r.emit(j);
      return Ok;
    };
  });
  auto* t2_d = t2->add_subcommand("dual", "dual and double dual through the components");
  t2_d->add_option("triple", f1)->required();
  t2_d->callback([&] {
    action = [&](Run& r) {
      auto t = load_triple(r.loader, f1);
      if (!t.triple.parent->t2) throw Error("t2 dual needs a triple over T2(A) (no bimodule_ref)");
      auto b = t2_dual_bundle(t.triple);
      Json dual{{"C*", b.dc.dual.dim()}, {"X*", b.dx.dual.dim()}, {"pi_star", sparse_json(b.pi_star)},
                {"module", module_json(b.dual_triple, "")}};
      Json dd{{"X**", b.dxx.dual.dim()}, {"Q*", b.dq.dual.dim()}, {"p_star", sparse_json(b.p_star)},
              {"module", module_json(triple_to_module(b.double_dual_triple), "")}};
      Json can{{"phi_X", shape_json(b.phi_x)}, {"beta_star_phi_Y", shape_json(b.beta_star_phi_y)},
               {"phi", shape_json(b.phi_flat)}};
      Json inv{{"phi_star_factors", b.phi_star_factors}, {"rows_exact", b.rows_exact}, {"h_iso", b.h_iso},
               {"tilde_h_iso", b.tilde_h_iso}, {"canonical_agrees", b.canonical_agrees}};
      r.emit({{"coker_phi_dim", b.coker.module.dim()}, {"dual", dual}, {"double_dual", dd},
              {"canonical_map", can}, {"invariants", inv}});
      return b.all_invariants() ? Ok : Failed;
    };
  });
  auto* t2_c = t2->add_subcommand("classify", "per-component and flat classification");
  t2_c->add_option("triple", f1)->required();
  bound_opt(t2_c);
  seed_opt(t2_c);
  t2_c->callback([&] {
    action = [&](Run& r) {
      auto t = load_triple(r.loader, f1);
      auto rep = classify_triple(t.triple, r.cfg.bound, r.cfg.seed);
      r.emit(triple_report_json(rep));
      return rep.disagreements.empty() ? exit_for(rep.flat) : static_cast<int>(Failed);
    };
  });

  auto* ten = app.add_subcommand("tensor", "tensor algebras A (x) kQ/I")->require_subcommand(1);
  auto* ten_b = ten->add_subcommand("build", "structure constants of A (x) kQ/I");
  ten_b->add_option("algebra", f1)->required();
  ten_b->add_option("quiver", f2)->required();
  ten_b->callback([&] {
    action = [&](Run& r) {
      auto t = build_tensor(r.loader.algebra(f1), r.loader.quiver(f2));
      auto j = algebra_json(*t->flat);
      Json paths = Json::array();
      for (std::size_t i = 0; i < t->B.paths.size(); ++i) paths.push_back(t->B.algebra->labels()[i]);
      j["paths"] = paths;
      r.emit(j);
      return Ok;
    };
  });

  auto* mon = app.add_subcommand("monic", "monic check of a quiver representation over A");
  mon->add_option("rep", f1)->required();
  mon->add_option("--mode", mode)->check(CLI::IsMember({"combinatorial", "homological"}));
  bound_opt(mon);
  mon->callback([&] {
    action = [&](Run& r) {
      auto j = r.loader.read(f1);
      auto need = [&](const char* k) {
        if (!j.contains(k)) throw InputError(f1, k, std::string("missing field '") + k + "'");
        return j.at(k);
      };
      auto a = r.loader.algebra(Loader::resolve(f1, need("algebra_ref").get<std::string>()));
      auto quiver = r.loader.quiver(Loader::resolve(f1, need("quiver_ref").get<std::string>()));
      auto t = build_tensor(a, quiver);
      std::vector<Module> vs;
      auto vj = need("vertices");
      for (const auto& v : quiver.vertices) {
        if (!vj.contains(v)) throw InputError(f1, "vertices." + v, "missing vertex module");
        vs.push_back(r.loader.module(Loader::resolve(f1, vj.at(v).get<std::string>())));
      }
      std::vector<Matrix> ms;
      auto aj = j.contains("arrows") ? j.at("arrows") : Json::object();
      for (const auto& ar : quiver.arrows) {
        std::size_t rows = vs[ar.target].dim(), cols = vs[ar.source].dim();
        ms.push_back(aj.contains(ar.name)
                         ? parse_sparse(a->field(), aj.at(ar.name), rows, cols, f1, "arrows." + ar.name)
                         : Matrix(a->field(), rows, cols));
      }
      QuiverRep rep;
      try {
        rep = QuiverRep::make(t, vs, ms);
      } catch (const Error& e) {
        throw InputError(f1, "arrows", e.what());
      }
      Verdict v = mode == "combinatorial" ? monic_combinatorial(rep)
                                          : monic_check(t, rep_to_module(rep), MonicMode::Homological, r.cfg.bound);
      Json out{{"mode", mode}, {"dim", rep.dim()}, {"verdict", verdict_json(v)}};
      if (mode != "combinatorial")
        out["assumptions"] = Json::array({"gl.dim kQ/I finite (acyclic quiver); not checked by the bounded test"});
      r.emit(out);
      return exit_for(v.status);
    };
  });

  auto* gal = app.add_subcommand("gallery", "built-in algebras")->require_subcommand(1);
  auto* gal_l = gal->add_subcommand("lambda-q", "the six-dimensional local algebra Lambda(q)");
  gal_l->add_option("--q", q, "nonzero scalar");
  gal_l->add_option("--field", field, "Q or GF(p)");
  gal_l->callback([&] {
    action = [&](Run& r) {
      auto f = Field::parse(r.cfg.field);
      auto l = lambda_q(f, Scalar::parse(f, q));
      auto j = algebra_json(*l.algebra);
      j["warnings"] = l.warnings;
      r.emit(j);
      return Ok;
    };
  });

  auto* ver = app.add_subcommand("verify", "run a named scenario");
  ver->add_option("scenario", scenario)->required()->check(CLI::IsMember(scenario_names()));
  ver->add_option("--q", q);
  ver->add_option("--c", c, "comma-separated values allowed");
  ver->add_option("--field", field);
  ver->add_option("--samples", samples)->check(CLI::PositiveNumber);
  bound_opt(ver);
  seed_opt(ver);
  ver->callback([&] {
    action = [&](Run& r) {
      ScenarioParams p;
      p.field = Field::parse(r.cfg.field);
      p.q = q;
      p.c = c;
      p.bound = r.cfg.bound;
      p.seed = r.cfg.seed;
      p.samples = samples;
      auto rep = run_scenario(scenario, p);
      r.emit(scenario_json(rep));
      return exit_for(rep.overall());
    };
  });

  std::vector<std::string> argv_store{"monicgp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return Usage;
  }

  if (format) cfg.format = *format;
  if (field) cfg.field = *field;
  if (bound) cfg.bound = *bound;
  if (cap) cfg.cap = *cap;
  if (seed) cfg.seed = *seed;
  set_dimension_cap(cfg.cap);

  Run run{cfg, Loader{}, out};
  try {
    return action(run);
  } catch (const InputError& e) {
    error_json(err, "invalid input", e.what(), &e, &e.witness());
  } catch (const ModuleError& e) {
    error_json(err, "module law", e.what(), nullptr, &e.witness());
  } catch (const AlgebraError& e) {
    error_json(err, "algebra axioms", e.what(), nullptr, &e.witness());
  } catch (const nlohmann::json::exception& e) {
    error_json(err, "invalid input", e.what());
  } catch (const Error& e) {
    error_json(err, "validation", e.what());
  }
  return Usage;
}

}  // namespace monicgp::cli
