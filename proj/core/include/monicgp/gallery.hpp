#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monicgp/tensor_quiver.hpp"
#include "monicgp/triangular.hpp"

namespace monicgp {

/// Lambda(q) = k<x, y, z> / (x^2, y^2, z^2, yz, xy + q yx, xz - zx, zy - zx)
/// on the basis 1, x, y, z, yx, zx.
struct LambdaQ {
  AlgebraPtr algebra;
  Scalar q;
  std::vector<std::string> warnings;
  enum : std::size_t { One = 0, X, Y, Z, YX, ZX };
};
/// Throws on q = 0 or a failed Hilbert-type check; warns when q has finite order.
LambdaQ lambda_q(const Field& f, const Scalar& q);

/// M(a,b,c) = A / (A(ax+by+cz) + soc A), left.
Module m_abc(const LambdaQ& l, const Scalar& a, const Scalar& b, const Scalar& c);
/// M'(a,b,c) = A / ((ax+by+cz)A + soc A), right.
Module m_prime_abc(const LambdaQ& l, const Scalar& a, const Scalar& b, const Scalar& c);

struct LambdaModules {
  LambdaQ lambda;
  Scalar c;
  Module m;              // M(1,-q,c) on the basis 1-bar, x-bar, z-bar
  ModuleMap f1;          // M(1,-q,c) -> A, 1-bar -> x - y
  TriangularPtr t2;      // T2(Lambda(q))
  TripleModule xc;       // (A, M(1,-q,c))_{f1}
};
LambdaModules lambda_modules(const Field& f, const Scalar& q, const Scalar& c);

/// Elements of A as vectors: x - y, x - q^{-1} y.
Vec lambda_element(const LambdaQ& l, const std::vector<std::pair<std::size_t, Scalar>>& terms);
/// Left ideal A v, right ideal v A, two-sided ideal A v A inside the regular module.
Submodule left_ideal(const LambdaQ& l, const Vec& v);
Submodule right_ideal(const LambdaQ& l, const Vec& v);
Submodule two_sided_ideal(const LambdaQ& l, const Vec& v);

/// Quiver 2 -> 1 (arrow a) with a loop b at 2, relations bb and ab.
struct LsgpExample {
  PathAlgebra algebra;
  Module s1, s2, p2, i1, i2;
};
LsgpExample lsgp_example(const Field& f);

/// k (x) kQ/<ba> with Q = 3 -> 2 -> 1 and the simple S(2) = rad P(3).
struct PathTorsionlessExample {
  TensorPtr tensor;
  Module s2;
};
PathTorsionlessExample path_torsionless_example(const Field& f);

/// [[k, D(A e1)], [0, A]] with A = k(2 -> 1) and the triple (0, A e1).
struct GeneralBimoduleExample {
  TriangularPtr algebra;
  TripleModule triple;
  Module flat;
};
GeneralBimoduleExample general_bimodule_example(const Field& f);

enum class ClaimStatus { Pass, Fail, Unknown };
const char* to_string(ClaimStatus s);

using DataValue = std::variant<bool, long, std::string, std::vector<long>>;

struct Claim {
  std::string description;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Unknown;
  std::vector<std::pair<std::string, DataValue>> data;
};

struct ScenarioParams {
  Field field;
  std::string q = "2";
  std::string c = "0";
  std::size_t bound = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Claim> claims;
  std::vector<std::string> warnings;
  /// Fail beats Unknown beats Pass.
  ClaimStatus overall() const;
};

std::vector<std::string> scenario_names();
/// Throws Error on an unknown name.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params);

/// Explicit T2-module isomorphism check between two left triples.
Verdict triple_isomorphic(const TripleModule& a, const TripleModule& b, std::uint64_t seed);

}  // namespace monicgp
