#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "monicgp/algebra.hpp"
#include "monicgp/verdict.hpp"

namespace monicgp {

enum class Side { Left, Right };
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* to_string(Side s);

/// Action-law violation; witness = (i, j) basis pair.
class ModuleError : public Error {
 public:
  ModuleError(std::vector<std::size_t> witness, const std::string& what)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// Module over a finite-dimensional algebra, stored as one action matrix per
/// basis vector. A right A-module is handled everywhere as a left module over
/// A^op ("effective algebra"); action(i) is v -> v * b_i for right modules.
/// Cheap to copy (shared immutable payload).
class Module {
 public:
  Module() = default;
  /// Checks sizes and the action law exhaustively over basis pairs.
  static Module validate(AlgebraPtr algebra, Side side, std::vector<Matrix> actions,
                         std::string label = "");
  /// For internally constructed modules whose law holds by construction.
  static Module trusted(AlgebraPtr algebra, Side side, std::vector<Matrix> actions,
                        std::string label = "");
  static Module zero(AlgebraPtr algebra, Side side);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  /// A for left modules, A^op for right modules.
  AlgebraPtr effective() const;
  Side side() const { return d_->side; }
  std::size_t dim() const { return d_->dim; }
  const Field& field() const { return d_->algebra->field(); }
  const Matrix& action(std::size_t i) const { return d_->actions[i]; }
  const std::vector<Matrix>& actions() const { return d_->actions; }
  /// Action of an arbitrary algebra element.
  Matrix action(const Vec& a) const;
  const std::string& label() const { return d_->label; }
  Module relabel(std::string label) const;
  void check_laws() const;
  bool valid() const { return d_ != nullptr; }
  /// Address of the shared payload; stable for the lifetime of any copy.
  const void* identity() const { return d_.get(); }

 private:
  struct Data {
    AlgebraPtr algebra;
    Side side = Side::Left;
    std::size_t dim = 0;
    std::vector<Matrix> actions;
    std::string label;
  };
  std::shared_ptr<const Data> d_;
};

bool same_category(const Module& a, const Module& b);
/// Same algebra, side and action matrices.
bool equal_modules(const Module& a, const Module& b);

struct ModuleMap {
  Module source;
  Module target;
  Matrix matrix;  // target.dim x source.dim

  /// Validates the intertwining law.
  static ModuleMap make(Module source, Module target, Matrix matrix);
  static ModuleMap identity(const Module& m);
  static ModuleMap zero(const Module& source, const Module& target);
  bool is_intertwining() const;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool intertwines(const Module& source, const Module& target, const Matrix& f);

Module ground_module(const Field& f, std::size_t dim);
AlgebraPtr ground_algebra(const Field& f);

/// Left and right regular modules.
std::pair<Module, Module> regular_modules(const AlgebraPtr& a);
Module regular(const AlgebraPtr& a, Side side);

/// Direct sum; inclusion k maps summand k into the sum, projection k back.
struct DirectSum {
  Module sum;
  std::vector<Matrix> inclusions;
  std::vector<Matrix> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);

/// Submodule with its inclusion (columns are the chosen basis).
struct Submodule {
  Module module;
  Matrix inclusion;
};
/// Submodule generated by vectors.
Submodule generated_submodule(const Module& m, const std::vector<Vec>& vecs);
/// Module structure on an invariant subspace given by independent columns.
Submodule restrict_to(const Module& m, const Matrix& basis);
/// Quotient by an invariant subspace; proj maps m onto the result.
struct QuotientModule {
  Module module;
  Matrix proj;
  Matrix section;
};
QuotientModule quotient_module(const Module& m, const Matrix& sub);

/// A generating set of m; minimal (a lift of a basis of m/Jm) when the radical
/// of the effective algebra is available.
std::vector<Vec> module_generators(const Module& m);
/// J m as columns; requires the radical.
Matrix radical_of(const Module& m);
/// {v : J v = 0} as columns; requires the radical.
Matrix socle_of(const Module& m);

struct RadicalSocle {
  Matrix radical_basis;
  Matrix socle_basis;
};
/// Radical of the algebra and socle of m (of the left regular module if absent).
RadicalSocle radical_and_socle(const AlgebraPtr& a, const Module* m = nullptr);

/// Hom(m, n) realised through a presentation of m: a map is determined by the
/// images of generators g_1..g_t of m, subject to the relations among them.
class HomSpace {
 public:
  HomSpace(Module source, Module target);
  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  /// Coordinates of a module map in the basis (the map must be a hom).
  Vec coords(const Matrix& f) const;
  bool contains(const Matrix& f) const;
  Matrix map(const Vec& c) const;

 private:
  Vec stacked(const Matrix& f) const;
  Module source_, target_;
  std::vector<Vec> gens_;
  std::vector<Matrix> basis_;
  CoordinateMap images_;
};

std::vector<ModuleMap> hom_space(const Module& m, const Module& n);

struct Subquotient {
  Submodule kernel;
  Submodule image;
  QuotientModule cokernel;
};
Subquotient subquotient(const ModuleMap& f);

/// u (x)_B y. `pure[i]` sends y to u_i (x) y inside the result.
struct TensorProduct {
  Module result;  // left A-module for a bimodule, else a module over the ground field
  Matrix proj;    // onto the result from u (x)_k y, index i * dim y + j
  Matrix section;
  std::vector<Matrix> pure;
};

/// A-B-bimodule.
struct Bimodule {
  Module left;   // over A, left
  Module right;  // over B, right; same underlying space

  static Bimodule make(Module left, Module right);
  static Bimodule regular(const AlgebraPtr& a);
  std::size_t dim() const { return left.dim(); }
};

TensorProduct tensor_over(const Module& u, const Module& y);
TensorProduct tensor_over(const Bimodule& u, const Module& y);

/// D(m) = Hom_k(m, k): transposed actions, opposite side.
Module k_dual(const Module& m);

/// Three-valued isomorphism test; Holds carries the intertwiner.
Verdict is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, int trials = 48);

struct IndecomposableProjective {
  Module module;
  Vec idempotent;
  Matrix basis;  // columns: the elements b * e of the effective algebra
};
struct SimplesAndProjectives {
  std::vector<IndecomposableProjective> projectives;
  std::vector<Module> simples;
};
SimplesAndProjectives simples_and_projectives(const AlgebraPtr& a, Side side = Side::Left);

}  // namespace monicgp
