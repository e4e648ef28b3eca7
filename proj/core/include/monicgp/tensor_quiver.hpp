#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "monicgp/homology.hpp"

namespace monicgp {

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;
};

/// Finite quiver with monomial relations. A relation lists arrow names in
/// composition order: {"b", "a"} is b after a.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> relations;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  bool acyclic() const;
  /// Relations as arrow indices; throws on unknown names, length < 2 or
  /// non-composable sequences.
  std::vector<std::vector<std::size_t>> relation_indices() const;
};

/// A path in composition order (arrows[0] is applied last); trivial when empty.
struct Path {
  std::vector<std::size_t> arrows;
  std::size_t source = 0, target = 0;
  bool trivial() const { return arrows.empty(); }
};

struct PathAlgebra {
  Quiver quiver;
  std::vector<Path> paths;  // ordered by length, then arrow names
  AlgebraPtr algebra;
  std::size_t trivial(std::size_t vertex) const;
  std::size_t arrow(std::size_t a) const;
  std::optional<std::size_t> find(const std::vector<std::size_t>& arrows) const;

 private:
  friend PathAlgebra path_algebra(const Field&, const Quiver&, bool);
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// kQ/I; oriented cycles are only accepted with allow_cycles (the result must
/// still be finite-dimensional).
PathAlgebra path_algebra(const Field& f, const Quiver& q, bool allow_cycles = false);

/// Lambda = A (x) kQ/I with basis index path * dim A + a.
struct TensorAlgebra {
  AlgebraPtr A;
  PathAlgebra B;
  AlgebraPtr flat;
  std::size_t index(std::size_t a, std::size_t path) const { return path * A->dim() + a; }
  /// 1_A (x) p as an element of Lambda.
  Vec unit_times(std::size_t path) const;
};
using TensorPtr = std::shared_ptr<const TensorAlgebra>;

TensorPtr build_tensor(const AlgebraPtr& a, const Quiver& q);

/// Representation of the quiver over A; vertex modules are left A-modules.
struct QuiverRep {
  TensorPtr parent;
  std::vector<Module> vertex;
  std::vector<Matrix> arrow;  // X_a : X_source -> X_target

  /// Checks A-linearity of the arrow maps and the relations.
  static QuiverRep make(TensorPtr parent, std::vector<Module> vertex, std::vector<Matrix> arrow);
  Matrix path_map(const Path& p) const;
  std::size_t dim() const;
  std::vector<std::size_t> offsets() const;
};

Module rep_to_module(const QuiverRep& r);
QuiverRep module_to_rep(const TensorPtr& t, const Module& m);

/// Gathered incoming maps at vertex i: sum over arrows ending at i.
Matrix gathered_map(const QuiverRep& r, std::size_t vertex);

enum class MonicMode { Combinatorial, Homological };

/// Exact check; for monomial relations: each Ker X_a is the sum of Im X_p over
/// relations a p, and the images of incoming arrows form a direct sum.
/// Fails carries the vertex.
Verdict monic_combinatorial(const QuiverRep& r);
/// Tor^Lambda_i(A (x) D(S), x) = 0 for simple left B-modules S, 1 <= i <= bound.
/// Holds once the bound reaches the projective dimension of every D(S).
Verdict monic_homological(const TensorPtr& t, const Module& x, std::size_t bound);
/// Ext^i(x, D(A_A) (x) B) = 0 for 1 <= i <= bound.
Verdict monic_perp_form(const TensorPtr& t, const Module& x, std::size_t bound);
Verdict monic_check(const TensorPtr& t, const Module& x, MonicMode mode, std::size_t bound);

/// u (x)_k v over Lambda: (a (x) b)(x (x) y) = ax (x) by; index i * dim v + j.
Module outer_tensor(const TensorPtr& t, const Module& u, const Module& v);

/// 1-dimensional module at a vertex (left or right over B).
Module vertex_simple(const PathAlgebra& b, std::size_t vertex, Side side);

enum class MembershipForm { Tensor, Cokernel };
using ModulePredicate = std::function<Verdict(const Module&)>;

/// (A (x) S') (x)_Lambda x in C for every right simple S' (Tensor form), or
/// X_i / Im(gathered) in C (Cokernel form, relation-free quivers). Throws if x
/// is not monic.
Verdict mon_membership(const TensorPtr& t, const Module& x, const ModulePredicate& in_c,
                       MembershipForm form = MembershipForm::Tensor);
/// The left A-module (A (x) S'_v) (x)_Lambda x.
Module vertex_tensor(const TensorPtr& t, const Module& x, std::size_t vertex);

}  // namespace monicgp
