#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "monicgp/module.hpp"

namespace monicgp {

class MinimalUnavailable : public Error {
 public:
  using Error::Error;
};

/// Indecomposable projective E e used as a building block, E the effective algebra.
struct ProjKind {
  Vec idempotent;
  Matrix basis;     // columns: elements b e of E spanning E e
  Vec gen_coords;   // e itself in that basis
  std::vector<Matrix> actions;
};

struct ProjCatalog {
  AlgebraPtr effective;
  bool minimal = false;
  std::vector<ProjKind> kinds;
};

/// Catalog for covers of modules on the given side: one kind per declared
/// idempotent (minimal) or the single free kind E (non-minimal).
std::shared_ptr<const ProjCatalog> projective_catalog(const AlgebraPtr& a, Side side, bool minimal);

/// P = sum of E e_k; summand s has kind kinds[s] and starts at offsets[s].
struct ProjTerm {
  Module module;
  std::vector<std::size_t> kinds;
  std::vector<std::size_t> offsets;
  std::size_t generator_count() const { return kinds.size(); }
};

struct ProjResolution {
  Module target;
  std::shared_ptr<const ProjCatalog> catalog;
  std::vector<ProjTerm> terms;
  /// differentials[0]: P_0 -> target; differentials[i]: P_i -> P_{i-1}.
  std::vector<Matrix> differentials;
  /// syzygies[i] = ker differentials[i] as a submodule of P_i, i.e. Omega^{i+1}.
  std::vector<Submodule> syzygies;
  bool minimal = false;
  /// True once a kernel vanished: all later terms are zero.
  bool complete = false;

  std::size_t computed() const { return terms.size(); }
  /// Term i, or the zero term past a complete resolution.
  ProjTerm term(std::size_t i) const;
  /// Omega^i (Omega^0 = target).
  Module syzygy(std::size_t i) const;
  /// Generator image d_i(gen_s) in P_{i-1} (i >= 1).
  Vec generator_image(std::size_t i, std::size_t s) const;
};

/// Resolution through P_n. minimal requires the radical and primitive idempotents (declared, or A local); when
/// allow_fallback is set a free resolution is produced instead of throwing.
ProjResolution resolve(const Module& m, std::size_t n, bool minimal, bool allow_fallback = false);
/// Extends an existing resolution through P_n (no-op when already there).
void extend(ProjResolution& r, std::size_t n);
/// Memoised minimal-if-possible resolution through P_n.
std::shared_ptr<const ProjResolution> cached_resolution(const Module& m, std::size_t n, bool minimal);
void clear_resolution_cache();

struct ExtTable {
  Module source, target;
  std::vector<std::size_t> dims;  // Ext^0 .. Ext^bound
};

/// Hom(P_i, n) = sum_s e_s n, with its coboundary to degree i+1.
Matrix cochain_differential(const ProjResolution& r, std::size_t i, const Module& n);
std::size_t cochain_dim(const ProjResolution& r, std::size_t i, const Module& n);

ExtTable ext_dims(const Module& m, const Module& n, std::size_t bound, bool minimal = true);
ExtTable ext_dims_with(const ProjResolution& r, const Module& n, std::size_t bound);
std::vector<std::size_t> tor_dims(const Module& u, const Module& x, std::size_t bound,
                                  bool minimal = true);

/// Ext^i(m, n) = 0 for 1 <= i <= bound: Fails(i) at the first nonzero degree;
/// Holds when the projective dimension is reached; else Unknown(bound).
/// Cap overflow yields an incomplete Unknown.
Verdict ext_vanishing(const Module& m, const Module& n, std::size_t bound);
/// m in perp(A) with a syzygy-periodicity certificate when one exists.
Verdict is_semi_gp(const Module& m, std::size_t bound, std::uint64_t seed);

/// Chain map P(m) -> P(m') over f: m -> m', components 0..n.
std::vector<Matrix> lift_chain_map(const ProjResolution& src, const ProjResolution& tgt,
                                   const Matrix& f, std::size_t n);

/// Induced map Ext^i(m', n) -> Ext^i(m, n) for a lifted chain map.
struct InducedExt {
  std::size_t source_dim = 0;  // dim Ext^i(m', n)
  std::size_t target_dim = 0;  // dim Ext^i(m, n)
  std::size_t rank = 0;
  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
  bool iso() const { return injective() && surjective(); }
};
InducedExt induced_on_ext(const ProjResolution& src, const ProjResolution& tgt,
                          const std::vector<Matrix>& chain, const Module& n, std::size_t i);

/// Projective test: the minimal cover is an isomorphism (needs a radical);
/// otherwise Ext^1(m, Omega m) = 0 is used.
bool is_projective(const Module& m);

}  // namespace monicgp
