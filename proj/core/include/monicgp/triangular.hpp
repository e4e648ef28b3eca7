#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monicgp/duality.hpp"

namespace monicgp {

/// Lambda = [[A, M], [0, B]] on the flat basis A | M | B.
struct TriangularAlgebra {
  AlgebraPtr A, B;
  Bimodule M;  // left over A, right over B
  AlgebraPtr flat;
  bool t2 = false;  // A = B and M the regular bimodule

  std::size_t a_offset() const { return 0; }
  std::size_t m_offset() const { return A->dim(); }
  std::size_t b_offset() const { return A->dim() + M.dim(); }
  /// (1_A, 0, 0) and (0, 0, 1_B).
  Vec e1() const;
  Vec e2() const;
};
using TriangularPtr = std::shared_ptr<const TriangularAlgebra>;

TriangularPtr build_triangular(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& m);
TriangularPtr build_t2(const AlgebraPtr& a);

/// M (x)_B Y with pure[i] : Y -> M (x) Y, y -> m_i (x) y. For T2 this is Y itself.
struct MTensor {
  Module result;
  std::vector<Matrix> pure;
  Matrix proj;     // from M (x)_k Y (index i * dim Y + j)
  Matrix section;
};
MTensor m_tensor(const TriangularAlgebra& t, const Module& y);

/// Left Lambda-module (X, Y)_phi with phi : M (x)_B Y -> X.
struct TripleModule {
  TriangularPtr parent;
  Module X, Y;
  Matrix phi;  // dim X x dim (M (x) Y)
  std::shared_ptr<const MTensor> tensor;  // M (x)_B Y

  static TripleModule make(TriangularPtr parent, Module x, Module y, Matrix phi);
};

/// Underlying space X + Y (X first).
Module triple_to_module(const TripleModule& t);
TripleModule module_to_triple(const TriangularPtr& parent, const Module& m);

struct MonicResult {
  bool monic = false;
  std::optional<Vec> kernel_vector;
};
MonicResult is_monic_bimodule(const TripleModule& t);

/// Right T2(A)-module (U, V)_psi on U + V with psi : U -> V.
Module right_pair_module(const TriangularAlgebra& t, const Module& u, const Module& v, const Matrix& psi);

/// Dual, double dual and canonical map of a T2(A)-module through its components,
/// with explicit identifications with the generic constructions.
struct T2DualBundle {
  TripleModule input;
  QuotientModule coker;  // C = Coker phi, proj = pi
  DualData dx, dy, dc;   // X*, Y*, C*
  Matrix pi_star;        // C* -> X*
  Matrix phi_star;       // X* -> Y*
  QuotientModule coker_pi_star;  // Q = Coker pi*, proj = p
  Matrix beta;           // Q -> Y*, beta p = phi*
  Module dual_triple;    // ((Coker phi)*, X*)_{pi*}
  DualData dxx, dq, dyy;  // X**, Q*, Y**
  Matrix p_star;         // Q* -> X**
  Matrix beta_star;      // Y** -> Q*
  TripleModule double_dual_triple;  // (X**, Q*)_{p*}
  Matrix phi_x, phi_y;   // canonical maps of X and Y
  Matrix beta_star_phi_y;
  // generic side
  Module flat;
  DualData flat_dual, flat_double;
  Matrix phi_flat;
  Matrix h;        // flat* -> dual_triple
  Matrix tilde_h;  // double_dual_triple -> flat**

  bool phi_star_factors = false;  // phi* = beta p
  bool rows_exact = false;        // 0 -> C* -> X* -> Y* exact and p onto
  bool h_iso = false, tilde_h_iso = false;
  bool canonical_agrees = false;  // phi_flat = tilde_h (phi_X, beta* phi_Y)
  bool all_invariants() const {
    return phi_star_factors && rows_exact && h_iso && tilde_h_iso && canonical_agrees;
  }
};
T2DualBundle t2_dual_bundle(const TripleModule& t);

struct Named {
  std::string name;
  Verdict verdict;
};

/// Per-condition classification of a triple together with the flat-module
/// verdicts and their agreement.
struct TripleReport {
  std::size_t bound = 0;
  bool t2 = false;
  MonicResult monic;
  // general triangular checks
  std::vector<Named> ext_comparison;  // Y in perp(B), Ext comparison, phi* onto
  Verdict perp_components;            // conjunction of the bullets
  Verdict gp_components;              // monic, Coker phi and Y Gorenstein-projective
  // T2-only
  std::vector<Named> conditions;      // (1) .. (8)
  Verdict cond_1_6, cond_7_8;
  bool torsionless_components = false, epi_components = false, reflexive_components = false;
  Verdict torsionless_dsgp, dsgp_phi_epi;
  bool beta_invertible = false, phi_star_onto = false;
  // flat module
  ClassificationReport flat;
  bool flat_phi_epi = false;
  std::vector<std::string> disagreements;
  std::vector<std::string> notes;
};
TripleReport classify_triple(const TripleModule& t, std::size_t bound, std::uint64_t seed);

/// (P, Y)_phi over T2(A) with phi a left add(A)-approximation of Y.
TripleModule approximation_triple(const TriangularPtr& t2, const Module& y);

/// Ext^i(m, A) = 0 for 1 <= i <= bound on m's side.
Verdict in_perp_regular(const Module& m, std::size_t bound);

}  // namespace monicgp
