#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "monicgp/homology.hpp"

namespace monicgp {

/// M* = Hom(M, A) realised on the coordinates of a Hom basis.
struct DualData {
  Module module;
  Module dual;  // opposite side
  std::shared_ptr<const HomSpace> hom;
  /// Evaluation: basis functional k sends v to pairing[k] * v in A.
  const std::vector<Matrix>& pairing() const { return hom->basis(); }
  /// f(v) for f given by dual coordinates.
  Vec evaluate(const Vec& f, const Vec& v) const;
};

DualData a_dual(const Module& m);
/// Multiplication on the side opposite to m's action, as matrices on A.
const Matrix& outer_mult(const Module& m, std::size_t i);

struct DoubleDual {
  DualData first;   // M -> M*
  DualData second;  // M* -> M**
  ModuleMap phi;    // M -> M**
};
DoubleDual double_dual(const Module& m);
/// phi_M in the bases of given duals (second must be a_dual(first.dual)).
Matrix canonical_matrix(const DualData& first, const DualData& second);
ModuleMap canonical_map(const Module& m);

/// f*: N* -> M* for f: M -> N, in the bases of the two DualData.
Matrix dual_map(const DualData& dm, const DualData& dn, const Matrix& f);

struct PhiShape {
  std::size_t rank = 0, kernel_dim = 0, cokernel_dim = 0;
  bool mono() const { return kernel_dim == 0; }
  bool epi() const { return cokernel_dim == 0; }
};
PhiShape shape(const Matrix& f);

struct ClassificationReport {
  bool torsionless = false;
  bool reflexive = false;
  Verdict semi_gp, dual_semi_gp, double_semi_gp, gp;
  std::size_t phi_rank = 0, phi_kernel_dim = 0, phi_cokernel_dim = 0;
};
ClassificationReport classify(const Module& m, std::size_t bound, std::uint64_t seed);
bool is_torsionless(const Module& m);
bool is_reflexive(const Module& m);

struct Approximation {
  ModuleMap map;                 // m -> A^t
  std::vector<Vec> components;   // dual coordinates of the t components
  bool minimal = false;
};
/// Left add(A)-approximation from generators of m* (a right add(A)-approximation
/// for right modules). Throws if the factorisation check fails.
Approximation left_add_approximation(const Module& m);

}  // namespace monicgp
