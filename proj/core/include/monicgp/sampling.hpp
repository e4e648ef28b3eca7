#pragma once

#include <cstdint>
#include <random>

#include "monicgp/tensor_quiver.hpp"
#include "monicgp/triangular.hpp"

namespace monicgp {

/// Seeded generators for property checks. Coefficients are small integers
/// (residues over F_p), mostly zero.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar(const Field& f, bool nonzero = false);
  Vec vec(const Field& f, std::size_t n, double density = 0.6);
  std::size_t below(std::size_t n);
  bool coin(double p = 0.5);

  /// A module of dimension 1..max_dim: a cyclic quotient, a cyclic submodule
  /// of a free module, a projective, a simple, or a sum of two such.
  Module module(const AlgebraPtr& a, Side side, std::size_t max_dim);
  /// Random element of Hom(m, n).
  Matrix hom(const Module& m, const Module& n);
  /// Random T2(A)-module with component dimensions <= max_dim.
  TripleModule triple(const TriangularPtr& t2, std::size_t max_dim);
  /// Random submodule (generated by one or two vectors) of a random projective.
  Submodule projective_submodule(const AlgebraPtr& a, std::size_t max_summands);

  std::mt19937_64& engine() { return rng_; }

 private:
  Module leaf(const AlgebraPtr& a, Side side, std::size_t max_dim);
  std::mt19937_64 rng_;
};

}  // namespace monicgp
