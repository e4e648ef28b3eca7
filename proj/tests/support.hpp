#pragma once

#include "monicgp/gallery.hpp"
#include "monicgp/sampling.hpp"

namespace monicgp::test {

inline const Field Q;
inline Scalar sc(long v, const Field& f = Q) { return Scalar(f, v); }

/// k[x]/(x^2) on the basis 1, x.
inline AlgebraPtr dual_numbers(const Field& f = Q) {
  AlgebraPresentation p{f, 2, {"1", "x"}, unit_vec(f, 2, 0),
                        {{0, 0, 0, sc(1, f)}, {0, 1, 1, sc(1, f)}, {1, 0, 1, sc(1, f)}},
                        std::nullopt, std::nullopt};
  return Algebra::validate(p);
}

inline Quiver linear_quiver(std::size_t n) {
  Quiver q;
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i - 1});
  return q;
}

/// Test algebras with declared idempotents or local.
inline std::vector<AlgebraPtr> small_algebras() {
  return {dual_numbers(), lsgp_example(Q).algebra.algebra, path_algebra(Q, linear_quiver(3)).algebra,
          lambda_q(Q, sc(2)).algebra};
}

inline bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace monicgp::test
