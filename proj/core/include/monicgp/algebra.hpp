#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monicgp/linalg.hpp"

namespace monicgp {

struct StructConst {
  std::size_t i, j, k;
  Scalar value;  // b_i * b_j contains value * b_k
};

struct AlgebraPresentation {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Vec unit;
  std::vector<StructConst> struct_consts;
  std::optional<std::vector<Vec>> idempotents;
  std::optional<std::vector<Vec>> radical_basis;
};

/// Validation failure; witness holds the offending basis indices.
class AlgebraError : public Error {
 public:
  enum class Kind { Malformed, NonAssociative, UnitLaw, BadIdempotents, BadRadical };
  AlgebraError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Sealed finite-dimensional unital associative algebra. Only obtainable
/// through validate(), so every handle satisfies the algebra axioms.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr validate(const AlgebraPresentation& p);

  const Field& field() const { return p_.field; }
  std::size_t dim() const { return p_.dim; }
  const std::vector<std::string>& labels() const { return p_.labels; }
  const Vec& unit() const { return p_.unit; }
  const AlgebraPresentation& presentation() const { return p_; }
  const std::optional<std::vector<Vec>>& idempotents() const { return p_.idempotents; }
  /// Declared idempotents, or {unit} when none were declared.
  std::vector<Vec> idempotents_or_unit() const;
  std::optional<std::size_t> label_index(const std::string& label) const;

  Vec basis(std::size_t i) const { return unit_vec(p_.field, p_.dim, i); }
  Vec zero() const { return zero_vec(p_.field, p_.dim); }
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Sparse product table entry b_i * b_j.
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const {
    return table_[i * p_.dim + j];
  }
  /// Matrix of v -> b_i v, and of v -> v b_i.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// Algebra with reversed multiplication; opposite()->opposite() is this.
  AlgebraPtr opposite() const;
  /// Basis of the Jacobson radical (columns). Declared radicals are verified at
  /// validation; otherwise the trace form is used (char 0 or char > dim).
  const Matrix& radical() const;
  bool has_radical() const;
  /// Basis indices whose elements generate the algebra.
  const std::vector<std::size_t>& generators() const;
  /// Structural equality of presentations (labels ignored).
  bool same_structure(const Algebra& o) const;

 private:
  Algebra() = default;
  void build_tables();

  AlgebraPresentation p_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
  std::vector<Matrix> left_, right_;

  mutable std::mutex lazy_;
  mutable std::weak_ptr<const Algebra> op_weak_;
  mutable std::shared_ptr<const Algebra> op_strong_;
  mutable std::optional<Matrix> radical_;
  mutable std::optional<std::string> radical_error_;
  mutable std::optional<std::vector<std::size_t>> generators_;
};

/// An algebra element bound to its algebra.
struct Element {
  AlgebraPtr algebra;
  Vec coeffs;
};
Element multiply(const Element& a, const Element& b);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Basis of J^k for k = 1, 2, ... (columns); the last entry is the first zero power.
std::vector<Matrix> radical_powers(const Algebra& a);

}  // namespace monicgp
