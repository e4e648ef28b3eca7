#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace monicgp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Ground field: the rationals or a prime field F_p.
class Field {
 public:
  /// Q.
  Field() = default;
  static Field rationals() { return Field(); }
  /// F_p; throws unless p is a prime that fits in 31 bits.
  static Field prime(std::uint32_t p);
  /// Parses "Q" / "QQ" / "rationals" or "GF(p)" / "F_p" / "Fp".
  static Field parse(const std::string& spec);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact field element. Over Q the value is a canonical mpq; over F_p it is
/// the least nonnegative residue.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long v);
  Scalar(const Field& f, const mpq_class& v);

  /// "num/den" or an integer over Q; a decimal residue (any integer) over F_p.
  static Scalar parse(const Field& f, const std::string& text);

  Field field() const;
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  std::string to_string() const;
  /// Exact rational value; residues are returned as integers.
  mpq_class to_mpq() const { return p_ ? mpq_class(static_cast<long>(r_)) : q_; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  /// this -= a*b without temporaries on the F_p path.
  void sub_mul(const Scalar& a, const Scalar& b);
  void add_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && (a.p_ ? a.r_ == b.r_ : a.q_ == b.q_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch("scalars from different fields");
  }
  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;
};

}  // namespace monicgp
