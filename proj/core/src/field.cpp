#include "monicgp/field.hpp"

#include <cctype>

namespace monicgp {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::parse(const std::string& raw) {
  std::string s = trim(raw);
  if (s == "Q" || s == "QQ" || s == "rationals" || s == "Rationals") return rationals();
  std::string digits;
  for (char ch : s)
    if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
  bool shaped = s.rfind("GF", 0) == 0 || s.rfind("F", 0) == 0;
  if (!shaped || digits.empty() || digits.size() > 10)
    throw Error("unrecognized field spec '" + raw + "'");
  return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string Field::to_string() const {
  return p_ ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Scalar::Scalar(const Field& f, long v) : p_(f.characteristic()) {
  if (p_)
    r_ = mod(v, p_);
  else
    q_ = v;
}

Scalar::Scalar(const Field& f, const mpq_class& v) : p_(f.characteristic()) {
  if (!p_) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  mpz_class num = v.get_num() % p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw Error("denominator vanishes in GF(" + std::to_string(p_) + ")");
  std::int64_t n = mod(num.get_si(), p_);
  std::int64_t d = mod(den.get_si(), p_);
  r_ = n * pow_mod(d, p_ - 2, p_) % p_;
}

Scalar Scalar::parse(const Field& f, const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw Error("empty scalar");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw Error("malformed scalar '" + raw + "'");
  if (s[0] == '+') s = s.substr(1);
  mpq_class v;
  try {
    v = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw Error("malformed scalar '" + raw + "'");
  }
  if (v.get_den() == 0) throw Error("zero denominator in '" + raw + "'");
  v.canonicalize();
  return Scalar(f, v);
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_)
    r.r_ = r_ ? p_ - r_ : 0;
  else
    r.q_ = -q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (p_)
    r.r_ = pow_mod(r_, p_ - 2, p_);
  else
    r.q_ = 1 / q_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ -= o.r_;
    if (r_ < 0) r_ += p_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = r_ * o.r_ % p_;
  else
    q_ *= o.q_;
  return *this;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    r_ = mod(r_ - a.r_ * b.r_ % p_, p_);
  } else {
    q_ -= a.q_ * b.q_;
  }
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    r_ = (r_ + a.r_ * b.r_) % p_;
  } else {
    q_ += a.q_ * b.q_;
  }
}

}  // namespace monicgp
