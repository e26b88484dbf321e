#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jforge {

/// Error with a stable machine-readable code ("DimensionMismatch",
/// "NotAnIdeal", "NotAdmissible:C3", ...) plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Exact rational number. Always in lowest terms, denominator > 0.
/// The base field of every computation; no rounding ever happens.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors field literals
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optionally signed). Throws Error("BadScalar") on
  /// malformed input or zero denominator.
  static Scalar parse(const std::string& s);

  /// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  Scalar inverse() const;
  Scalar abs() const { return Scalar(mpq_class(::abs(v_))); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

}  // namespace jforge
