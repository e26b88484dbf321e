#include "jforge/scalar.hpp"

#include <cctype>

namespace jforge {

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("BadScalar", "zero denominator");
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("BadScalar", "division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("BadScalar", "inverse of zero");
  return Scalar(mpq_class(1) / v_);
}

static bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Scalar Scalar::parse(const std::string& s) {
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw Error("BadScalar", "cannot parse rational '" + s + "'");
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw Error("BadScalar", "zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sizes differ");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sizes differ");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Scalar(1);
  return v;
}

}  // namespace jforge
