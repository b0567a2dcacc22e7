#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pcgauss {

/// Arbitrary-precision signed integer used for every exponent.
using Integer = boost::multiprecision::cpp_int;

inline int sign(const Integer& a) { return a.sign(); }

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Quotient rounded towards negative infinity. `b` must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Remainder with the sign of `b`; for b > 0 the result lies in [0, b).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

struct Bezout {
  Integer gcd;  // non-negative
  Integer u;
  Integer v;
};

/// Extended Euclid: gcd(a, b) = u*a + v*b with gcd >= 0.
///
/// When one argument divides the other the pair is chosen with a zero
/// coefficient on the larger one, so that combining an element with a
/// multiple of itself returns the element unchanged. Otherwise the pair
/// satisfies |u| <= |b/g| and |v| <= |a/g|.
inline Bezout extended_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  if (a != 0 && b % a == 0) return {abs(a), sign(a), 0};
  if (b != 0 && a % b == 0) return {abs(b), 0, sign(b)};
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Inverse of `a` modulo `m` (m >= 1) in [0, m), or nullopt when
/// gcd(a, m) != 1.
inline std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return Integer(0);
  Bezout b = extended_gcd(floor_mod(a, m), m);
  if (b.gcd != 1) return std::nullopt;
  return floor_mod(b.u, m);
}

/// A non-negative integer or infinity. Used for group orders, relative
/// orders and indices.
class Cardinal {
 public:
  Cardinal() : value_(1) {}
  static Cardinal finite(Integer v) {
    if (v < 0) throw std::invalid_argument("Cardinal: negative value");
    return Cardinal(std::move(v));
  }
  static Cardinal infinite() { return Cardinal(std::nullopt); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  /// Throws std::logic_error on infinity.
  const Integer& value() const {
    if (!value_) throw std::logic_error("Cardinal: value of infinity");
    return *value_;
  }

  friend Cardinal operator*(const Cardinal& a, const Cardinal& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Cardinal(*a.value_ * *b.value_);
  }
  Cardinal& operator*=(const Cardinal& other) { return *this = *this * other; }

  friend bool operator==(const Cardinal&, const Cardinal&) = default;

  std::string to_string() const {
    return value_ ? value_->str() : std::string("infinity");
  }
  friend std::ostream& operator<<(std::ostream& os, const Cardinal& c) {
    return os << c.to_string();
  }

 private:
  explicit Cardinal(std::optional<Integer> v) : value_(std::move(v)) {}
  std::optional<Integer> value_;
};

}  // namespace pcgauss
