#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inls {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar of the exponent engine.
///
/// Values are always reduced (gcd(|num|, den) == 1, den >= 1) and carry one
/// distinguished value +infinity, stored as 1/0, which compares greater than
/// every finite rational. 1/infinity == 0. There is no -infinity; operations
/// that would produce one throw std::domain_error, as does division by zero.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_positive() const { return num_ > 0; }  // infinity counts as positive
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  /// 1/x. 1/infinity == 0; 1/0 throws.
  Rational reciprocal() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const;

  /// Canonical string form: "p" for integers, "p/q" otherwise, "inf".
  std::string str() const;

  /// Parses "p", "p/q" or "inf"; throws std::invalid_argument on bad input.
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

private:
  void reduce();

  BigInt num_;
  BigInt den_;  // >= 1 for finite values, 0 encodes +infinity
};

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace inls
