#include "inls/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <charconv>
#include <ostream>

namespace inls {

namespace {

[[noreturn]] void throw_domain(const char* what) { throw std::domain_error(what); }

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw_domain("rational division by zero");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::reciprocal() const {
  if (is_infinite()) return Rational(0);
  if (num_ == 0) throw_domain("rational division by zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  if (is_infinite()) throw_domain("negative infinity is not representable");
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.is_infinite()) throw_domain("negative infinity is not representable");
  if (a.is_infinite()) return Rational::infinity();
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    const Rational& finite = a.is_infinite() ? b : a;
    if (a.is_infinite() && b.is_infinite()) return Rational::infinity();
    if (finite.is_zero()) throw_domain("zero times infinity is undefined");
    if (finite.is_negative()) throw_domain("negative infinity is not representable");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_infinite()) {
    if (a.is_infinite()) throw_domain("infinity over infinity is undefined");
    return Rational(0);
  }
  if (b.is_zero()) throw_domain("rational division by zero");
  if (a.is_infinite()) {
    if (b.is_negative()) throw_domain("negative infinity is not representable");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.num_ * b.den_ < b.num_ * a.den_;
}

double Rational::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = strip(text);
  if (text.empty()) return std::nullopt;
  if (text == "inf" || text == "+inf" || text == "infinity") return Rational::infinity();

  auto parse_int = [&](std::string_view v) -> std::optional<BigInt> {
    v = strip(v);
    if (v.empty()) return std::nullopt;
    bool neg = false;
    if (v.front() == '+' || v.front() == '-') {
      neg = v.front() == '-';
      v.remove_prefix(1);
    }
    if (v.empty()) return std::nullopt;
    BigInt value = 0;
    for (char c : v) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + (c - '0');
    }
    return neg ? BigInt(-value) : value;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n, BigInt(1));
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  return *r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace inls
