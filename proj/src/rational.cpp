#include "riemann/rational.hpp"

namespace riemann {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational: multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational: addition overflow");
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw OverflowError("rational: negation overflow");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  // Reduce cross terms through the gcd of the denominators first.
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t da = a.den_ / g;
  const std::int64_t db = b.den_ / g;
  return {checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da)), checked_mul(a.den_, db)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 ? a.num_ / g1 : 0;
  const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : 0;
  const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
  return {checked_mul(n1, n2), checked_mul(d1, d2)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw OverflowError("rational: negation overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num_;
  if (r.den_ != 1) os << '/' << r.den_;
  return os;
}

}  // namespace riemann
