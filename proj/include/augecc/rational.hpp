#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace augecc {

using BigInt = mpz_class;

// Exact signed rational backed by GMP. Always kept in lowest terms with a
// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t v) : q_(static_cast<long>(v)) {}
  Rational(const BigInt &v) : q_(v) {}
  Rational(const BigInt &num, const BigInt &den);
  Rational(std::int64_t num, std::int64_t den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  double to_double() const { return q_.get_d(); }

  // "p/q", or "p" when the value is an integer.
  std::string str() const { return q_.get_str(); }
  // Fixed-point rendering with the given number of decimals, rounded half
  // away from zero. Exact for arbitrarily large values.
  std::string decimal(int places = 6) const;

  // Parses "p", "-p" or "p/q".
  static Rational parse(const std::string &text);

  const mpq_class &raw() const { return q_; }

private:
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

BigInt pow(const BigInt &base, unsigned long exp);

} // namespace augecc
