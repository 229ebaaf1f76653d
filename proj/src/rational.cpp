#include "augecc/rational.hpp"

#include <stdexcept>

namespace augecc {

Rational::Rational(const BigInt &num, const BigInt &den) : q_(num, den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational &Rational::operator/=(const Rational &o) {
  if (o.q_ == 0)
    throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::decimal(int places) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt num = abs(q_.get_num()) * scale;
  BigInt den = q_.get_den();
  BigInt scaled = (2 * num + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  std::string out = q_ < 0 && scaled != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0)
    out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

Rational Rational::parse(const std::string &text) {
  Rational r;
  if (text.empty() || r.q_.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (r.q_.get_den() == 0)
    throw std::domain_error("rational with zero denominator");
  r.q_.canonicalize();
  return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

BigInt pow(const BigInt &base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

} // namespace augecc
