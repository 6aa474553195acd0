#include "sylsum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "sylsum/errors.hpp"

namespace sylsum {

namespace {

mpz_class to_mpz(std::int64_t v) {
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

// Accepts an optional '-' followed by one or more decimal digits.
std::size_t scan_integer(std::string_view text, std::size_t pos, std::size_t offset) {
  std::size_t i = pos;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_begin) {
    throw Error(Errc::ParseError, "expected integer at position " + std::to_string(offset + i) +
                                      " in \"" + std::string(text) + "\"");
  }
  return i;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(begin, end - begin);

  const std::size_t num_end = scan_integer(body, 0, begin);
  std::string num_text(body.substr(0, num_end));
  if (!num_text.empty() && num_text[0] == '+') num_text.erase(0, 1);
  mpz_class num(num_text);
  mpz_class den(1);
  if (num_end < body.size()) {
    if (body[num_end] != '/') {
      throw Error(Errc::ParseError, "unexpected character at position " +
                                        std::to_string(begin + num_end) + " in \"" +
                                        std::string(text) + "\"");
    }
    const std::size_t den_begin = num_end + 1;
    if (den_begin < body.size() && (body[den_begin] == '-' || body[den_begin] == '+')) {
      throw Error(Errc::ParseError, "signed denominator at position " +
                                        std::to_string(begin + den_begin) + " in \"" +
                                        std::string(text) + "\"");
    }
    const std::size_t den_end = scan_integer(body, den_begin, begin);
    if (den_end != body.size()) {
      throw Error(Errc::ParseError, "trailing characters at position " +
                                        std::to_string(begin + den_end) + " in \"" +
                                        std::string(text) + "\"");
    }
    den = mpz_class(std::string(body.substr(den_begin, den_end - den_begin)));
    if (den == 0) {
      throw Error(Errc::ValidationError, "zero denominator in \"" + std::string(text) + "\"");
    }
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational sign_power(long long exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace sylsum
