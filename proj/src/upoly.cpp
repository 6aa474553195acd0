#include "sylsum/upoly.hpp"

#include <ostream>
#include <utility>

#include "sylsum/errors.hpp"

namespace sylsum {

UPoly::UPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly UPoly::monomial(std::size_t k, Rational coeff) {
  std::vector<Rational> c(k + 1);
  c[k] = std::move(coeff);
  return UPoly(std::move(c));
}

UPoly UPoly::linear_factor(const Rational& root) { return UPoly({-root, Rational(1)}); }

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational UPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& rhs) { return *this = *this * rhs; }

UPoly& UPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Rational UPoly::eval(const Rational& v) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == Rational(1);
    if (k == 0 || !unit) out += magnitude.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> poly_divmod(const UPoly& p, const UPoly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const std::size_t dq = *q.degree();
  std::vector<Rational> rem = p.coeffs();
  if (rem.size() <= dq) return {UPoly(), p};
  std::vector<Rational> quot(rem.size() - dq);
  const Rational lead = q.leading();
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k].is_zero()) continue;
    const Rational factor = rem[k] / lead;
    quot[k - dq] = factor;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= factor * q.coeffs()[j];
  }
  rem.resize(dq);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly poly_exact_div(const UPoly& p, const UPoly& q) {
  auto [quot, rem] = poly_divmod(p, q);
  if (!rem.is_zero()) {
    throw Error(Errc::NotDivisible,
                "(" + p.to_string() + ") / (" + q.to_string() + ") leaves remainder " +
                    rem.to_string());
  }
  return quot;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace sylsum
