#ifndef SYLSUM_UPOLY_HPP
#define SYLSUM_UPOLY_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sylsum/rational.hpp"

namespace sylsum {

/// Dense univariate polynomial over Rational, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree (degree() returns nullopt).
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  /// The monomial x^k.
  static UPoly monomial(std::size_t k, Rational coeff = Rational(1));
  /// x - root.
  static UPoly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::optional<std::size_t> degree() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the stored range.
  Rational coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  UPoly& operator*=(const Rational& rhs);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& b) { return a *= b; }
  friend UPoly operator*(const Rational& a, UPoly b) { return b *= a; }

  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Horner evaluation.
  Rational eval(const Rational& v) const;

  /// "x^2 - 3*x + 2" style rendering.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

inline UPoly poly_add(const UPoly& p, const UPoly& q) { return p + q; }
inline UPoly poly_mul(const UPoly& p, const UPoly& q) { return p * q; }
inline Rational poly_eval(const UPoly& p, const Rational& v) { return p.eval(v); }

/// Euclidean division by q with the quotient returned only when the
/// remainder vanishes. Throws Error(DivisionByZeroPoly) for q = 0 and
/// Error(NotDivisible) otherwise.
UPoly poly_exact_div(const UPoly& p, const UPoly& q);

/// Quotient and remainder of euclidean division; q must be nonzero.
std::pair<UPoly, UPoly> poly_divmod(const UPoly& p, const UPoly& q);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace sylsum

#endif
