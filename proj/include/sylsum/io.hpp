#ifndef SYLSUM_IO_HPP
#define SYLSUM_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "sylsum/rational.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/upoly.hpp"

namespace sylsum {

using Json = nlohmann::ordered_json;

/// A subresultant request, either from coefficients or from roots.
struct SresQuery {
  std::optional<UPoly> f;
  std::optional<UPoly> g;
  std::optional<RootMultiset> a;
  std::optional<RootMultiset> b;
  int d = 0;

  /// f and g, built from the roots when only those were given.
  UPoly f_poly() const;
  UPoly g_poly() const;
};

using Instance = std::variant<RootMultiset, UPoly, SresQuery>;

Json to_json(const Rational& q);
Json to_json(const UPoly& p);
Json to_json(const RootMultiset& s);
Json to_json(const SresQuery& q);

/// Accepts a JSON string ("3/2") or a JSON integer.
Rational rational_from_json(const Json& j);
/// {"coeffs": [...]} in ascending order.
UPoly poly_from_json(const Json& j);
/// {"roots": [{"value": "p/q", "mult": k}, ...]}.
RootMultiset multiset_from_json(const Json& j);
/// {"f": poly, "g": poly, "d": k} or {"A": roots, "B": roots, "d": k}.
SresQuery query_from_json(const Json& j);

/// Shorthand "1:2,3/2:1" (value:multiplicity, multiplicity defaults to 1).
/// Repeated values merge. The empty string is the empty multiset.
RootMultiset parse_multiset_shorthand(std::string_view text);

/// Multiset from JSON text or shorthand.
RootMultiset parse_multiset(std::string_view text);
/// Polynomial from JSON text or from comma-separated ascending coefficients.
UPoly parse_poly(std::string_view text);
/// Comma-separated rationals, e.g. an evaluation point list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// JSON objects dispatch on their keys ("roots", "coeffs", "d");
/// anything else is read as multiset shorthand. Throws Error(ParseError)
/// with a position, or Error(ValidationError) naming the violated constraint.
Instance parse_instance(std::string_view text);

/// Parses JSON text, turning library exceptions into Error(ParseError).
Json parse_json(std::string_view text);

}  // namespace sylsum

#endif
