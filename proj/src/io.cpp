#include "sylsum/io.hpp"

#include <algorithm>
#include <cctype>

#include "sylsum/errors.hpp"
#include "sylsum/sylvester.hpp"

namespace sylsum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && (text.front() == '{' || text.front() == '[');
}

// Splits on commas, remembering where each piece starts.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.emplace_back(text.substr(start, comma - start), start);
    start = comma + 1;
  }
  return out;
}

Rational parse_at(std::string_view piece, std::size_t offset) {
  try {
    return Rational::parse(piece);
  } catch (const Error& e) {
    if (e.code() != Errc::ParseError) throw;
    throw Error(Errc::ParseError, "in item at position " + std::to_string(offset) + ": " + e.detail());
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::ValidationError, std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw Error(Errc::ValidationError, std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

UPoly SresQuery::f_poly() const {
  if (f) return *f;
  if (a) return poly_from_roots(*a);
  throw Error(Errc::ValidationError, "query has neither f nor A");
}

UPoly SresQuery::g_poly() const {
  if (g) return *g;
  if (b) return poly_from_roots(*b);
  throw Error(Errc::ValidationError, "query has neither g nor B");
}

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  return Json{{"coeffs", coeffs}};
}

Json to_json(const RootMultiset& s) {
  Json roots = Json::array();
  for (const auto& e : s.entries()) roots.push_back(Json{{"value", e.value.to_string()}, {"mult", e.mult}});
  return Json{{"roots", roots}};
}

Json to_json(const SresQuery& q) {
  Json out = Json::object();
  if (q.f) out["f"] = to_json(*q.f);
  if (q.g) out["g"] = to_json(*q.g);
  if (q.a) out["A"] = to_json(*q.a);
  if (q.b) out["B"] = to_json(*q.b);
  out["d"] = q.d;
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(Errc::ValidationError, "rational must be a string \"p/q\" or an integer, got " + j.dump());
}

UPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw Error(Errc::ValidationError, "polynomial must be {\"coeffs\": [...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return UPoly(std::move(coeffs));
}

RootMultiset multiset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("roots") || !j.at("roots").is_array()) {
    throw Error(Errc::ValidationError, "multiset must be {\"roots\": [...]}");
  }
  std::vector<RootEntry> entries;
  for (const auto& r : j.at("roots")) {
    if (!r.is_object() || !r.contains("value")) {
      throw Error(Errc::ValidationError, "root entry needs a \"value\"");
    }
    std::int64_t mult = 1;
    if (r.contains("mult")) {
      if (!r.at("mult").is_number_integer()) {
        throw Error(Errc::ValidationError, "\"mult\" must be an integer");
      }
      mult = r.at("mult").get<std::int64_t>();
    }
    if (mult < 1) throw Error(Errc::ValidationError, "multiplicity must be at least 1");
    entries.push_back({rational_from_json(r.at("value")), static_cast<std::size_t>(mult)});
  }
  return RootMultiset(std::move(entries));
}

SresQuery query_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ValidationError, "query must be a JSON object");
  SresQuery q;
  if (j.contains("f")) q.f = poly_from_json(j.at("f"));
  if (j.contains("g")) q.g = poly_from_json(j.at("g"));
  if (j.contains("A")) q.a = multiset_from_json(j.at("A"));
  if (j.contains("B")) q.b = multiset_from_json(j.at("B"));
  q.d = int_field(j, "d");
  if (!(q.f || q.a) || !(q.g || q.b)) {
    throw Error(Errc::ValidationError, "query needs f or A, and g or B");
  }
  const UPoly f = q.f_poly();
  const UPoly g = q.g_poly();
  if (f.is_constant() || g.is_constant()) {
    throw Error(Errc::ValidationError, "deg f >= 1 and deg g >= 1 required");
  }
  const int m = static_cast<int>(*f.degree());
  const int n = static_cast<int>(*g.degree());
  if (!in_degree_window(m, n, q.d)) {
    throw Error(Errc::ValidationError,
                "d=" + std::to_string(q.d) + " violates 0 <= d <= min(m,n) (d < m when m = n) for m=" +
                    std::to_string(m) + ", n=" + std::to_string(n));
  }
  return q;
}

RootMultiset parse_multiset_shorthand(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) return RootMultiset();
  std::vector<RootEntry> entries;
  for (const auto& [piece, offset] : split_commas(body)) {
    const std::size_t colon = piece.find(':');
    const std::string_view value_text = piece.substr(0, colon);
    Rational value = parse_at(value_text, offset);
    std::size_t mult = 1;
    if (colon != std::string_view::npos) {
      const std::string_view mult_text = trim(piece.substr(colon + 1));
      const std::size_t mult_offset = offset + colon + 1;
      if (mult_text.empty() ||
          !std::all_of(mult_text.begin(), mult_text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(Errc::ParseError, "expected multiplicity at position " +
                                          std::to_string(mult_offset) + " in \"" +
                                          std::string(text) + "\"");
      }
      mult = std::stoul(std::string(mult_text));
      if (mult == 0) {
        throw Error(Errc::ValidationError, "multiplicity must be at least 1 (position " +
                                               std::to_string(mult_offset) + ")");
      }
    }
    entries.push_back({std::move(value), mult});
  }
  return RootMultiset(std::move(entries));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

RootMultiset parse_multiset(std::string_view text) {
  if (looks_like_json(text)) return multiset_from_json(parse_json(text));
  return parse_multiset_shorthand(text);
}

UPoly parse_poly(std::string_view text) {
  if (looks_like_json(text)) return poly_from_json(parse_json(text));
  return UPoly(parse_rational_list(text));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<Rational> out;
  if (body.empty()) return out;
  for (const auto& [piece, offset] : split_commas(body)) out.push_back(parse_at(piece, offset));
  return out;
}

Instance parse_instance(std::string_view text) {
  if (!looks_like_json(text)) return parse_multiset_shorthand(text);
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("d")) return query_from_json(j);
  if (j.is_object() && j.contains("roots")) return multiset_from_json(j);
  if (j.is_object() && j.contains("coeffs")) return poly_from_json(j);
  throw Error(Errc::ValidationError, "JSON object needs \"roots\", \"coeffs\" or \"d\"");
}

}  // namespace sylsum
