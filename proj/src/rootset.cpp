#include "sylsum/rootset.hpp"

#include <algorithm>

#include "sylsum/errors.hpp"

namespace sylsum {

RootMultiset::RootMultiset(std::vector<RootEntry> entries) {
  for (const auto& e : entries) {
    if (e.mult == 0) {
      throw Error(Errc::ValidationError,
                  "multiplicity of " + e.value.to_string() + " must be at least 1");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.value < b.value; });
  for (auto& e : entries) {
    size_ += e.mult;
    if (!entries_.empty() && entries_.back().value == e.value) {
      entries_.back().mult += e.mult;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

RootMultiset RootMultiset::from_values(std::span<const Rational> values) {
  std::vector<RootEntry> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back({v, 1});
  return RootMultiset(std::move(e));
}

RootMultiset RootMultiset::from_values(std::initializer_list<Rational> values) {
  return from_values(std::span<const Rational>(values.begin(), values.size()));
}

std::size_t RootMultiset::multiplicity(const Rational& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const RootEntry& e, const Rational& x) { return e.value < x; });
  return (it != entries_.end() && it->value == v) ? it->mult : 0;
}

std::vector<Rational> RootMultiset::expanded() const {
  std::vector<Rational> out;
  out.reserve(size_);
  for (const auto& e : entries_) out.insert(out.end(), e.mult, e.value);
  return out;
}

std::vector<Rational> RootMultiset::values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

RootMultiset RootMultiset::merged(const RootMultiset& other) const {
  std::vector<RootEntry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return RootMultiset(std::move(all));
}

RootMultiset RootMultiset::minus(const RootMultiset& other) const {
  for (const auto& e : other.entries_) {
    if (multiplicity(e.value) < e.mult) {
      throw Error(Errc::ValidationError,
                  other.to_string() + " is not contained in " + to_string());
    }
  }
  std::vector<RootEntry> out;
  for (const auto& e : entries_) {
    const std::size_t take = other.multiplicity(e.value);
    if (e.mult > take) out.push_back({e.value, e.mult - take});
  }
  return RootMultiset(std::move(out));
}

std::string RootMultiset::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ",";
    out += e.value.to_string() + ":" + std::to_string(e.mult);
  }
  return out;
}

SubsetSelection::SubsetSelection(RootMultiset parent, std::vector<int> chosen)
    : parent_(std::move(parent)), chosen_(std::move(chosen)) {
  const int limit = static_cast<int>(parent_.distinct_count());
  for (std::size_t i = 0; i < chosen_.size(); ++i) {
    if (chosen_[i] < 1 || chosen_[i] > limit || (i > 0 && chosen_[i] <= chosen_[i - 1])) {
      throw Error(Errc::IndexOutOfRange, "subset indices must be strictly increasing in 1.." +
                                             std::to_string(limit));
    }
  }
}

RootMultiset SubsetSelection::selected() const {
  std::vector<RootEntry> out;
  for (int i : chosen_) out.push_back({parent_.entries()[i - 1].value, 1});
  return RootMultiset(std::move(out));
}

RootMultiset SubsetSelection::unselected() const {
  std::vector<RootEntry> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < parent_.distinct_count(); ++i) {
    if (next < chosen_.size() && chosen_[next] == static_cast<int>(i + 1)) {
      ++next;
      continue;
    }
    out.push_back({parent_.entries()[i].value, 1});
  }
  return RootMultiset(std::move(out));
}

Rational rprod(const RootMultiset& x, const RootMultiset& y) {
  Rational acc(1);
  for (const auto& ex : x.entries()) {
    for (const auto& ey : y.entries()) {
      acc *= (ex.value - ey.value).pow(static_cast<unsigned>(ex.mult * ey.mult));
    }
  }
  return acc;
}

Rational rprod_point(const Rational& point, const RootMultiset& y) {
  Rational acc(1);
  for (const auto& ey : y.entries()) acc *= (point - ey.value).pow(static_cast<unsigned>(ey.mult));
  return acc;
}

Rational rprod_points(std::span<const Rational> points, const RootMultiset& y) {
  Rational acc(1);
  for (const auto& p : points) acc *= rprod_point(p, y);
  return acc;
}

UPoly poly_from_roots(const RootMultiset& a) {
  UPoly out(Rational(1));
  for (const auto& e : a.entries()) {
    const UPoly factor = UPoly::linear_factor(e.value);
    for (std::size_t i = 0; i < e.mult; ++i) out *= factor;
  }
  return out;
}

std::pair<RootMultiset, RootMultiset> multiset_split(const RootMultiset& a) {
  std::vector<RootEntry> distinct;
  std::vector<RootEntry> excess;
  for (const auto& e : a.entries()) {
    distinct.push_back({e.value, 1});
    if (e.mult > 1) excess.push_back({e.value, e.mult - 1});
  }
  return {RootMultiset(std::move(distinct)), RootMultiset(std::move(excess))};
}

}  // namespace sylsum
