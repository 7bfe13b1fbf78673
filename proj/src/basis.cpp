#include "linfty/basis.hpp"

#include "linfty/errors.hpp"

namespace linfty {

int GradedBasis::add(std::string label, int degree) {
  if (index_.count(label)) throw DuplicateLabel("duplicate basis label '" + label + "'");
  int idx = size();
  index_.emplace(label, idx);
  degrees_.insert(degree);
  items_.emplace_back(std::move(label), degree);
  return idx;
}

std::optional<int> GradedBasis::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GradedBasis::require(std::string_view label) const {
  auto idx = find(label);
  if (!idx) throw UnknownLabel("unknown basis label '" + std::string(label) + "'");
  return *idx;
}

Vec Vec::unit(int idx, Scalar coeff) {
  Vec v;
  v.add_term(idx, coeff);
  return v;
}

Scalar Vec::coeff(int idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? Scalar() : it->second;
}

void Vec::add_term(int idx, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = c_.emplace(idx, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Vec Vec::operator-() const {
  Vec r;
  for (const auto& [idx, s] : c_) r.c_.emplace(idx, -s);
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [idx, s] : o.c_) add_term(idx, s);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [idx, s] : o.c_) add_term(idx, -s);
  return *this;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r;
  if (s.is_zero()) return r;
  for (const auto& [idx, c] : c_) r.add_term(idx, c * s);
  return r;
}

bool Vec::operator==(const Vec& o) const {
  if (c_.size() != o.c_.size()) return false;
  auto it = o.c_.begin();
  for (const auto& [idx, s] : c_) {
    if (it->first != idx || !(it->second == s)) return false;
    ++it;
  }
  return true;
}

std::optional<int> Vec::degree(const GradedBasis& basis) const {
  std::optional<int> d;
  for (const auto& [idx, s] : c_) {
    int di = basis.degree(idx);
    if (!d)
      d = di;
    else if (*d != di)
      return std::nullopt;
  }
  return d;
}

bool Vec::homogeneous(const GradedBasis& basis) const {
  return is_zero() || degree(basis).has_value();
}

bool Vec::homogeneous_of(const GradedBasis& basis, int d) const {
  if (is_zero()) return true;
  auto deg = degree(basis);
  return deg && *deg == d;
}

std::string Vec::str(const GradedBasis& basis) const {
  if (c_.empty()) return "{}";
  std::string s = "{ ";
  bool first = true;
  for (const auto& [idx, coeff] : c_) {
    if (!first) s += ", ";
    first = false;
    s += basis.label(idx) + ": " + coeff.str();
  }
  s += " }";
  return s;
}

}  // namespace linfty
