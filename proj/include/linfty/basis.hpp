#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linfty/scalar.hpp"

namespace linfty {

// Ordered list of (label, degree). The declared order is the fixed basis
// order used for canonical tuples everywhere.
class GradedBasis {
 public:
  int add(std::string label, int degree);  // returns the new index
  int size() const { return static_cast<int>(items_.size()); }
  const std::string& label(int idx) const { return items_.at(idx).first; }
  int degree(int idx) const { return items_.at(idx).second; }
  std::optional<int> find(std::string_view label) const;
  int require(std::string_view label) const;  // throws UnknownLabel
  bool has_degree(int d) const { return degrees_.count(d) > 0; }
  const std::vector<std::pair<std::string, int>>& items() const { return items_; }

  bool operator==(const GradedBasis& o) const { return items_ == o.items_; }

 private:
  std::vector<std::pair<std::string, int>> items_;
  std::map<std::string, int, std::less<>> index_;
  std::set<int> degrees_;
};

// Finitely supported coefficient map index -> Scalar over some GradedBasis.
// Zero coefficients are never stored.
class Vec {
 public:
  Vec() = default;
  static Vec unit(int idx, Scalar coeff = Scalar(1));

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Scalar>& coeffs() const { return c_; }
  Scalar coeff(int idx) const;
  void add_term(int idx, const Scalar& s);

  Vec operator-() const;
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  Vec scaled(const Scalar& s) const;
  bool operator==(const Vec& o) const;

  // Degree of a homogeneous vector; nullopt for the zero vector or a mixed one.
  std::optional<int> degree(const GradedBasis& basis) const;
  // Zero vector is homogeneous of every degree.
  bool homogeneous(const GradedBasis& basis) const;
  bool homogeneous_of(const GradedBasis& basis, int d) const;

  std::string str(const GradedBasis& basis) const;  // e.g. "{ e5: -12 }"

 private:
  std::map<int, Scalar> c_;
};

}  // namespace linfty
