#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "linfty/errors.hpp"

namespace linfty {

// The three scalar rings, ordered by inclusion Q < Q(i) < Q(i)[mu,mu^-1].
// mu plays the role of a square root of the scaling parameter, so half-integer
// powers of the parameter stay representable with integer exponents.
enum class Ring { Q, Qi, QiLaurent };

std::string ring_name(Ring r);
std::optional<Ring> ring_from_name(std::string_view s);

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_str(const Rational& q);

// Element of Q(i). Kept normalized by mpq_class itself.
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian inverse() const;
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
};

// Finitely supported map exponent -> Gaussian coefficient; zero terms absent.
class Laurent {
 public:
  Laurent() = default;
  static Laurent term(Gaussian c, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Gaussian>& terms() const { return terms_; }
  Gaussian coefficient(int exponent) const;
  int min_exponent() const;  // throws DivisionError on zero

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  // Only units (single-term elements) are invertible.
  Laurent inverse() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  void add_term(int exponent, const Gaussian& c);

 private:
  std::map<int, Gaussian> terms_;
};

// Ring-tagged exact scalar. Arithmetic between different rings promotes both
// operands to the wider ring; all representations stay normalized.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(long n) : v_(Rational(n)) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}
  explicit Scalar(Gaussian g) : v_(std::move(g)) {}
  explicit Scalar(Laurent l) : v_(std::move(l)) {}

  static Scalar zero(Ring r);
  static Scalar one(Ring r);
  static Scalar i();                            // the imaginary unit, in Q(i)
  static Scalar mu_term(Gaussian c, int k);     // c * mu^k

  Ring ring() const;
  bool is_zero() const;
  Scalar promoted(Ring target) const;  // throws RingMismatch on narrowing

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws DivisionError / NonInvertiblePivot
  bool operator==(const Scalar& o) const;

  const Rational& as_rational() const;
  Gaussian as_gaussian() const;   // promotes
  Laurent as_laurent() const;     // promotes

  // Laurent views (promote first for the other rings).
  int min_exponent() const;
  Gaussian mu_coefficient(int k) const;

  // Canonical literal; parse is directed by the declared ring and rejects
  // literals outside it.
  std::string str() const;
  static Scalar parse(std::string_view text, Ring ring);

 private:
  std::variant<Rational, Gaussian, Laurent> v_;
};

}  // namespace linfty
