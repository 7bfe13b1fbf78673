#include "linfty/scalar.hpp"

#include <cctype>

namespace linfty {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::Qi: return "Qi";
    case Ring::QiLaurent: return "QiLaurent";
  }
  return "?";
}

std::optional<Ring> ring_from_name(std::string_view s) {
  if (s == "Q") return Ring::Q;
  if (s == "Qi") return Ring::Qi;
  if (s == "QiLaurent") return Ring::QiLaurent;
  return std::nullopt;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DivisionError("division by zero in Q(i)");
  Rational n = re * re + im * im;
  return {re / n, -im / n};
}

Laurent Laurent::term(Gaussian c, int exponent) {
  Laurent l;
  l.add_term(exponent, c);
  return l;
}

void Laurent::add_term(int exponent, const Gaussian& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Gaussian Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Gaussian{} : it->second;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw DivisionError("min_exponent of zero Laurent element");
  return terms_.begin()->first;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
  return r;
}

Laurent Laurent::inverse() const {
  if (terms_.empty()) throw DivisionError("division by zero Laurent element");
  if (terms_.size() != 1)
    throw NonInvertiblePivot("Laurent element with several terms is not a unit");
  const auto& [k, c] = *terms_.begin();
  return term(c.inverse(), -k);
}

Scalar Scalar::zero(Ring r) {
  switch (r) {
    case Ring::Q: return Scalar(Rational(0));
    case Ring::Qi: return Scalar(Gaussian{});
    case Ring::QiLaurent: return Scalar(Laurent{});
  }
  return Scalar();
}

Scalar Scalar::one(Ring r) {
  switch (r) {
    case Ring::Q: return Scalar(Rational(1));
    case Ring::Qi: return Scalar(Gaussian{Rational(1), Rational(0)});
    case Ring::QiLaurent: return Scalar(Laurent::term(Gaussian{Rational(1), Rational(0)}, 0));
  }
  return Scalar();
}

Scalar Scalar::i() { return Scalar(Gaussian{Rational(0), Rational(1)}); }

Scalar Scalar::mu_term(Gaussian c, int k) { return Scalar(Laurent::term(std::move(c), k)); }

Ring Scalar::ring() const {
  switch (v_.index()) {
    case 0: return Ring::Q;
    case 1: return Ring::Qi;
    default: return Ring::QiLaurent;
  }
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q == 0;
  if (const auto* g = std::get_if<Gaussian>(&v_)) return g->is_zero();
  return std::get<Laurent>(v_).is_zero();
}

Scalar Scalar::promoted(Ring target) const {
  Ring cur = ring();
  if (cur == target) return *this;
  if (static_cast<int>(target) < static_cast<int>(cur))
    throw RingMismatch("cannot narrow scalar from " + ring_name(cur) + " to " + ring_name(target));
  if (target == Ring::Qi) return Scalar(as_gaussian());
  return Scalar(as_laurent());
}

const Rational& Scalar::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  throw RingMismatch("scalar is not in Q");
}

Gaussian Scalar::as_gaussian() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Gaussian{*q, Rational(0)};
  if (const auto* g = std::get_if<Gaussian>(&v_)) return *g;
  throw RingMismatch("Laurent scalar is not in Q(i)");
}

Laurent Scalar::as_laurent() const {
  if (const auto* l = std::get_if<Laurent>(&v_)) return *l;
  return Laurent::term(as_gaussian(), 0);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  if (const auto* g = std::get_if<Gaussian>(&v_)) return Scalar(-*g);
  return Scalar(-std::get<Laurent>(v_));
}

namespace {
Ring common_ring(const Scalar& a, const Scalar& b) {
  return static_cast<int>(a.ring()) >= static_cast<int>(b.ring()) ? a.ring() : b.ring();
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  switch (common_ring(a, b)) {
    case Ring::Q: return Scalar(Rational(a.as_rational() + b.as_rational()));
    case Ring::Qi: return Scalar(a.as_gaussian() + b.as_gaussian());
    default: return Scalar(a.as_laurent() + b.as_laurent());
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  switch (common_ring(a, b)) {
    case Ring::Q: return Scalar(Rational(a.as_rational() * b.as_rational()));
    case Ring::Qi: return Scalar(a.as_gaussian() * b.as_gaussian());
    default: return Scalar(a.as_laurent() * b.as_laurent());
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
  if (const auto* q = std::get_if<Rational>(&v_)) {
    if (*q == 0) throw DivisionError("division by zero in Q");
    return Scalar(Rational(1 / *q));
  }
  if (const auto* g = std::get_if<Gaussian>(&v_)) return Scalar(g->inverse());
  return Scalar(std::get<Laurent>(v_).inverse());
}

bool Scalar::operator==(const Scalar& o) const {
  switch (common_ring(*this, o)) {
    case Ring::Q: return as_rational() == o.as_rational();
    case Ring::Qi: return as_gaussian() == o.as_gaussian();
    default: return as_laurent() == o.as_laurent();
  }
}

int Scalar::min_exponent() const { return as_laurent().min_exponent(); }

Gaussian Scalar::mu_coefficient(int k) const { return as_laurent().coefficient(k); }

// ---------------------------------------------------------------------------
// Literals.
//
// Q:         p | p/q
// Qi:        rational | [rational +|-] imag, imag := i | rational*i
// QiLaurent: gaussian, or '+'-joined terms (gaussian)*mu^k with integer k.
// ---------------------------------------------------------------------------

namespace {

std::string gaussian_str(const Gaussian& g) {
  if (g.is_zero()) return "0";
  auto imag_part = [](const Rational& im) -> std::string {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_str(im) + "*i";
  };
  if (g.im == 0) return rational_str(g.re);
  if (g.re == 0) return imag_part(g.im);
  std::string s = rational_str(g.re);
  if (g.im > 0)
    s += "+" + imag_part(g.im);
  else
    s += "-" + imag_part(Rational(-g.im));
  return s;
}

// Tiny scanner over a literal.
class Lex {
 public:
  explicit Lex(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ValidationError("expected digits in scalar literal");
    return std::string(s_.substr(start, pos_ - start));
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

Rational lex_unsigned_rational(Lex& lx) {
  std::string num = lx.digits();
  std::string den = "1";
  if (lx.consume('/')) den = lx.digits();
  Rational q(num + "/" + den);
  if (q.get_den() == 0) throw ValidationError("zero denominator in scalar literal");
  q.canonicalize();
  return q;
}

// One signed gaussian summand: i | rat | rat*i.
struct GTerm {
  Rational value;
  bool imaginary = false;
};

GTerm lex_gterm(Lex& lx, bool negative) {
  GTerm t;
  if (lx.consume_word("i")) {
    t.value = Rational(1);
    t.imaginary = true;
  } else {
    t.value = lex_unsigned_rational(lx);
    if (lx.consume('*')) {
      if (!lx.consume_word("i")) throw ValidationError("expected 'i' after '*'");
      t.imaginary = true;
    } else if (lx.consume_word("i")) {
      t.imaginary = true;
    }
  }
  if (negative) t.value = -t.value;
  return t;
}

Gaussian lex_gaussian(Lex& lx) {
  Gaussian g;
  bool neg = lx.consume('-');
  GTerm first = lex_gterm(lx, neg);
  (first.imaginary ? g.im : g.re) = first.value;
  char c = lx.peek();
  if (c == '+' || c == '-') {
    if (first.imaginary)
      throw ValidationError("gaussian literal must be real part then imaginary part");
    bool neg2 = (c == '-');
    lx.consume(c);
    GTerm second = lex_gterm(lx, neg2);
    if (!second.imaginary)
      throw ValidationError("gaussian literal must be real part then imaginary part");
    g.im = second.value;
  }
  return g;
}

int lex_exponent(Lex& lx) {
  bool neg = lx.consume('-');
  std::string d = lx.digits();
  long v = 0;
  try {
    v = std::stol(d);
  } catch (const std::exception&) {
    throw ValidationError("mu exponent out of range");
  }
  if (v > 1'000'000) throw ValidationError("mu exponent out of range");
  return neg ? -static_cast<int>(v) : static_cast<int>(v);
}

Laurent lex_laurent(Lex& lx) {
  Laurent result;
  bool first = true;
  while (true) {
    bool neg = false;
    if (!first) {
      char c = lx.peek();
      if (c != '+' && c != '-') break;
      lx.consume(c);
      neg = (c == '-');
    } else if (lx.peek() == '-') {
      lx.consume('-');
      neg = true;
    }
    Gaussian coeff;
    int exponent = 0;
    if (lx.peek() == '(') {
      lx.consume('(');
      coeff = lex_gaussian(lx);
      if (!lx.consume(')')) throw ValidationError("expected ')' in Laurent literal");
      lx.consume('*');
      if (lx.consume_word("mu")) {
        if (!lx.consume('^')) throw ValidationError("expected '^' after mu");
        exponent = lex_exponent(lx);
      }
    } else {
      // bare gaussian summand, taken at mu^0
      GTerm t = lex_gterm(lx, false);
      coeff = t.imaginary ? Gaussian{Rational(0), t.value} : Gaussian{t.value, Rational(0)};
    }
    if (neg) coeff = -coeff;
    result.add_term(exponent, coeff);
    first = false;
    if (lx.done()) break;
  }
  return result;
}

}  // namespace

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return rational_str(*q);
  if (const auto* g = std::get_if<Gaussian>(&v_)) return gaussian_str(*g);
  const Laurent& l = std::get<Laurent>(v_);
  if (l.is_zero()) return "0";
  bool all_zero_exp = l.terms().size() == 1 && l.terms().begin()->first == 0;
  if (all_zero_exp) return gaussian_str(l.terms().begin()->second);
  std::string s;
  for (const auto& [k, c] : l.terms()) {
    if (!s.empty()) s += "+";
    s += "(" + gaussian_str(c) + ")*mu^" + std::to_string(k);
  }
  return s;
}

Scalar Scalar::parse(std::string_view text, Ring ring) {
  Lex lx(text);
  Scalar out;
  try {
    switch (ring) {
      case Ring::Q: {
        bool neg = lx.consume('-');
        Rational q = lex_unsigned_rational(lx);
        if (neg) q = -q;
        out = Scalar(q);
        break;
      }
      case Ring::Qi: {
        out = Scalar(lex_gaussian(lx));
        break;
      }
      case Ring::QiLaurent: {
        out = Scalar(lex_laurent(lx));
        break;
      }
    }
  } catch (const RingMismatch&) {
    throw;
  } catch (const Error& e) {
    throw RingMismatch("bad " + ring_name(ring) + " literal '" + std::string(text) +
                       "': " + e.what());
  }
  if (!lx.done())
    throw RingMismatch("trailing input in " + ring_name(ring) + " literal '" + std::string(text) +
                       "'");
  return out;
}

}  // namespace linfty
