#include "linfty/bracket.hpp"

#include <numeric>

#include "linfty/errors.hpp"

namespace linfty {

std::string algebra_kind_name(AlgebraKind k) {
  return k == AlgebraKind::linfty ? "linfty" : "ainfty";
}

std::pair<std::vector<int>, int> canonical_form(const GradedBasis& basis,
                                                std::span<const int> tuple) {
  std::vector<int> t(tuple.begin(), tuple.end());
  for (int idx : t) {
    if (idx < 0 || idx >= basis.size()) throw UnknownLabel("tuple index outside the basis");
  }
  int sign = 1;
  // Insertion sort; each adjacent swap of elements a, b contributes the
  // graded-antisymmetry factor -(-1)^{deg a * deg b}.
  for (size_t p = 1; p < t.size(); ++p) {
    for (size_t q = p; q > 0 && t[q - 1] > t[q]; --q) {
      bool both_odd = (basis.degree(t[q - 1]) % 2) && (basis.degree(t[q]) % 2);
      sign = both_odd ? sign : -sign;
      std::swap(t[q - 1], t[q]);
    }
  }
  for (size_t p = 1; p < t.size(); ++p) {
    if (t[p] == t[p - 1] && basis.degree(t[p]) % 2 == 0) {
      sign = 0;
      break;
    }
  }
  return {std::move(t), sign};
}

MultiBracket::MultiBracket(GradedBasis domain, int arity, bool graded)
    : domain_(std::move(domain)), arity_(arity), graded_(graded) {
  if (arity < 1) throw ArityMismatch("bracket arity must be at least 1");
}

void MultiBracket::set(std::vector<int> tuple, Vec value) {
  if (static_cast<int>(tuple.size()) != arity_)
    throw ArityMismatch("tuple length does not match the bracket arity");
  for (int idx : tuple) {
    if (idx < 0 || idx >= domain_.size()) throw UnknownLabel("tuple index outside the basis");
  }
  if (graded_) {
    auto [canon, sign] = canonical_form(domain_, tuple);
    if (canon != tuple)
      throw ValidationError("graded bracket entries must use the canonical (sorted) tuple");
    if (sign == 0 && !value.is_zero())
      throw ForcedZeroViolated("graded symmetry forces this entry to vanish");
  }
  if (value.is_zero()) return;
  auto [it, inserted] = table_.emplace(std::move(tuple), std::move(value));
  if (!inserted) throw ValidationError("duplicate bracket entry");
}

Vec MultiBracket::eval_basis(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw ArityMismatch("tuple length does not match the bracket arity");
  if (!graded_) {
    std::vector<int> key(tuple.begin(), tuple.end());
    auto it = table_.find(key);
    return it == table_.end() ? Vec() : it->second;
  }
  auto [canon, sign] = canonical_form(domain_, tuple);
  if (sign == 0) return Vec();
  auto it = table_.find(canon);
  if (it == table_.end()) return Vec();
  return sign == 1 ? it->second : -it->second;
}

Vec MultiBracket::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ArityMismatch("argument count does not match the bracket arity");
  for (const Vec& a : args) {
    if (!a.homogeneous(domain_))
      throw NonHomogeneousArgument("bracket arguments must be homogeneous");
    if (a.is_zero()) return Vec();
  }
  Vec out;
  // Odometer over the supports of all arguments.
  std::vector<std::vector<std::pair<int, Scalar>>> supports(args.size());
  for (size_t p = 0; p < args.size(); ++p)
    supports[p].assign(args[p].coeffs().begin(), args[p].coeffs().end());
  std::vector<size_t> pos(args.size(), 0);
  std::vector<int> tuple(args.size());
  while (true) {
    Scalar coeff = Scalar(1);
    for (size_t p = 0; p < args.size(); ++p) {
      tuple[p] = supports[p][pos[p]].first;
      coeff *= supports[p][pos[p]].second;
    }
    Vec v = eval_basis(tuple);
    if (!v.is_zero()) out += v.scaled(coeff);
    size_t p = 0;
    while (p < pos.size() && ++pos[p] == supports[p].size()) {
      pos[p] = 0;
      ++p;
    }
    if (p == pos.size()) break;
  }
  return out;
}

Vec MultiBracket::eval_basis(std::initializer_list<int> tuple) const {
  return eval_basis(std::span<const int>(tuple.begin(), tuple.size()));
}

Vec MultiBracket::eval(std::initializer_list<Vec> args) const {
  std::vector<Vec> v(args);
  return eval(std::span<const Vec>(v));
}

const MultiBracket* BracketSet::bracket(int arity) const {
  auto it = ops.find(arity);
  return it == ops.end() ? nullptr : &it->second;
}

int BracketSet::max_arity() const { return ops.empty() ? 0 : ops.rbegin()->first; }

void HomotopyAlgebra::validate() const {
  for (const auto& [arity, op] : brackets.ops) {
    if (op.arity() != arity) throw ValidationError("bracket stored under the wrong arity key");
    if (op.graded() != (brackets.kind == AlgebraKind::linfty))
      throw ValidationError("bracket symmetry mode does not match the algebra kind");
    if (!(op.domain() == basis)) throw ValidationError("bracket domain differs from the basis");
    for (const auto& [tuple, value] : op.table()) {
      int deg = arity - 2;
      for (int idx : tuple) deg += basis.degree(idx);
      if (!value.homogeneous_of(basis, deg))
        throw DegreeRuleViolation("bracket value violates the intrinsic degree rule");
    }
  }
}

Vec StarProduct::eval_basis(int a, int b) const {
  auto it = table.find({a, b});
  return it == table.end() ? Vec() : it->second;
}

void StarProduct::set(int a, int b, Vec value) {
  if (a < 0 || a >= basis.size() || b < 0 || b >= basis.size())
    throw UnknownLabel("product index outside the basis");
  if (value.is_zero()) return;
  auto [it, inserted] = table.emplace(std::make_pair(a, b), std::move(value));
  if (!inserted) throw ValidationError("duplicate product entry");
}

Vec StarProduct::eval(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ci] : a.coeffs())
    for (const auto& [j, cj] : b.coeffs()) {
      Vec v = eval_basis(i, j);
      if (!v.is_zero()) out += v.scaled(ci * cj);
    }
  return out;
}

Vec jacobiator(const MultiBracket& l2, const Vec& u, const Vec& v, const Vec& w) {
  if (l2.arity() != 2) throw ArityMismatch("jacobiator needs an arity-2 bracket");
  for (const Vec* a : {&u, &v, &w}) {
    if (!a->homogeneous_of(l2.domain(), 0))
      throw NonHomogeneousArgument("jacobiator arguments must be homogeneous of degree 0");
  }
  return l2.eval({l2.eval({u, v}), w}) + l2.eval({l2.eval({v, w}), u}) +
         l2.eval({l2.eval({w, u}), v});
}

Vec associator(const StarProduct& p, const Vec& a, const Vec& b, const Vec& c) {
  return p.eval(p.eval(a, b), c) - p.eval(a, p.eval(b, c));
}

}  // namespace linfty
