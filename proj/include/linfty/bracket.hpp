#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linfty/basis.hpp"
#include "linfty/linear.hpp"

namespace linfty {

enum class AlgebraKind { linfty, ainfty };

std::string algebra_kind_name(AlgebraKind k);

// Sort a basis tuple into nondecreasing index order and return the combined
// permutation-parity-times-Koszul sign relating the input to the canonical
// order. The sign is 0 when a repeated even-degree element forces the value
// of any graded-antisymmetric bracket to vanish.
std::pair<std::vector<int>, int> canonical_form(const GradedBasis& basis,
                                                std::span<const int> tuple);

// Arity-k multilinear bracket stored through structure constants on basis
// tuples. In graded mode only canonical (nondecreasing) tuples are stored and
// permuted arguments are recovered through canonical_form; in ordered mode
// (A-infinity products, which carry no symmetry) every tuple is stored as is.
// Values may live over a different basis than the domain (used for the
// section f, whose outputs live over U).
class MultiBracket {
 public:
  MultiBracket(GradedBasis domain, int arity, bool graded);

  int arity() const { return arity_; }
  bool graded() const { return graded_; }
  const GradedBasis& domain() const { return domain_; }
  const std::map<std::vector<int>, Vec>& table() const { return table_; }
  bool empty() const { return table_.empty(); }

  // Install a structure constant. Zero values are skipped. In graded mode the
  // tuple must be canonical and not forced to zero.
  void set(std::vector<int> tuple, Vec value);

  // Value on a basis tuple, in any order, with the graded sign applied.
  Vec eval_basis(std::span<const int> tuple) const;
  Vec eval_basis(std::initializer_list<int> tuple) const;

  // Multilinear extension. Arguments must be homogeneous over the domain.
  Vec eval(std::span<const Vec> args) const;
  Vec eval(std::initializer_list<Vec> args) const;

 private:
  GradedBasis domain_;
  int arity_;
  bool graded_;
  std::map<std::vector<int>, Vec> table_;
};

// Collection {l_k} or {m_k}.
struct BracketSet {
  AlgebraKind kind = AlgebraKind::linfty;
  std::map<int, MultiBracket> ops;

  const MultiBracket* bracket(int arity) const;
  int max_arity() const;
};

struct HomotopyAlgebra {
  Ring ring = Ring::Q;
  GradedBasis basis;
  BracketSet brackets;

  // Shared domain, arity keys, graded flags, and the degree rule
  // deg(out) = k - 2 + sum(deg(in)) for every stored constant.
  void validate() const;
};

// Binary product table on a degree-0 basis; bilinear, no symmetry assumed.
struct StarProduct {
  Ring ring = Ring::Q;
  GradedBasis basis;
  std::map<std::pair<int, int>, Vec> table;

  Vec eval_basis(int a, int b) const;
  Vec eval(const Vec& a, const Vec& b) const;
  void set(int a, int b, Vec value);
};

// Jac(u, v, w) = [[u,v],w] + [[v,w],u] + [[w,u],v] for an arity-2 bracket.
// Arguments must be homogeneous of degree 0.
Vec jacobiator(const MultiBracket& l2, const Vec& u, const Vec& v, const Vec& w);

// Ass(a, b, c) = (a*b)*c - a*(b*c).
Vec associator(const StarProduct& p, const Vec& a, const Vec& b, const Vec& c);

}  // namespace linfty
