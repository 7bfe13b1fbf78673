#include "linfty/zoo.hpp"

#include <algorithm>

#include "linfty/errors.hpp"

namespace linfty {

int eps3(int i, int j, int k) {
  int idx[3] = {i, j, k};
  int sign = 1;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      if (idx[p] == idx[q]) return 0;
      if (idx[p] > idx[q]) sign = -sign;
    }
  return sign;
}

int eps7(const int (&idx)[7]) {
  int sign = 1;
  for (int p = 0; p < 7; ++p)
    for (int q = p + 1; q < 7; ++q) {
      if (idx[p] == idx[q]) return 0;
      if (idx[p] > idx[q]) sign = -sign;
    }
  return sign;
}

namespace {

// Spread one independent component over all six permutations with the sign.
void assign_antisym(EtaTensor& eta, int a, int b, int c, int value) {
  const int arr[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
  const int sgn[6] = {1, -1, -1, 1, 1, -1};
  for (int p = 0; p < 6; ++p) eta.v[arr[p][0]][arr[p][1]][arr[p][2]] = sgn[p] * value;
}

}  // namespace

EtaTensor octonion_eta() {
  EtaTensor eta;
  // eta_{ijk} = eps_{ijk} on unbarred indices
  assign_antisym(eta, 1, 2, 3, 1);
  // eta_{i jbar kbar} = -eps_{ijk}
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = j + 1; k <= 3; ++k) {
        int value = -eps3(i, j, k);
        if (value != 0) assign_antisym(eta, i, j + 3, k + 3, value);
      }
  // eta_{7 i ibar} = 1
  for (int i = 1; i <= 3; ++i) assign_antisym(eta, 7, i, i + 3, 1);
  return eta;
}

ThetaTensor octonion_theta() {
  ThetaTensor theta;
  EtaTensor eta = octonion_eta();
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b)
      for (int c = 1; c <= 7; ++c)
        for (int d = 1; d <= 7; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          bool in_abcd[8] = {};
          in_abcd[a] = in_abcd[b] = in_abcd[c] = in_abcd[d] = true;
          int comp[3];
          int p = 0;
          for (int e = 1; e <= 7; ++e)
            if (!in_abcd[e]) comp[p++] = e;
          int idx[7] = {a, b, c, d, comp[0], comp[1], comp[2]};
          theta.v[a][b][c][d] = eps7(idx) * eta.at(comp[0], comp[1], comp[2]);
        }
  return theta;
}

HomotopyAlgebra imaginary_octonions() {
  EtaTensor eta = octonion_eta();
  GradedBasis basis;
  for (int a = 1; a <= 7; ++a) basis.add("e" + std::to_string(a), 0);
  MultiBracket l2(basis, 2, true);
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) {
      Vec value;
      for (int c = 1; c <= 7; ++c) value.add_term(c - 1, Scalar(2 * eta.at(a, b, c)));
      l2.set({a - 1, b - 1}, std::move(value));
    }
  HomotopyAlgebra out{Ring::Q, std::move(basis), BracketSet{AlgebraKind::linfty, {}}};
  out.brackets.ops.emplace(2, std::move(l2));
  out.validate();
  return out;
}

StarProduct octonion_star() {
  EtaTensor eta = octonion_eta();
  StarProduct p;
  p.ring = Ring::Q;
  p.basis.add("one", 0);
  for (int a = 1; a <= 7; ++a) p.basis.add("e" + std::to_string(a), 0);
  for (int j = 0; j <= 7; ++j) {
    p.set(0, j, Vec::unit(j));
    if (j != 0) p.set(j, 0, Vec::unit(j));
  }
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b) {
      Vec value;
      if (a == b) value.add_term(0, Scalar(-1));
      for (int c = 1; c <= 7; ++c) value.add_term(c, Scalar(eta.at(a, b, c)));
      p.set(a, b, std::move(value));
    }
  return p;
}

HomotopyAlgebra contract(const HomotopyAlgebra& algebra, const ScalingWeights& weights) {
  const GradedBasis& old = algebra.basis;
  std::vector<Gaussian> pref(old.size());
  std::vector<int> expo(old.size());
  GradedBasis fresh;
  for (int idx = 0; idx < old.size(); ++idx) {
    auto it = weights.by_old_label.find(old.label(idx));
    if (it == weights.by_old_label.end())
      throw ValidationError("no scaling weight for basis label '" + old.label(idx) + "'");
    if (it->second.prefactor.is_zero())
      throw ValidationError("scaling prefactor must be nonzero for '" + old.label(idx) + "'");
    pref[idx] = it->second.prefactor;
    expo[idx] = it->second.mu_exponent;
    fresh.add(it->second.new_label, old.degree(idx));
  }

  HomotopyAlgebra out{Ring::Qi, fresh, BracketSet{algebra.brackets.kind, {}}};
  for (const auto& [arity, op] : algebra.brackets.ops) {
    MultiBracket fresh_op(fresh, arity, op.graded());
    for (const auto& [tuple, value] : op.table()) {
      Gaussian num{Rational(1), Rational(0)};
      int exponent = 0;
      for (int idx : tuple) {
        num = num * pref[idx];
        exponent += expo[idx];
      }
      Vec fresh_value;
      for (const auto& [c, s] : value.coeffs()) {
        Laurent l = s.as_laurent() *
                    Laurent::term(num * pref[c].inverse(), exponent - expo[c]);
        if (l.is_zero()) continue;
        if (l.min_exponent() < 0) {
          std::string where;
          for (int idx : tuple) where += (where.empty() ? "" : " ") + old.label(idx);
          throw DivergentContraction("structure constant (" + where + ") -> " + old.label(c) +
                                     " scales with a negative mu power");
        }
        fresh_value.add_term(c, Scalar(l.coefficient(0)));
      }
      fresh_op.set(tuple, std::move(fresh_value));
    }
    if (!fresh_op.empty()) out.brackets.ops.emplace(arity, std::move(fresh_op));
  }
  out.validate();
  return out;
}

HomotopyAlgebra relabel(const HomotopyAlgebra& algebra,
                        const std::map<std::string, std::string>& renames) {
  GradedBasis fresh;
  for (int idx = 0; idx < algebra.basis.size(); ++idx) {
    auto it = renames.find(algebra.basis.label(idx));
    fresh.add(it == renames.end() ? algebra.basis.label(idx) : it->second,
              algebra.basis.degree(idx));
  }
  HomotopyAlgebra out{algebra.ring, fresh, BracketSet{algebra.brackets.kind, {}}};
  for (const auto& [arity, op] : algebra.brackets.ops) {
    MultiBracket fresh_op(fresh, arity, op.graded());
    for (const auto& [tuple, value] : op.table()) fresh_op.set(tuple, value);
    out.brackets.ops.emplace(arity, std::move(fresh_op));
  }
  out.validate();
  return out;
}

HomotopyAlgebra rflux_algebra() {
  GradedBasis basis;
  for (int i = 1; i <= 3; ++i) basis.add("p" + std::to_string(i), 0);
  for (int i = 1; i <= 3; ++i) basis.add("x" + std::to_string(i), 0);
  basis.add("I", 0);
  auto P = [](int i) { return i - 1; };
  auto X = [](int i) { return i + 2; };
  const int I = 6;

  MultiBracket l2(basis, 2, true);
  // [p_j, x_i] = -i delta_{ij} I
  for (int i = 1; i <= 3; ++i) l2.set({P(i), X(i)}, Vec::unit(I, -Scalar::i()));
  // [x_i, x_j] = i eps_{ijk} p_k
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      Vec value;
      for (int k = 1; k <= 3; ++k) {
        int e = eps3(i, j, k);
        if (e != 0) value.add_term(P(k), Scalar(e) * Scalar::i());
      }
      l2.set({X(i), X(j)}, std::move(value));
    }
  HomotopyAlgebra out{Ring::Qi, std::move(basis), BracketSet{AlgebraKind::linfty, {}}};
  out.brackets.ops.emplace(2, std::move(l2));
  out.validate();
  return out;
}

ScalingWeights rflux_weights() {
  ScalingWeights w;
  Gaussian half_i{Rational(0), make_rational(1, 2)};
  for (int i = 1; i <= 3; ++i) {
    w.by_old_label["e" + std::to_string(i)] = {"p" + std::to_string(i), -half_i, 2};
    w.by_old_label["e" + std::to_string(i + 3)] = {"x" + std::to_string(i), half_i, 1};
  }
  w.by_old_label["e7"] = {"I", half_i, 3};
  return w;
}

HomotopyAlgebra monopole_algebra() {
  std::map<std::string, std::string> swap;
  for (int i = 1; i <= 3; ++i) {
    swap["x" + std::to_string(i)] = "p" + std::to_string(i);
    swap["p" + std::to_string(i)] = "x" + std::to_string(i);
  }
  return relabel(rflux_algebra(), swap);
}

namespace {

LinearMap rflux_ideal_map(const GradedBasis& V) {
  GradedBasis U;
  U.add("I*", 1);
  return LinearMap{U, V, -1, {Vec::unit(V.require("I"))}};
}

LinearMap rflux_extended_map(const GradedBasis& V) {
  GradedBasis U;
  U.add("I*", 1);
  U.add("k", 1);
  return LinearMap{U, V, -1, {Vec::unit(V.require("I")), Vec()}};
}

}  // namespace

HomotopyAlgebra rflux_linfty() {
  HomotopyAlgebra r = rflux_algebra();
  const MultiBracket& bracket = *r.brackets.bracket(2);
  ThreeTermData data = prepare_three_term(Ring::Qi, r.basis, bracket, rflux_ideal_map(r.basis));
  return three_term_extension(data);
}

HomotopyAlgebra rflux_without_l3() {
  HomotopyAlgebra a = rflux_linfty();
  a.brackets.ops.erase(3);
  return a;
}

HomotopyAlgebra octonions_two_term() {
  HomotopyAlgebra o = imaginary_octonions();
  return two_term_extension(Ring::Q, o.basis, *o.brackets.bracket(2));
}

ThreeTermData rflux_three_term_data() {
  HomotopyAlgebra r = rflux_algebra();
  const MultiBracket& bracket = *r.brackets.bracket(2);
  LinearMap D = rflux_extended_map(r.basis);
  int x1 = r.basis.require("x1"), x2 = r.basis.require("x2"), x3 = r.basis.require("x3");
  int p3 = r.basis.require("p3"), I = r.basis.require("I");
  const int Istar = 0, k = 1;  // U indices
  FOverrides f;
  f[{p3, x1, x2}] = Vec::unit(k);
  f[{x1, x2, x3}] = Vec::unit(Istar, Scalar(3)) + Vec::unit(k);
  f[{x1, x2, I}] = Vec::unit(k);  // totally antisymmetric image of f(I, x1, x2) = k
  return prepare_three_term(Ring::Qi, r.basis, bracket, std::move(D), f, {});
}

ThreeTermData rflux_three_term_data_alt() {
  HomotopyAlgebra r = rflux_algebra();
  const MultiBracket& bracket = *r.brackets.bracket(2);
  LinearMap D = rflux_extended_map(r.basis);
  int x1 = r.basis.require("x1"), x2 = r.basis.require("x2");
  const int Istar = 0, k = 1;
  ActionOverrides action;
  action[{x1, Istar}] = Vec::unit(k);
  action[{x2, k}] = Vec::unit(k);
  return prepare_three_term(Ring::Qi, r.basis, bracket, std::move(D), {}, action);
}

HomotopyAlgebra rflux_three_term() { return three_term_extension(rflux_three_term_data()); }

}  // namespace linfty
