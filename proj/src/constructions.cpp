#include "linfty/constructions.hpp"

#include <algorithm>

#include "linfty/errors.hpp"
#include "linfty/signs.hpp"

namespace linfty {

namespace {

Vec shifted(const Vec& v, int offset) {
  Vec r;
  for (const auto& [idx, s] : v.coeffs()) r.add_term(idx + offset, s);
  return r;
}

void require_plain_bracket(const GradedBasis& V, const MultiBracket& bracket) {
  if (bracket.arity() != 2 || !bracket.graded() || !(bracket.domain() == V))
    throw NotAntisymmetric("expected a graded-antisymmetric 2-bracket over the given basis");
  for (int i = 0; i < V.size(); ++i) {
    if (V.degree(i) != 0)
      throw NotAntisymmetric("the initial bracket algebra must live in degree 0");
  }
  for (const auto& [tuple, value] : bracket.table()) {
    if (!value.homogeneous_of(V, 0))
      throw DegreeRuleViolation("2-bracket values must stay in degree 0");
  }
}

void require_map_shape(const GradedBasis& V, const LinearMap& D) {
  if (!(D.target == V)) throw ValidationError("the map's target must be the bracket space");
  if (D.shift != -1) throw ValidationError("the map must lower degree by one");
  for (int j = 0; j < D.source.size(); ++j) {
    if (D.source.degree(j) != 1)
      throw ValidationError("the map's source basis must sit in degree 1");
  }
  D.validate();
}

}  // namespace

Vec ActionTable::eval_basis(int v, int u) const {
  auto it = entries.find({v, u});
  return it == entries.end() ? Vec() : it->second;
}

void ActionTable::set(int v, int u, Vec value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries.emplace(std::make_pair(v, u), std::move(value));
  if (!inserted) throw ValidationError("duplicate action entry");
}

Vec ActionTable::eval(const Vec& v_vec, const Vec& u_vec) const {
  Vec out;
  for (const auto& [v, cv] : v_vec.coeffs())
    for (const auto& [u, cu] : u_vec.coeffs()) {
      Vec t = eval_basis(v, u);
      if (!t.is_zero()) out += t.scaled(cv * cu);
    }
  return out;
}

Vec ThreeTermData::kernel_coordinates(const Vec& u_vec) const {
  if (!D.apply(u_vec).is_zero())
    throw KernelAssertionFailed("value is not annihilated by the map");
  try {
    return solve_preimage(iota, u_vec);
  } catch (const NotInImage&) {
    throw KernelAssertionFailed("value lies outside the kernel basis span");
  }
}

HomotopyAlgebra two_term_extension(Ring ring, const GradedBasis& V, const MultiBracket& bracket) {
  require_plain_bracket(V, bracket);
  const int n = V.size();
  GradedBasis X;
  for (int i = 0; i < n; ++i) X.add(V.label(i), 0);
  for (int i = 0; i < n; ++i) X.add(V.label(i) + "*", 1);

  MultiBracket l1(X, 1, true);
  for (int i = 0; i < n; ++i) l1.set({n + i}, Vec::unit(i));

  MultiBracket l2(X, 2, true);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) l2.set({a, b}, bracket.eval_basis({a, b}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // l2(v, w*) = [v, w]*
      l2.set({a, n + b}, shifted(bracket.eval_basis({a, b}), n));
    }

  MultiBracket l3(X, 3, true);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec jac = jacobiator(bracket, Vec::unit(a), Vec::unit(b), Vec::unit(c));
        l3.set({a, b, c}, shifted(-jac, n));
      }

  HomotopyAlgebra out{ring, std::move(X), BracketSet{AlgebraKind::linfty, {}}};
  if (!l1.empty()) out.brackets.ops.emplace(1, std::move(l1));
  if (!l2.empty()) out.brackets.ops.emplace(2, std::move(l2));
  if (!l3.empty()) out.brackets.ops.emplace(3, std::move(l3));
  out.validate();
  return out;
}

MultiBracket solve_f(const GradedBasis& V, const MultiBracket& bracket, const LinearMap& D,
                     const FOverrides& overrides) {
  require_plain_bracket(V, bracket);
  require_map_shape(V, D);
  for (const auto& [tuple, value] : overrides) {
    auto [canon, sign] = canonical_form(V, tuple);
    if (canon != tuple || sign == 0)
      throw ValidationError("section overrides must use canonical tuples of distinct elements");
  }
  MultiBracket f(V, 3, true);
  const int n = V.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec jac = jacobiator(bracket, Vec::unit(a), Vec::unit(b), Vec::unit(c));
        std::vector<int> tuple{a, b, c};
        Vec value;
        if (auto it = overrides.find(tuple); it != overrides.end()) {
          value = it->second;
          if (!(D.apply(value) == jac))
            throw InvalidOverride("override for f(" + V.label(a) + "," + V.label(b) + "," +
                                  V.label(c) + ") does not map onto the Jacobiator");
        } else if (!jac.is_zero()) {
          try {
            value = solve_preimage(D, jac);
          } catch (const NotInImage&) {
            throw JacobiatorNotInImage("Jac(" + V.label(a) + "," + V.label(b) + "," + V.label(c) +
                                       ") is not in the image of the map");
          }
        }
        f.set(std::move(tuple), std::move(value));
      }
  return f;
}

ActionTable solve_action(const GradedBasis& V, const MultiBracket& bracket, const LinearMap& D,
                         const ActionOverrides& overrides) {
  require_plain_bracket(V, bracket);
  require_map_shape(V, D);
  ActionTable table;
  for (int v = 0; v < V.size(); ++v)
    for (int u = 0; u < D.source.size(); ++u) {
      // [D alpha, v]
      Vec rhs = bracket.eval({D.columns.at(u), Vec::unit(v)});
      Vec value;
      if (auto it = overrides.find({v, u}); it != overrides.end()) {
        value = it->second;
        if (!(D.apply(value) == rhs))
          throw InvalidOverride("override for " + V.label(v) + "(" + D.source.label(u) +
                                ") does not satisfy the closure equation");
      } else if (!rhs.is_zero()) {
        try {
          value = solve_preimage(D, rhs);
        } catch (const NotInImage&) {
          throw ClosureViolated("[D " + D.source.label(u) + ", " + V.label(v) +
                                "] is not in the image of the map");
        }
      }
      table.set(v, u, std::move(value));
    }
  return table;
}

ThreeTermData prepare_three_term(Ring ring, const GradedBasis& V, const MultiBracket& bracket,
                                 LinearMap D, const FOverrides& f_overrides,
                                 const ActionOverrides& action_overrides) {
  require_plain_bracket(V, bracket);
  require_map_shape(V, D);
  MultiBracket f = solve_f(V, bracket, D, f_overrides);
  ActionTable action = solve_action(V, bracket, D, action_overrides);
  std::vector<Vec> kernel = nullspace(D);

  GradedBasis kernel_basis;
  for (size_t k = 0; k < kernel.size(); ++k) {
    const auto& coeffs = kernel[k].coeffs();
    std::string base;
    if (coeffs.size() == 1 && coeffs.begin()->second == Scalar(1))
      base = D.source.label(coeffs.begin()->first) + "'";
    else
      base = "c" + std::to_string(k + 1);
    while (V.find(base) || D.source.find(base) || kernel_basis.find(base)) base += "'";
    kernel_basis.add(base, 2);
  }
  LinearMap iota{kernel_basis, D.source, -1, kernel};

  return ThreeTermData{ring,  V,      bracket,      std::move(D), std::move(f),
                       action, kernel, kernel_basis, std::move(iota)};
}

Vec compute_g(const ThreeTermData& data, const Vec& alpha, const Vec& v1, const Vec& v2) {
  Vec g = data.f.eval({data.D.apply(alpha), v1, v2});
  g += data.action.eval(data.bracket.eval({v1, v2}), alpha);
  g += data.action.eval(v1, data.action.eval(v2, alpha));
  g -= data.action.eval(v2, data.action.eval(v1, alpha));
  return data.kernel_coordinates(g);
}

Vec compute_h(const ThreeTermData& data, const Vec& v1, const Vec& v2, const Vec& v3,
              const Vec& v4) {
  const Vec* args[4] = {&v1, &v2, &v3, &v4};
  Vec h;
  std::vector<int> perm{0, 1, 2, 3};
  do {
    Scalar sgn = Scalar(perm_parity(perm));
    const Vec& a = *args[perm[0]];
    const Vec& b = *args[perm[1]];
    const Vec& c = *args[perm[2]];
    const Vec& d = *args[perm[3]];
    Vec term = data.action.eval(a, data.f.eval({b, c, d})).scaled(Scalar(4));
    term += data.f.eval({data.bracket.eval({a, b}), c, d}).scaled(Scalar(6));
    h += term.scaled(sgn);
  } while (std::next_permutation(perm.begin(), perm.end()));
  h = h.scaled(Scalar(make_rational(1, 24)));
  return data.kernel_coordinates(h);
}

HomotopyAlgebra three_term_extension(const ThreeTermData& data) {
  const int nV = data.V.size();
  const int nU = data.D.source.size();
  const int nC = data.kernel_basis.size();
  GradedBasis X;
  for (int i = 0; i < nV; ++i) X.add(data.V.label(i), 0);
  for (int j = 0; j < nU; ++j) X.add(data.D.source.label(j), 1);
  for (int k = 0; k < nC; ++k) X.add(data.kernel_basis.label(k), 2);
  auto xU = [&](int j) { return nV + j; };
  auto xC = [&](int k) { return nV + nU + k; };

  MultiBracket l1(X, 1, true);
  for (int j = 0; j < nU; ++j) l1.set({xU(j)}, data.D.columns.at(j));
  for (int k = 0; k < nC; ++k) l1.set({xC(k)}, shifted(data.kernel.at(k), nV));

  MultiBracket l2(X, 2, true);
  for (int a = 0; a < nV; ++a)
    for (int b = a + 1; b < nV; ++b) l2.set({a, b}, data.bracket.eval_basis({a, b}));
  for (int v = 0; v < nV; ++v)
    for (int j = 0; j < nU; ++j) {
      // l2(v, alpha) = -v(alpha)
      l2.set({v, xU(j)}, shifted(-data.action.eval_basis(v, j), nV));
    }
  for (int j1 = 0; j1 < nU; ++j1)
    for (int j2 = j1; j2 < nU; ++j2) {
      // l2(alpha, beta) = -(D alpha)(beta) - (D beta)(alpha), a kernel element
      Vec value = -data.action.eval(data.D.columns.at(j1), Vec::unit(j2));
      value -= data.action.eval(data.D.columns.at(j2), Vec::unit(j1));
      l2.set({xU(j1), xU(j2)}, shifted(data.kernel_coordinates(value), nV + nU));
    }
  for (int v = 0; v < nV; ++v)
    for (int k = 0; k < nC; ++k) {
      // l2(v, c) = -v(c) with v(c) = v(iota(c)), again a kernel element
      Vec vc = data.action.eval(Vec::unit(v), data.kernel.at(k));
      l2.set({v, xC(k)}, shifted(-data.kernel_coordinates(vc), nV + nU));
    }

  MultiBracket l3(X, 3, true);
  for (int a = 0; a < nV; ++a)
    for (int b = a + 1; b < nV; ++b)
      for (int c = b + 1; c < nV; ++c)
        l3.set({a, b, c}, shifted(-data.f.eval_basis({a, b, c}), nV));
  for (int a = 0; a < nV; ++a)
    for (int b = a + 1; b < nV; ++b)
      for (int j = 0; j < nU; ++j) {
        // l3(v1, v2, alpha) = g(alpha, v1, v2)
        Vec g = compute_g(data, Vec::unit(j), Vec::unit(a), Vec::unit(b));
        l3.set({a, b, xU(j)}, shifted(g, nV + nU));
      }

  MultiBracket l4(X, 4, true);
  for (int a = 0; a < nV; ++a)
    for (int b = a + 1; b < nV; ++b)
      for (int c = b + 1; c < nV; ++c)
        for (int d = c + 1; d < nV; ++d) {
          Vec h = compute_h(data, Vec::unit(a), Vec::unit(b), Vec::unit(c), Vec::unit(d));
          l4.set({a, b, c, d}, shifted(h, nV + nU));
        }

  HomotopyAlgebra out{data.ring, std::move(X), BracketSet{AlgebraKind::linfty, {}}};
  if (!l1.empty()) out.brackets.ops.emplace(1, std::move(l1));
  if (!l2.empty()) out.brackets.ops.emplace(2, std::move(l2));
  if (!l3.empty()) out.brackets.ops.emplace(3, std::move(l3));
  if (!l4.empty()) out.brackets.ops.emplace(4, std::move(l4));
  out.validate();
  return out;
}

HomotopyAlgebra ainfty_double(const StarProduct& p) {
  const int n = p.basis.size();
  GradedBasis X;
  for (int i = 0; i < n; ++i) X.add(p.basis.label(i), 0);
  for (int i = 0; i < n; ++i) X.add(p.basis.label(i) + "*", 1);

  MultiBracket m1(X, 1, false);
  for (int i = 0; i < n; ++i) m1.set({n + i}, Vec::unit(i));

  MultiBracket m2(X, 2, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec ab = p.eval_basis(a, b);
      m2.set({a, b}, ab);
      m2.set({n + a, b}, shifted(ab, n));
      m2.set({a, n + b}, shifted(ab, n));
    }

  MultiBracket m3(X, 3, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vec ass = associator(p, Vec::unit(a), Vec::unit(b), Vec::unit(c));
        m3.set({a, b, c}, shifted(-ass, n));
      }

  HomotopyAlgebra out{p.ring, std::move(X), BracketSet{AlgebraKind::ainfty, {}}};
  if (!m1.empty()) out.brackets.ops.emplace(1, std::move(m1));
  if (!m2.empty()) out.brackets.ops.emplace(2, std::move(m2));
  if (!m3.empty()) out.brackets.ops.emplace(3, std::move(m3));
  out.validate();
  return out;
}

}  // namespace linfty
