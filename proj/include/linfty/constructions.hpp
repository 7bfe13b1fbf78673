#pragma once

#include "linfty/bracket.hpp"
#include "linfty/linear.hpp"

namespace linfty {

// Action table (v, alpha) -> v(alpha) in U, defined by [D alpha, v] = D(v(alpha))
// and extended bilinearly. v indexes the degree-0 space V, alpha the space U.
struct ActionTable {
  std::map<std::pair<int, int>, Vec> entries;

  Vec eval_basis(int v, int u) const;
  Vec eval(const Vec& v_vec, const Vec& u_vec) const;
  void set(int v, int u, Vec value);
};

// Everything the three-term extension needs: the degree-0 bracket algebra
// (V, [.,.]), the map D: U -> V, a section f with D f = Jac, the action
// table, and the kernel of D with its degree-2 basis.
struct ThreeTermData {
  Ring ring = Ring::Q;
  GradedBasis V;           // all degree 0
  MultiBracket bracket;    // arity 2 over V
  LinearMap D;             // degree-1 source U, shift -1
  MultiBracket f;          // arity 3 over V, values over U
  ActionTable action;
  std::vector<Vec> kernel;   // kernel basis of D, vectors over U
  GradedBasis kernel_basis;  // degree-2 labels, one per kernel vector
  LinearMap iota;            // kernel_basis -> U inclusion

  Vec kernel_coordinates(const Vec& u_vec) const;  // throws KernelAssertionFailed
};

// Caller overrides for f / action, keyed by canonical basis tuples. An
// override must still satisfy the defining equation; it may differ from the
// pivot-rule value by kernel contributions.
using FOverrides = std::map<std::vector<int>, Vec>;
using ActionOverrides = std::map<std::pair<int, int>, Vec>;

// Doubling: from an antisymmetric bracket on V build the 2-term algebra on
// X1 = V* (degree 1), X0 = V with
//   l1(v*) = v,  l2(v,w) = [v,w],  l2(v,w*) = [v,w]*,  l3(u,v,w) = -Jac(u,v,w)*.
HomotopyAlgebra two_term_extension(Ring ring, const GradedBasis& V, const MultiBracket& bracket);

// Section f with D f(v1,v2,v3) = Jac(v1,v2,v3), pivot-rule preimages by
// default. Throws JacobiatorNotInImage when some Jacobiator misses Im(D).
MultiBracket solve_f(const GradedBasis& V, const MultiBracket& bracket, const LinearMap& D,
                     const FOverrides& overrides = {});

// Action with D(v(alpha)) = [D alpha, v]. Throws ClosureViolated when some
// bracket [Im D, V] leaves Im(D).
ActionTable solve_action(const GradedBasis& V, const MultiBracket& bracket, const LinearMap& D,
                         const ActionOverrides& overrides = {});

ThreeTermData prepare_three_term(Ring ring, const GradedBasis& V, const MultiBracket& bracket,
                                 LinearMap D, const FOverrides& f_overrides = {},
                                 const ActionOverrides& action_overrides = {});

// g(alpha,v1,v2) = f(D alpha,v1,v2) + [v1,v2](alpha) + v1(v2(alpha)) - v2(v1(alpha)),
// returned in kernel-basis coordinates after asserting D g = 0.
Vec compute_g(const ThreeTermData& data, const Vec& alpha, const Vec& v1, const Vec& v2);

// h(v1..v4) = sum_anti( 4 v1(f(v2,v3,v4)) + 6 f([v1,v2],v3,v4) ) with the
// 1/4! prefactor, in kernel-basis coordinates after asserting D h = 0.
Vec compute_h(const ThreeTermData& data, const Vec& v1, const Vec& v2, const Vec& v3,
              const Vec& v4);

// The 3-term algebra X2 = Ker D -> X1 = U -> X0 = V with the full product
// table: iota and D as l1; [.,.], v(alpha), v(c), -(D a)(b)-(D b)(a) as l2;
// -f and g as l3; h as l4.
HomotopyAlgebra three_term_extension(const ThreeTermData& data);

// A-infinity doubling of a binary product: m1(a*) = a, m2 = star (with
// starred variants), m3 = -Ass*, m4 = 0.
HomotopyAlgebra ainfty_double(const StarProduct& p);

}  // namespace linfty
