#include "linfty/explicit_relations.hpp"

#include <algorithm>

#include "linfty/errors.hpp"
#include "linfty/signs.hpp"

namespace linfty {

namespace {

// Bracket application treating missing arities as zero maps.
Vec ev(const HomotopyAlgebra& a, int arity, std::initializer_list<Vec> args) {
  const MultiBracket* b = a.brackets.bracket(arity);
  if (!b) return Vec();
  for (const Vec& v : args)
    if (v.is_zero()) return Vec();
  std::vector<Vec> argv(args);
  return b->eval(argv);
}

Scalar pm(int exponent) { return Scalar(exponent % 2 ? -1 : 1); }

}  // namespace

Vec linfty_residual_explicit(const HomotopyAlgebra& a, std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> d(n);
  std::vector<Vec> x(n);
  for (int p = 0; p < n; ++p) {
    d[p] = a.basis.degree(t[p]);
    x[p] = Vec::unit(t[p]);
  }

  switch (n) {
    case 1:
      return ev(a, 1, {ev(a, 1, {x[0]})});
    case 2:
      return ev(a, 1, {ev(a, 2, {x[0], x[1]})})                   //
             - ev(a, 2, {ev(a, 1, {x[0]}), x[1]})                 //
             - ev(a, 2, {x[0], ev(a, 1, {x[1]})}).scaled(pm(d[0]));
    case 3:
      return ev(a, 1, {ev(a, 3, {x[0], x[1], x[2]})})                                    //
             + ev(a, 3, {ev(a, 1, {x[0]}), x[1], x[2]})                                  //
             + ev(a, 3, {x[0], ev(a, 1, {x[1]}), x[2]}).scaled(pm(d[0]))                 //
             + ev(a, 3, {x[0], x[1], ev(a, 1, {x[2]})}).scaled(pm(d[0] + d[1]))          //
             + ev(a, 2, {ev(a, 2, {x[0], x[1]}), x[2]})                                  //
             + ev(a, 2, {ev(a, 2, {x[2], x[0]}), x[1]}).scaled(pm((d[0] + d[1]) * d[2]))  //
             + ev(a, 2, {ev(a, 2, {x[1], x[2]}), x[0]}).scaled(pm((d[1] + d[2]) * d[0]));
    case 4: {
      // the ten l2/l3 cross terms
      Vec o = -ev(a, 2, {ev(a, 3, {x[0], x[1], x[2]}), x[3]})                                //
              + ev(a, 2, {ev(a, 3, {x[0], x[1], x[3]}), x[2]}).scaled(pm(d[2] * d[3]))       //
              + ev(a, 2, {x[1], ev(a, 3, {x[0], x[2], x[3]})}).scaled(pm((1 + d[0]) * d[1]))  //
              - ev(a, 2, {x[0], ev(a, 3, {x[1], x[2], x[3]})}).scaled(pm(d[0]))              //
              + ev(a, 3, {ev(a, 2, {x[0], x[1]}), x[2], x[3]})                               //
              + ev(a, 3, {ev(a, 2, {x[0], x[2]}), x[1], x[3]}).scaled(pm(1 + d[1] * d[2]))   //
              + ev(a, 3, {ev(a, 2, {x[0], x[3]}), x[1], x[2]}).scaled(pm(d[3] * (d[1] + d[2])))  //
              - ev(a, 3, {x[0], ev(a, 2, {x[1], x[2]}), x[3]})                               //
              + ev(a, 3, {x[0], ev(a, 2, {x[1], x[3]}), x[2]}).scaled(pm(d[2] * d[3]))       //
              + ev(a, 3, {x[0], x[1], ev(a, 2, {x[2], x[3]})});
      // minus the l1/l4 side
      Vec rhs = -ev(a, 1, {ev(a, 4, {x[0], x[1], x[2], x[3]})})                              //
                + ev(a, 4, {ev(a, 1, {x[0]}), x[1], x[2], x[3]})                             //
                + ev(a, 4, {x[0], ev(a, 1, {x[1]}), x[2], x[3]}).scaled(pm(d[0]))            //
                + ev(a, 4, {x[0], x[1], ev(a, 1, {x[2]}), x[3]}).scaled(pm(d[0] + d[1]))     //
                + ev(a, 4, {x[0], x[1], x[2], ev(a, 1, {x[3]})}).scaled(pm(d[0] + d[1] + d[2]));
      return o - rhs;
    }
    default:
      throw ValidationError("explicit relations are hand-coded for n = 1..4 only");
  }
}

Vec linfty_degree0_combo_n5(const HomotopyAlgebra& a, std::span<const int> t) {
  if (t.size() != 5) throw ValidationError("the printed combination has five arguments");
  for (int idx : t) {
    if (a.basis.degree(idx) != 0)
      throw NonHomogeneousArgument("the printed combination is for degree-0 arguments");
  }
  Vec total;
  std::vector<int> perm{0, 1, 2, 3, 4};
  do {
    Scalar sgn = Scalar(perm_parity(perm));
    std::vector<Vec> v(5);
    for (int p = 0; p < 5; ++p) v[p] = Vec::unit(t[perm[p]]);
    Vec term = ev(a, 4, {ev(a, 2, {v[0], v[1]}), v[2], v[3], v[4]}).scaled(Scalar(10))  //
               + ev(a, 2, {ev(a, 4, {v[0], v[1], v[2], v[3]}), v[4]}).scaled(Scalar(5)) //
               + ev(a, 3, {ev(a, 3, {v[0], v[1], v[2]}), v[3], v[4]}).scaled(Scalar(10));
    total += term.scaled(sgn);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total.scaled(Scalar(make_rational(1, 120)));
}

Vec ainfty_residual_explicit(const HomotopyAlgebra& a, std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> d(n);
  std::vector<Vec> x(n);
  for (int p = 0; p < n; ++p) {
    d[p] = a.basis.degree(t[p]);
    x[p] = Vec::unit(t[p]);
  }

  switch (n) {
    case 1:
      return ev(a, 1, {ev(a, 1, {x[0]})});
    case 2:
      return -ev(a, 1, {ev(a, 2, {x[0], x[1]})})  //
             + ev(a, 2, {ev(a, 1, {x[0]}), x[1]}) //
             + ev(a, 2, {x[0], ev(a, 1, {x[1]})}).scaled(pm(d[0]));
    case 3:
      return ev(a, 1, {ev(a, 3, {x[0], x[1], x[2]})})                           //
             + ev(a, 3, {ev(a, 1, {x[0]}), x[1], x[2]})                         //
             + ev(a, 3, {x[0], ev(a, 1, {x[1]}), x[2]}).scaled(pm(d[0]))        //
             + ev(a, 3, {x[0], x[1], ev(a, 1, {x[2]})}).scaled(pm(d[0] + d[1])) //
             + ev(a, 2, {ev(a, 2, {x[0], x[1]}), x[2]})                         //
             - ev(a, 2, {x[0], ev(a, 2, {x[1], x[2]})});
    case 4:
      return -ev(a, 1, {ev(a, 4, {x[0], x[1], x[2], x[3]})})                                 //
             + ev(a, 4, {ev(a, 1, {x[0]}), x[1], x[2], x[3]})                                //
             + ev(a, 4, {x[0], ev(a, 1, {x[1]}), x[2], x[3]}).scaled(pm(d[0]))               //
             + ev(a, 4, {x[0], x[1], ev(a, 1, {x[2]}), x[3]}).scaled(pm(d[0] + d[1]))        //
             + ev(a, 4, {x[0], x[1], x[2], ev(a, 1, {x[3]})}).scaled(pm(d[0] + d[1] + d[2])) //
             - ev(a, 3, {ev(a, 2, {x[0], x[1]}), x[2], x[3]})                                //
             + ev(a, 3, {x[0], ev(a, 2, {x[1], x[2]}), x[3]})                                //
             - ev(a, 3, {x[0], x[1], ev(a, 2, {x[2], x[3]})})                                //
             + ev(a, 2, {ev(a, 3, {x[0], x[1], x[2]}), x[3]})                                //
             + ev(a, 2, {x[0], ev(a, 3, {x[1], x[2], x[3]})}).scaled(pm(d[0]));
    default:
      throw ValidationError("explicit relations are hand-coded for n = 1..4 only");
  }
}

}  // namespace linfty
