#pragma once

#include <vector>

#include "linfty/basis.hpp"

namespace linfty {

// Degree-shifting linear map between graded bases, stored column-wise.
struct LinearMap {
  GradedBasis source;
  GradedBasis target;
  int shift = 0;
  std::vector<Vec> columns;  // one Vec over `target` per source index

  Vec apply(const Vec& x) const;
  // Image of each degree-n source element must be homogeneous of degree
  // n + shift, or zero.
  void validate() const;
};

// Kernel basis under the fixed pivot rule: row reduction eliminates on the
// lowest-index unused row with a nonzero entry, columns processed left to
// right; one kernel vector per free column, in ascending column order.
std::vector<Vec> nullspace(const LinearMap& m);

// Particular solution of m(x) = y with zero coefficients on free columns.
// Throws NotInImage if y is not in the image of m.
Vec solve_preimage(const LinearMap& m, const Vec& y);

}  // namespace linfty
