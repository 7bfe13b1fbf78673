#pragma once

#include "linfty/bracket.hpp"

namespace linfty {

// Hand-coded expansions of the low-order relations, kept as an independent
// oracle against the generic unshuffle evaluator. Sign-convention bugs are
// the dominant failure mode here, so the two code paths never share the
// permutation machinery.

// L-infinity relations for n = tuple.size() in 1..4; equals linfty_residual
// exactly on every tuple.
Vec linfty_residual_explicit(const HomotopyAlgebra& algebra, std::span<const int> tuple);

// The antisymmetrized degree-0 n=5 combination
//   sum_anti( 10 l4(l2(v1,v2),v3,v4,v5) + 5 l2(l4(v1,...,v4),v5)
//           + 10 l3(l3(v1,v2,v3),v4,v5) )
// with the 1/5! prefactor; equals linfty_residual on degree-0 tuples when no
// 5-bracket is present.
Vec linfty_degree0_combo_n5(const HomotopyAlgebra& algebra, std::span<const int> tuple);

// A-infinity relations for n in 1..4 in their expanded printed form. The
// generic evaluator satisfies ainfty_residual = (-1)^{n+1} * this.
Vec ainfty_residual_explicit(const HomotopyAlgebra& algebra, std::span<const int> tuple);

}  // namespace linfty
