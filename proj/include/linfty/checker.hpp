#pragma once

#include <functional>

#include "linfty/bracket.hpp"

namespace linfty {

struct RelationViolation {
  std::vector<int> tuple;
  Vec residual;  // nonzero by construction
};

struct RelationReport {
  AlgebraKind kind = AlgebraKind::linfty;
  int n = 0;
  std::vector<RelationViolation> violations;

  bool passed() const { return violations.empty(); }
};

// Left-hand side of the n-th generalized Jacobi identity
//   sum_{i+j=n+1} (-1)^{i(j-1)} sum_{unshuffles} (-1)^sigma eps(sigma; x)
//     l_j(l_i(x_{sigma(1)},...), x_{sigma(i+1)}, ...)
// evaluated on a basis tuple. Missing arities act as zero maps.
Vec linfty_residual(const HomotopyAlgebra& algebra, std::span<const int> tuple);

// Left-hand side of the n-th fundamental identity
//   sum_{lambda, j} (-1)^{j+lambda+j*lambda+n*j+j(|a_1|+...+|a_lambda|)}
//     m_{n-j+1}(a_1,...,a_lambda, m_j(...), ...)
// on an ordered basis tuple.
Vec ainfty_residual(const HomotopyAlgebra& algebra, std::span<const int> tuple);

// Exhaustive check of relations n = 1..n_max. L-infinity enumeration visits
// one canonical representative per orbit (nondecreasing tuples, repeats only
// for odd-degree elements); A-infinity visits every ordered tuple. One report
// per n, violations in lexicographic tuple order.
std::vector<RelationReport> check_linfty(const HomotopyAlgebra& algebra, int n_max);
std::vector<RelationReport> check_ainfty(const HomotopyAlgebra& algebra, int n_max);

bool all_passed(const std::vector<RelationReport>& reports);

// Relations above 2*max_arity-1 are vacuous: every i+j = n+1 decomposition
// would need an absent bracket. Used as the CLI default.
int sufficient_max_n(const HomotopyAlgebra& algebra);

// Canonical tuple enumeration (exposed for the test suites).
void enumerate_canonical_tuples(const GradedBasis& basis, int n,
                                const std::function<void(std::span<const int>)>& fn);
void enumerate_ordered_tuples(const GradedBasis& basis, int n,
                              const std::function<void(std::span<const int>)>& fn);

}  // namespace linfty
