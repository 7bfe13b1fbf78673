#include "linfty/checker.hpp"

#include "linfty/errors.hpp"
#include "linfty/signs.hpp"

namespace linfty {

Vec linfty_residual(const HomotopyAlgebra& algebra, std::span<const int> tuple) {
  const int n = static_cast<int>(tuple.size());
  std::vector<int> degrees(n);
  for (int p = 0; p < n; ++p) degrees[p] = algebra.basis.degree(tuple[p]);

  Vec residual;
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const MultiBracket* inner = algebra.brackets.bracket(i);
    const MultiBracket* outer = algebra.brackets.bracket(j);
    if (!inner || !outer) continue;  // missing brackets are zero maps
    const int block_sign = (i * (j - 1)) % 2 ? -1 : 1;
    for (const auto& sigma : unshuffles(i, n)) {
      int sign = block_sign * perm_parity(sigma) * koszul_sign(sigma, degrees);
      std::vector<int> inner_tuple(i);
      for (int p = 0; p < i; ++p) inner_tuple[p] = tuple[sigma[p]];
      Vec inner_value = inner->eval_basis(inner_tuple);
      if (inner_value.is_zero()) continue;
      std::vector<Vec> outer_args;
      outer_args.reserve(j);
      outer_args.push_back(std::move(inner_value));
      for (int p = i; p < n; ++p) outer_args.push_back(Vec::unit(tuple[sigma[p]]));
      Vec term = outer->eval(outer_args);
      if (term.is_zero()) continue;
      residual += term.scaled(Scalar(sign));
    }
  }
  return residual;
}

Vec ainfty_residual(const HomotopyAlgebra& algebra, std::span<const int> tuple) {
  const int n = static_cast<int>(tuple.size());
  Vec residual;
  for (int lambda = 0; lambda <= n - 1; ++lambda) {
    int degree_prefix = 0;
    for (int p = 0; p < lambda; ++p) degree_prefix += algebra.basis.degree(tuple[p]);
    for (int j = 1; j <= n - lambda; ++j) {
      const MultiBracket* inner = algebra.brackets.bracket(j);
      const MultiBracket* outer = algebra.brackets.bracket(n - j + 1);
      if (!inner || !outer) continue;
      int exponent = j + lambda + j * lambda + n * j + j * degree_prefix;
      int sign = exponent % 2 ? -1 : 1;
      std::vector<int> inner_tuple(tuple.begin() + lambda, tuple.begin() + lambda + j);
      Vec inner_value = inner->eval_basis(inner_tuple);
      if (inner_value.is_zero()) continue;
      std::vector<Vec> outer_args;
      outer_args.reserve(n - j + 1);
      for (int p = 0; p < lambda; ++p) outer_args.push_back(Vec::unit(tuple[p]));
      outer_args.push_back(std::move(inner_value));
      for (int p = lambda + j; p < n; ++p) outer_args.push_back(Vec::unit(tuple[p]));
      Vec term = outer->eval(outer_args);
      if (term.is_zero()) continue;
      residual += term.scaled(Scalar(sign));
    }
  }
  return residual;
}

void enumerate_canonical_tuples(const GradedBasis& basis, int n,
                                const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> tuple(n);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == n) {
      fn(tuple);
      return;
    }
    for (int idx = start; idx < basis.size(); ++idx) {
      // repeats are only allowed for odd-degree elements
      if (pos > 0 && tuple[pos - 1] == idx && basis.degree(idx) % 2 == 0) continue;
      tuple[pos] = idx;
      self(self, pos + 1, idx);
    }
  };
  rec(rec, 0, 0);
}

void enumerate_ordered_tuples(const GradedBasis& basis, int n,
                              const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> tuple(n, 0);
  if (basis.size() == 0) return;
  while (true) {
    fn(tuple);
    int p = n - 1;
    while (p >= 0 && tuple[p] == basis.size() - 1) {
      tuple[p] = 0;
      --p;
    }
    if (p < 0) break;
    ++tuple[p];
  }
}

namespace {

bool relation_is_vacuous(const HomotopyAlgebra& algebra, int n) {
  for (int i = 1; i <= n; ++i) {
    if (algebra.brackets.bracket(i) && algebra.brackets.bracket(n + 1 - i)) return false;
  }
  return true;
}

std::vector<RelationReport> check_impl(const HomotopyAlgebra& algebra, int n_max,
                                       AlgebraKind kind) {
  if (algebra.brackets.kind != kind)
    throw ValidationError("algebra kind does not match the requested relation family");
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  std::vector<RelationReport> reports;
  for (int n = 1; n <= n_max; ++n) {
    RelationReport report{kind, n, {}};
    if (!relation_is_vacuous(algebra, n)) {
      auto visit = [&](std::span<const int> tuple) {
        Vec r = kind == AlgebraKind::linfty ? linfty_residual(algebra, tuple)
                                            : ainfty_residual(algebra, tuple);
        if (!r.is_zero())
          report.violations.push_back({std::vector<int>(tuple.begin(), tuple.end()), std::move(r)});
      };
      if (kind == AlgebraKind::linfty)
        enumerate_canonical_tuples(algebra.basis, n, visit);
      else
        enumerate_ordered_tuples(algebra.basis, n, visit);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace

std::vector<RelationReport> check_linfty(const HomotopyAlgebra& algebra, int n_max) {
  return check_impl(algebra, n_max, AlgebraKind::linfty);
}

std::vector<RelationReport> check_ainfty(const HomotopyAlgebra& algebra, int n_max) {
  return check_impl(algebra, n_max, AlgebraKind::ainfty);
}

bool all_passed(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

int sufficient_max_n(const HomotopyAlgebra& algebra) {
  int a = algebra.brackets.max_arity();
  return a >= 1 ? 2 * a - 1 : 1;
}

}  // namespace linfty
