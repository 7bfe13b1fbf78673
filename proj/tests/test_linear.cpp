#include <doctest.h>

#include <random>

#include "linfty/linear.hpp"

using namespace linfty;

namespace {

GradedBasis flat_basis(const std::string& stem, int n, int degree = 0) {
  GradedBasis b;
  for (int i = 1; i <= n; ++i) b.add(stem + std::to_string(i), degree);
  return b;
}

// The fixture map D: span{I*, k} -> V with D(I*) = I, D(k) = 0.
LinearMap fixture_map() {
  GradedBasis target;
  target.add("I", 0);
  target.add("J", 0);
  GradedBasis source;
  source.add("I*", 1);
  source.add("k", 1);
  return LinearMap{source, target, -1, {Vec::unit(0), Vec()}};
}

LinearMap random_map(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  LinearMap m{flat_basis("u", cols), flat_basis("v", rows), 0, {}};
  m.columns.resize(cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.columns[j].add_term(i, Scalar(coeff(rng)));
  return m;
}

// Membership of v in span(vectors), decided exactly.
bool in_span(const std::vector<Vec>& vectors, const Vec& v, const GradedBasis& space) {
  GradedBasis index_basis = flat_basis("t", static_cast<int>(vectors.size()), 1);
  LinearMap m{index_basis, space, -1, vectors};
  try {
    solve_preimage(m, v);
    return true;
  } catch (const NotInImage&) {
    return false;
  }
}

}  // namespace

TEST_SUITE("linear") {
  TEST_CASE("zero map and identity map kernels") {
    GradedBasis two = flat_basis("a", 2);
    LinearMap zero{two, two, 0, {Vec(), Vec()}};
    auto k = nullspace(zero);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == Vec::unit(0));
    CHECK(k[1] == Vec::unit(1));

    GradedBasis three = flat_basis("b", 3);
    LinearMap id{three, three, 0, {Vec::unit(0), Vec::unit(1), Vec::unit(2)}};
    CHECK(nullspace(id).empty());
  }

  TEST_CASE("fixture map kernel is {k}") {
    LinearMap D = fixture_map();
    auto k = nullspace(D);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec::unit(1));
  }

  TEST_CASE("preimages under the pivot rule") {
    GradedBasis three = flat_basis("b", 3);
    LinearMap id{three, three, 0, {Vec::unit(0), Vec::unit(1), Vec::unit(2)}};
    CHECK(solve_preimage(id, Vec::unit(0)) == Vec::unit(0));

    GradedBasis two = flat_basis("a", 2);
    LinearMap zero{two, two, 0, {Vec(), Vec()}};
    CHECK_THROWS_AS(solve_preimage(zero, Vec::unit(1)), NotInImage);
    CHECK(solve_preimage(zero, Vec()) == Vec());

    LinearMap D = fixture_map();
    CHECK(solve_preimage(D, Vec::unit(0, Scalar(3))) == Vec::unit(0, Scalar(3)));
    CHECK_THROWS_AS(solve_preimage(D, Vec::unit(1)), NotInImage);
  }

  TEST_CASE("free variables are set to zero") {
    // M(u1) = v1, M(u2) = v1: the pivot rule must pick u1 and leave u2 at 0.
    GradedBasis source = flat_basis("u", 2);
    GradedBasis target = flat_basis("v", 1);
    LinearMap m{source, target, 0, {Vec::unit(0), Vec::unit(0)}};
    CHECK(solve_preimage(m, Vec::unit(0)) == Vec::unit(0));
  }

  TEST_CASE("solve_preimage is a section of apply") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      LinearMap m = random_map(rng, dim(rng), dim(rng));
      Vec x;
      for (int j = 0; j < m.source.size(); ++j) x.add_term(j, Scalar(coeff(rng)));
      Vec y = m.apply(x);
      Vec back = solve_preimage(m, y);
      CHECK(m.apply(back) == y);
    }
  }

  TEST_CASE("kernel vectors are annihilated, independent, and span-stable") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
      LinearMap m = random_map(rng, dim(rng), dim(rng));
      auto kernel = nullspace(m);
      for (const Vec& v : kernel) CHECK(m.apply(v).is_zero());
      // independence: the column map built from the kernel vectors has
      // trivial kernel itself
      if (!kernel.empty()) {
        GradedBasis index_basis = flat_basis("t", static_cast<int>(kernel.size()), 1);
        LinearMap column_map{index_basis, m.source, -1, kernel};
        CHECK(nullspace(column_map).empty());
      }
      // same kernel after composing with an injective map on the target:
      // P has an extra row copy, so P o M has the same nullspace
      GradedBasis bigger = flat_basis("w", m.target.size() + 1);
      LinearMap compose{m.source, bigger, 0, {}};
      for (const Vec& col : m.columns) {
        Vec stacked = col;
        for (const auto& [idx, s] : col.coeffs()) stacked.add_term(m.target.size(), s);
        compose.columns.push_back(stacked);
      }
      auto kernel2 = nullspace(compose);
      REQUIRE(kernel.size() == kernel2.size());
      for (const Vec& v : kernel) CHECK(in_span(kernel2, v, m.source));
      for (const Vec& v : kernel2) CHECK(in_span(kernel, v, m.source));
    }
  }

  TEST_CASE("degree shift validation") {
    GradedBasis source;
    source.add("a", 1);
    GradedBasis target;
    target.add("b", 0);
    target.add("c", 1);
    LinearMap good{source, target, -1, {Vec::unit(0)}};
    CHECK_NOTHROW(good.validate());
    LinearMap bad{source, target, -1, {Vec::unit(1)}};
    CHECK_THROWS_AS(bad.validate(), DegreeRuleViolation);
  }
}
