#include <doctest.h>

#include <algorithm>
#include <random>

#include "linfty/signs.hpp"

using namespace linfty;

namespace {

// Independent Koszul-sign oracle: bubble-sort the permuted sequence back to
// identity order, accumulating (-1)^{d_a d_b} per adjacent swap.
int koszul_oracle(std::vector<int> perm, const std::vector<int>& degrees) {
  int sign = 1;
  for (size_t p = 1; p < perm.size(); ++p)
    for (size_t q = p; q > 0 && perm[q - 1] > perm[q]; --q) {
      if ((degrees[perm[q - 1]] % 2) && (degrees[perm[q]] % 2)) sign = -sign;
      std::swap(perm[q - 1], perm[q]);
    }
  return sign;
}

}  // namespace

TEST_SUITE("signs") {
  TEST_CASE("permutation parity") {
    CHECK(perm_parity(std::vector<int>{0, 1, 2}) == 1);
    CHECK(perm_parity(std::vector<int>{1, 0, 2}) == -1);
    CHECK(perm_parity(std::vector<int>{1, 2, 0}) == 1);  // 3-cycle
    CHECK(perm_parity(std::vector<int>{0}) == 1);
  }

  TEST_CASE("koszul sign basics") {
    std::vector<int> even{0, 0, 0};
    CHECK(koszul_sign(std::vector<int>{2, 1, 0}, even) == 1);
    std::vector<int> odd{1, 1};
    CHECK(koszul_sign(std::vector<int>{1, 0}, odd) == -1);
    std::vector<int> mixed{1, 0};
    CHECK(koszul_sign(std::vector<int>{1, 0}, mixed) == 1);
    CHECK(koszul_sign(std::vector<int>{0, 1}, odd) == 1);  // identity
  }

  TEST_CASE("koszul sign agrees with the bubble-sort oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(1, 7);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
      int n = len(rng);
      std::vector<int> perm(n);
      for (int p = 0; p < n; ++p) perm[p] = p;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> degrees(n);
      for (int p = 0; p < n; ++p) degrees[p] = deg(rng);
      CHECK(koszul_sign(perm, degrees) == koszul_oracle(perm, degrees));
    }
  }

  TEST_CASE("koszul sign composition in the wedge model") {
    // eps(tau o sigma; x) = eps(tau; x) * eps(sigma; tau x)
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
      int n = 6;
      std::vector<int> sigma(n), tau(n), degrees(n);
      for (int p = 0; p < n; ++p) sigma[p] = tau[p] = p;
      std::shuffle(sigma.begin(), sigma.end(), rng);
      std::shuffle(tau.begin(), tau.end(), rng);
      for (int p = 0; p < n; ++p) degrees[p] = deg(rng);
      std::vector<int> composed(n), tau_degrees(n);
      for (int p = 0; p < n; ++p) {
        composed[p] = tau[sigma[p]];
        tau_degrees[p] = degrees[tau[p]];
      }
      CHECK(koszul_sign(composed, degrees) ==
            koszul_sign(tau, degrees) * koszul_sign(sigma, tau_degrees));
    }
  }

  TEST_CASE("unshuffle counts and shape") {
    auto u23 = unshuffles(2, 3);
    REQUIRE(u23.size() == 3);
    CHECK(u23[0] == std::vector<int>{0, 1, 2});
    CHECK(u23[1] == std::vector<int>{0, 2, 1});
    CHECK(u23[2] == std::vector<int>{1, 2, 0});

    auto u11 = unshuffles(1, 1);
    REQUIRE(u11.size() == 1);
    CHECK(u11[0] == std::vector<int>{0});

    CHECK(unshuffles(2, 4).size() == 6);

    for (int n = 1; n <= 7; ++n) {
      for (int i = 1; i <= n; ++i) {
        auto all = unshuffles(i, n);
        // binomial(n, i)
        long expect = 1;
        for (int p = 0; p < i; ++p) expect = expect * (n - p) / (p + 1);
        CHECK(static_cast<long>(all.size()) == expect);
        for (const auto& perm : all) {
          for (int p = 1; p < i; ++p) CHECK(perm[p - 1] < perm[p]);
          for (int p = i + 1; p < n; ++p) CHECK(perm[p - 1] < perm[p]);
        }
        // distinctness
        auto copy = all;
        std::sort(copy.begin(), copy.end());
        CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
      }
    }
  }
}
