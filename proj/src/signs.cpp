#include "linfty/signs.hpp"

namespace linfty {

int perm_parity(std::span<const int> perm) {
  int inversions = 0;
  for (size_t p = 0; p < perm.size(); ++p)
    for (size_t q = p + 1; q < perm.size(); ++q)
      if (perm[p] > perm[q]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  // One factor (-1)^{deg_a * deg_b} per inversion pair.
  int sign = 1;
  for (size_t p = 0; p < perm.size(); ++p) {
    for (size_t q = p + 1; q < perm.size(); ++q) {
      if (perm[p] > perm[q] && (degrees[perm[p]] % 2) && (degrees[perm[q]] % 2)) sign = -sign;
    }
  }
  return sign;
}

std::vector<std::vector<int>> unshuffles(int i, int n) {
  std::vector<std::vector<int>> result;
  std::vector<int> comb(i);
  for (int p = 0; p < i; ++p) comb[p] = p;
  while (true) {
    std::vector<int> perm;
    perm.reserve(n);
    perm.insert(perm.end(), comb.begin(), comb.end());
    std::vector<bool> in_first(n, false);
    for (int c : comb) in_first[c] = true;
    for (int p = 0; p < n; ++p)
      if (!in_first[p]) perm.push_back(p);
    result.push_back(std::move(perm));
    // next lexicographic combination
    int pos = i - 1;
    while (pos >= 0 && comb[pos] == n - i + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (int p = pos + 1; p < i; ++p) comb[p] = comb[p - 1] + 1;
  }
  return result;
}

}  // namespace linfty
