#pragma once

#include <span>
#include <vector>

namespace linfty {

// Sign of a permutation given as the image list (perm[p] = original position
// placed at p, 0-based).
int perm_parity(std::span<const int> perm);

// Koszul sign eps(sigma; x) of the wedge model with
// x_1 ^ ... ^ x_n = eps * x_{sigma(1)} ^ ... ^ x_{sigma(n)}.
// `degrees` are indexed by original position; only parity matters.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

// All (i, n-i)-unshuffles: permutations strictly increasing on the first i
// and the last n-i positions, in lexicographic order of the first block.
std::vector<std::vector<int>> unshuffles(int i, int n);

}  // namespace linfty
