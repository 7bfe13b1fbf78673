#pragma once

#include "linfty/constructions.hpp"

namespace linfty {

// Octonion structure constants eta_{abc} on indices 1..7 with the index split
// a = (i, ibar, 7), ibar = i + 3:
//   eta_{ijk} = eps_{ijk},  eta_{i jbar kbar} = -eps_{ijk},  eta_{7 i ibar} = 1.
struct EtaTensor {
  int v[8][8][8] = {};
  int at(int a, int b, int c) const { return v[a][b][c]; }
};

// Theta_{abcd} = (1/3!) eps_{abcdefg} eta_{efg}.
struct ThetaTensor {
  int v[8][8][8][8] = {};
  int at(int a, int b, int c, int d) const { return v[a][b][c][d]; }
};

int eps3(int i, int j, int k);                 // 3-index Levi-Civita, 0 on repeats
int eps7(const int (&idx)[7]);                 // 7-index Levi-Civita

EtaTensor octonion_eta();
ThetaTensor octonion_theta();

// Commutator algebra of the imaginary octonions: [e_a, e_b] = 2 eta_{abc} e_c
// over Q, labels e1..e7, all degree 0.
HomotopyAlgebra imaginary_octonions();

// Unital product e_a e_b = -delta_{ab} 1 + eta_{abc} e_c on labels one, e1..e7.
StarProduct octonion_star();

// Rescaling data for a contraction: each basis element is replaced by
// prefactor * mu^exponent times itself and renamed.
struct ScalingWeights {
  struct Entry {
    std::string new_label;
    Gaussian prefactor;  // nonzero
    int mu_exponent = 0;
  };
  std::map<std::string, Entry> by_old_label;
};

// The mu -> 0 limit: rescale, demand no negative mu powers in any structure
// constant (DivergentContraction otherwise), keep the mu^0 coefficient.
// Output scalars live in Q(i).
HomotopyAlgebra contract(const HomotopyAlgebra& algebra, const ScalingWeights& weights);

// Rename basis labels in place (positions and structure constants unchanged).
HomotopyAlgebra relabel(const HomotopyAlgebra& algebra,
                        const std::map<std::string, std::string>& renames);

// The contracted algebra with [x^i, p_j] = i delta^i_j I, [x^i, x^j] =
// i eps^{ijk} p_k, [p_i, p_j] = 0 and central I; basis p1..p3, x1..x3, I
// over Q(i) (the order the contraction produces).
HomotopyAlgebra rflux_algebra();

// The weights p_i = -1/2 lambda i e_i, x^i = 1/2 sqrt(lambda) i f_i,
// I = 1/2 i lambda^{3/2} e_7 with mu = sqrt(lambda).
ScalingWeights rflux_weights();

// Position/momentum exchange applied to rflux_algebra.
HomotopyAlgebra monopole_algebra();

// Minimal 2-term extension of the contracted algebra: X1 = {I*}, l1(I*) = I,
// l3(x^i, x^j, x^k) = -3 eps^{ijk} I*.
HomotopyAlgebra rflux_linfty();

// rflux_linfty with its 3-bracket removed; fails the n=3 relation on
// (x1, x2, x3).
HomotopyAlgebra rflux_without_l3();

// Theorem-style doubling of the octonion commutator algebra (14-dim).
HomotopyAlgebra octonions_two_term();

// Desk-scale three-term fixture over the contracted algebra: U = {I*, k},
// D(I*) = I, D(k) = 0, with kernel-valued section components chosen so that
// the 4-bracket is nonzero: f(x1,x2,x3) = 3 I* + k, f(p3,x1,x2) = k,
// f(I,x1,x2) = k, action = 0.
ThreeTermData rflux_three_term_data();

// A second valid section choice on the same input: f at its pivot defaults,
// action overrides x1(I*) = k and x2(k) = k (nonzero mixed 3-bracket g).
ThreeTermData rflux_three_term_data_alt();

HomotopyAlgebra rflux_three_term();

}  // namespace linfty
