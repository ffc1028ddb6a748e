#pragma once

#include "gl3/surd.hpp"

#include <array>
#include <vector>

namespace gl3 {

// Prefactor 𝔉^{d,k,a}_{m,i}; caller guarantees the factorial arguments are nonnegative.
SurdScalar cg_prefactor(int d, int k, int a, int m, int i);

bool cg_selection(int d, int k, int a, int m, int i);

// C^{d,k,a}_{m,i} = <k i d m | (d+a) (i+m)> for k in {1,2}
SurdScalar cg(int d, int k, int a, int m, int i);

// Floating value from a per-(d,k,a) cache; safe for concurrent readers.
double cg_value(int d, int k, int a, int m, int i);

// Rows m = -d..d, columns i = -k..k.
struct CGTable {
    int d, k, a;
    std::vector<SurdScalar> entries;
    const SurdScalar& operator()(int m, int i) const { return entries[(m + d) * (2 * k + 1) + (i + k)]; }
};
CGTable cg_matrix(int d, int k, int a);

// 𝔅^d indexed a = -2..2 (entry a at position a+2)
std::array<SurdScalar, 5> cgb_vector(int d);

// sum_{±} C^{d,2,a}_{m∓1,±1} sqrt(d(d+1)-m(m∓1)) - C^{d,2,a}_{m,0} 𝔅^d_a
double cg_sum_identity(int d, int m, int a);

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) for j1 in {1,2} and j3 - j2 in [-j1, j1]
SurdScalar three_j(int j1, int j2, int j3, int m1, int m2, int m3);

}  // namespace gl3
