#pragma once

#include "gl3/clebsch_gordan.hpp"
#include "gl3/jet.hpp"
#include "gl3/surd.hpp"
#include "gl3/types.hpp"

#include <string>

namespace gl3 {

using RotationMatrix = Mat3<double>;

enum class Weyl { I, w2, w3, w4, w5, wl };

struct VElement {
    int e1 = 1, e2 = 1;  // v_{e1,e2} = diag(e1, e1 e2, e2)
};

struct VCharacter {
    int e1 = 1, e2 = 1;  // chi(v_{-+}) = e1, chi(v_{+-}) = e2
    int operator()(const VElement& v) const { return (v.e1 < 0 ? e1 : 1) * (v.e2 < 0 ? e2 : 1); }
};

double jacobi_polynomial(int n, double a, double b, double x);
// explicit binomial sum, independent of the recurrence
double jacobi_polynomial_sum(int n, double a, double b, double x);

double wigner_small_d(int d, int m_row, int m_col, double x);

Mat3<int> weyl_matrix(Weyl w);
Mat3<int> v_matrix(VElement v);
Weyl weyl_compose(Weyl a, Weyl b);
Weyl weyl_inverse(Weyl w);
std::string weyl_name(Weyl w);
Weyl weyl_from_name(const std::string& s);

// k(alpha,0,0) w3 k(-beta,0,0) w3 k(gamma,0,0)
RotationMatrix euler_rotation(double alpha, double beta, double gamma);
RotationMatrix rotation_z(double theta);
void check_rotation(const RotationMatrix& k, double tol = 1e-12);
bool equal_mod_sign(const Mat3<int>& a, const Mat3<int>& b);

SpectralParameter weyl_action(const SpectralParameter& mu, Weyl w);
// v' with w v w^{-1} = v'
VElement wv_commutation(Weyl w, VElement v);

// Scalar constants needed by the polynomial construction of D^d.
template <class T> struct ScalarTraits;
template <> struct ScalarTraits<cplx> {
    static cplx inv_sqrt2() { return 1.0 / std::sqrt(2.0); }
    static cplx i() { return kI; }
    static cplx cg(int d, int k, int a, int m, int n) { return cg_value(d, k, a, m, n); }
};
template <> struct ScalarTraits<Jet> {
    static Jet inv_sqrt2() { return Jet(1.0 / std::sqrt(2.0)); }
    static Jet i() { return Jet(kI); }
    static Jet cg(int d, int k, int a, int m, int n) { return Jet(cg_value(d, k, a, m, n)); }
};
template <> struct ScalarTraits<ComplexSurd> {
    static ComplexSurd inv_sqrt2() { return ComplexSurd(SurdSum(SurdScalar(Rational(1, 2), Rational(2)))); }
    static ComplexSurd i() { return ComplexSurd::i_pow(1); }
    static ComplexSurd cg(int d, int k, int a, int m, int n) { return ComplexSurd(SurdSum(gl3::cg(d, k, a, m, n))); }
};

// D^1(k) = U* k U^T in the spherical basis e_{-1}, e_0, e_{+1}.
template <class T>
CenterIndexedMatrix<T> wigner_D1(const Mat3<T>& k) {
    using S = ScalarTraits<T>;
    const T s = S::inv_sqrt2(), im = S::i(), zero(0), one(1);
    const std::array<std::array<T, 3>, 3> e = {{{s, -(im * s), zero}, {zero, zero, one}, {-s, -(im * s), zero}}};
    const std::array<std::array<T, 3>, 3> ec = {{{s, im * s, zero}, {zero, zero, one}, {-s, im * s, zero}}};
    CenterIndexedMatrix<T> D(1);
    for (int mp = -1; mp <= 1; ++mp)
        for (int m = -1; m <= 1; ++m) {
            T acc(0);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) acc += ec[mp + 1][a] * k[a][b] * e[m + 1][b];
            D(mp, m) = acc;
        }
    return D;
}

// D^d from D^{d-1} and D^1 through the k=1, a=+1 Clebsch-Gordan coupling.
template <class T>
CenterIndexedMatrix<T> wigner_D_raise(const CenterIndexedMatrix<T>& prev, const CenterIndexedMatrix<T>& D1) {
    using S = ScalarTraits<T>;
    const int p = prev.d(), d = p + 1;
    CenterIndexedMatrix<T> D(d);
    std::vector<T> c((2 * p + 1) * 3);
    std::vector<bool> nz(c.size());
    for (int m = -p; m <= p; ++m)
        for (int j = -1; j <= 1; ++j) {
            c[(m + p) * 3 + j + 1] = S::cg(p, 1, 1, m, j);
            nz[(m + p) * 3 + j + 1] = cg_selection(p, 1, 1, m, j);
        }
    for (int Mp = -d; Mp <= d; ++Mp)
        for (int M = -d; M <= d; ++M) {
            T acc(0);
            for (int j = -1; j <= 1; ++j) {
                int mp = Mp - j;
                if (mp < -p || mp > p || !nz[(mp + p) * 3 + j + 1]) continue;
                for (int i = -1; i <= 1; ++i) {
                    int m = M - i;
                    if (m < -p || m > p || !nz[(m + p) * 3 + i + 1]) continue;
                    acc += c[(mp + p) * 3 + j + 1] * c[(m + p) * 3 + i + 1] * D1(j, i) * prev(mp, m);
                }
            }
            D(Mp, M) = acc;
        }
    return D;
}

template <class T>
CenterIndexedMatrix<T> wigner_D_generic(int d, const Mat3<T>& k) {
    if (d < 0) throw IndexError("negative dimension parameter");
    CenterIndexedMatrix<T> D(0, T(1));
    if (d == 0) return D;
    const auto D1 = wigner_D1(k);
    D = D1;
    for (int e = 2; e <= d; ++e) D = wigner_D_raise(D, D1);
    return D;
}

// all of D^0..D^dmax at once
template <class T>
std::vector<CenterIndexedMatrix<T>> wigner_D_all(int dmax, const Mat3<T>& k) {
    std::vector<CenterIndexedMatrix<T>> out;
    out.emplace_back(0, T(1));
    if (dmax == 0) return out;
    const auto D1 = wigner_D1(k);
    out.push_back(D1);
    for (int e = 2; e <= dmax; ++e) out.push_back(wigner_D_raise(out.back(), D1));
    return out;
}

CMat wigner_D(int d, const RotationMatrix& k);
CenterIndexedMatrix<ComplexSurd> wigner_D_exact(int d, const Mat3<int>& k);
CMat to_numeric(const CenterIndexedMatrix<ComplexSurd>& M);

CenterIndexedMatrix<ComplexSurd> sigma_projection(int d, VCharacter chi);

CVec basis_v(int d, int j);
CVec basis_u(int d, int j, int sign);

}  // namespace gl3
