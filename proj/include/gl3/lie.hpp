#pragma once

#include "gl3/jet.hpp"
#include "gl3/surd.hpp"
#include "gl3/types.hpp"
#include "gl3/wigner.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gl3 {

struct IwasawaPoint {
    double x1 = 0, x2 = 0, x3 = 0;
    double y1 = 1, y2 = 1;
    double alpha = 0, beta = 0, gamma = 0;
    RotationMatrix k() const { return euler_rotation(alpha, beta, gamma); }
};

template <class T>
struct IwasawaCoords {
    T x1, x2, x3, y1, y2;
    Mat3<T> k;
};

// g = x y k with x = [[1,x2,x3],[0,1,x1],[0,0,1]], y = diag(y1 y2, y1, 1)
template <class T>
Mat3<T> assemble(const IwasawaCoords<T>& c) {
    Mat3<T> xy{};
    xy[0][0] = c.y1 * c.y2; xy[0][1] = c.x2 * c.y1; xy[0][2] = c.x3;
    xy[1][0] = T(0);        xy[1][1] = c.y1;        xy[1][2] = c.x1;
    xy[2][0] = T(0);        xy[2][1] = T(0);        xy[2][2] = T(1);
    return matmul(xy, c.k);
}

inline double real_part(double v) { return v; }
inline double real_part(const cplx& v) { return v.real(); }
inline double real_part(const Jet& v) { return v.coefficients()[0].real(); }

// g = r x y k by Gram-Schmidt on the rows from the bottom; holomorphic in the
// entries (no conjugation), so complex jets pass through.
template <class T>
IwasawaCoords<T> iwasawa_decompose_generic(const Mat3<T>& g) {
    auto dot = [](const std::array<T, 3>& a, const std::array<T, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    auto axpy = [](std::array<T, 3> a, const T& s, const std::array<T, 3>& b) {
        for (int i = 0; i < 3; ++i) a[i] = a[i] - s * b[i];
        return a;
    };
    auto scale = [](std::array<T, 3> a, const T& s) {
        for (int i = 0; i < 3; ++i) a[i] = a[i] / s;
        return a;
    };
    using std::sqrt;
    const auto& r1 = g[0];
    const auto& r2 = g[1];
    const auto& r3 = g[2];
    auto q3 = scale(r3, sqrt(dot(r3, r3)));
    auto t2 = axpy(r2, dot(r2, q3), q3);
    auto q2 = scale(t2, sqrt(dot(t2, t2)));
    auto t1 = axpy(axpy(r1, dot(r1, q3), q3), dot(r1, q2), q2);
    auto q1 = scale(t1, sqrt(dot(t1, t1)));
    IwasawaCoords<T> c;
    c.k = {q1, q2, q3};
    T det = q1[0] * (q2[1] * q3[2] - q2[2] * q3[1]) - q1[1] * (q2[0] * q3[2] - q2[2] * q3[0]) +
            q1[2] * (q2[0] * q3[1] - q2[1] * q3[0]);
    if (real_part(det) < 0)  // g = r x y k with r < 0
        for (auto& row : c.k)
            for (auto& e : row) e = -e;
    T R11 = dot(r1, q1), R12 = dot(r1, q2), R13 = dot(r1, q3);
    T R22 = dot(r2, q2), R23 = dot(r2, q3), R33 = dot(r3, q3);
    c.x3 = R13 / R33;
    c.x1 = R23 / R33;
    c.y1 = R22 / R33;
    c.x2 = R12 / R22;
    c.y2 = R11 / R22;
    return c;
}

IwasawaCoords<double> iwasawa_decompose(const Mat3<double>& g);
IwasawaCoords<double> to_coords(const IwasawaPoint& p);

using GroupFunction = std::function<Jet(const IwasawaCoords<Jet>&)>;

// p_{rho+mu}(y) = y1^{1-mu3} y2^{1+mu1}
cplx power_function(const SpectralParameter& mu, double y1, double y2);
Jet power_function(const SpectralParameter& mu, const Jet& y1, const Jet& y2);

// f = p_{rho+mu}(y) psi_n(x) D^d_{m',m}(k), psi_n(x) = e(n1 x1 + n2 x2)
GroupFunction test_function(const SpectralParameter& mu, double n1, double n2, int d, int mp, int m);
// g -> f(g0 g)
GroupFunction left_translate(const GroupFunction& f, const Mat3<double>& g0);

// Lie algebra bases; exact and numeric
Mat3<ComplexSurd> x_matrix_exact(int j);
Mat3<ComplexSurd> k_matrix_exact(int j);
Mat3<ComplexSurd> e_matrix_exact(int i, int j);  // 1-based indices
Mat3<cplx> to_numeric(const Mat3<ComplexSurd>& m);
Mat3<cplx> x_matrix(int j);
Mat3<cplx> k_matrix(int j);
Mat3<cplx> e_matrix(int i, int j);

// d/dt1 ... d/dtk f(g e^{t1 X1} ... e^{tk Xk}) at 0
cplx lie_derivative(const GroupFunction& f, const IwasawaPoint& p, const std::vector<Mat3<cplx>>& dirs);
cplx lie_derivative(const GroupFunction& f, const Mat3<double>& g, const std::vector<Mat3<cplx>>& dirs);
// d/dt1 ... d/dtk f(x y e^{t1 K1} ... e^{tk Kk} k) at 0, the left K operators
cplx k_left_derivative(const GroupFunction& f, const IwasawaPoint& p, const std::vector<Mat3<cplx>>& dirs);
cplx evaluate(const GroupFunction& f, const IwasawaPoint& p);

// Coordinate-operator engine. A seed jet in the variables (x1,x2,x3,y1,y2,s,t)
// evaluates f at x y exp(s K_left) k exp(t K_right).
class CoordinateJet {
public:
    enum Var { X1 = 0, X2, X3, Y1, Y2, S, T, NVARS };
    CoordinateJet(const GroupFunction& f, const IwasawaPoint& p, int left_dir, int right_dir);
    const Jet& value() const { return F_; }
    // coordinate jets for use as operator coefficients
    const Jet& coord(Var v) const { return coords_[v]; }
    int left_dir() const { return left_; }
    int right_dir() const { return right_; }

    Jet Z(int j, const Jet& G) const;
    Jet Ztilde(int j, const Jet& G) const;  // needs left_dir == j for j = +-1, 0 for j = +-2
    Jet KLeft(const Jet& G) const { return G.d(S); }
    Jet KRight(const Jet& G) const { return G.d(T); }
    Jet delta1_spherical(const Jet& G) const;
    Jet delta2_spherical(const Jet& G) const;

private:
    int left_, right_;
    std::array<Jet, NVARS> coords_;
    Jet F_;
};

// Named coordinate operators: "Z2","Z1","Z0","Z-1","Z-2","KL1","KL0","KL-1","K1","K0","K-1"
cplx coordinate_operator(const std::string& name, const GroupFunction& f, const IwasawaPoint& p);

// X_j f via sum_l D^2_{l,j}(k) Ztilde_l
cplx x_operator(int j, const GroupFunction& f, const IwasawaPoint& p);
// X_j f via the flow derivative with the matrix X_j
cplx x_operator_flow(int j, const GroupFunction& f, const IwasawaPoint& p);

// Delta_1, Delta_2 from the coordinate expressions with left K operators
cplx casimir(int which, const GroupFunction& f, const IwasawaPoint& p);
// Delta_1, Delta_2 from the E_{ij} sums by flow derivatives
cplx casimir_definition(int which, const GroupFunction& f, const IwasawaPoint& p);
cplx casimir_definition(int which, const GroupFunction& f, const Mat3<double>& g);
// casimir_definition - casimir
cplx casimir_definition_check(int which, const GroupFunction& f, const IwasawaPoint& p);

// central finite-difference cross-check of a first-order flow derivative
cplx lie_derivative_fd(const GroupFunction& f, const IwasawaPoint& p, const Mat3<double>& dir, double h = 1e-5);

cplx lambda1(const SpectralParameter& mu);
cplx lambda2(const SpectralParameter& mu);
cplx lambda_x_eigenvalue(const SpectralParameter& mu, double x);
// ((t1-t2)^2+4x^2)((2t1+t2)^2+4x^2)((t1+2t2)^2+4x^2) for mu = (i t1, i t2, -i(t1+t2))
double lambda_x_unitary_form(double t1, double t2, double x);
// 4(x-a)(x+a)(9t^2+(2x-a)^2)(9t^2+(2x+a)^2) for mu = (a+it, -a+it, -2it)
double lambda_x_shifted_form(double a, double t, double x);

// Iwasawa basis N1=E23, N2=E12, N3=E13, 3A1=E11+E22-2E33, 3A2=2E11-E22-E33
Mat3<ComplexSurd> iwasawa_basis_exact(const std::string& name);

}  // namespace gl3
