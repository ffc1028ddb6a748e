#include "gl3/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace gl3 {

double jacobi_polynomial(int n, double a, double b, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_polynomial: negative degree");
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = (a - b + x * (2.0 + a + b)) / 2.0;
    for (int k = 2; k <= n; ++k) {
        double s = 2.0 * k + a + b;
        double lead = 2.0 * k * (k + a + b) * (s - 2.0);
        if (lead == 0.0) return jacobi_polynomial_sum(n, a, b, x);
        double p2 = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * p1 -
                     2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0) / lead;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

double gen_binomial(double z, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (z - i) / (i + 1);
    return r;
}

}  // namespace

double jacobi_polynomial_sum(int n, double a, double b, double x) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        s += gen_binomial(n + a, n - k) * gen_binomial(n + b, k) * std::pow((x - 1.0) / 2.0, k) *
             std::pow((x + 1.0) / 2.0, n - k);
    return s;
}

double wigner_small_d(int d, int m_row, int m_col, double x) {
    if (std::abs(m_row) > d || std::abs(m_col) > d) throw IndexError("wigner_small_d: index out of range");
    // move to an equivalent entry with m_col >= |m_row| so every exponent is nonnegative
    int A = m_row, B = m_col;
    double sign = 1.0;
    const double parity = ((m_row + m_col) % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(m_row) > std::abs(m_col)) { std::swap(A, B); sign = parity; }
    if (B < 0) { A = -A; B = -B; sign *= parity; }
    double num = 1.0, den = 1.0;  // (d+B)!(d-B)!/((d+A)!(d-A)!)
    for (int k = 1; k <= d + B; ++k) num *= k;
    for (int k = 1; k <= d - B; ++k) num *= k;
    for (int k = 1; k <= d + A; ++k) den *= k;
    for (int k = 1; k <= d - A; ++k) den *= k;
    double val = std::pow(2.0, -B) * std::sqrt(num / den) * std::pow(1.0 - x, (B - A) / 2.0) *
                 std::pow(1.0 + x, (B + A) / 2.0) * jacobi_polynomial(d - B, B - A, B + A, x);
    return sign * val;
}

Mat3<int> weyl_matrix(Weyl w) {
    switch (w) {
        case Weyl::I: return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        case Weyl::w2: return {{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}};
        case Weyl::w3: return {{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}};
        case Weyl::w4: return {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
        case Weyl::w5: return {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
        case Weyl::wl: return {{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}};
    }
    throw std::invalid_argument("unknown Weyl element");
}

Mat3<int> v_matrix(VElement v) {
    if (std::abs(v.e1) != 1 || std::abs(v.e2) != 1) throw std::invalid_argument("V element signs must be +-1");
    return {{{v.e1, 0, 0}, {0, v.e1 * v.e2, 0}, {0, 0, v.e2}}};
}

bool equal_mod_sign(const Mat3<int>& a, const Mat3<int>& b) {
    bool plus = true, minus = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            plus = plus && a[i][j] == b[i][j];
            minus = minus && a[i][j] == -b[i][j];
        }
    return plus || minus;
}

namespace {
const Weyl kAllWeyl[] = {Weyl::I, Weyl::w2, Weyl::w3, Weyl::w4, Weyl::w5, Weyl::wl};
}

Weyl weyl_compose(Weyl a, Weyl b) {
    Mat3<int> p = matmul(weyl_matrix(a), weyl_matrix(b));
    for (Weyl w : kAllWeyl)
        if (equal_mod_sign(p, weyl_matrix(w))) return w;
    throw std::logic_error("Weyl product not found");
}

Weyl weyl_inverse(Weyl w) {
    for (Weyl u : kAllWeyl)
        if (weyl_compose(w, u) == Weyl::I) return u;
    throw std::logic_error("Weyl inverse not found");
}

std::string weyl_name(Weyl w) {
    switch (w) {
        case Weyl::I: return "I";
        case Weyl::w2: return "w2";
        case Weyl::w3: return "w3";
        case Weyl::w4: return "w4";
        case Weyl::w5: return "w5";
        case Weyl::wl: return "wl";
    }
    return "?";
}

Weyl weyl_from_name(const std::string& s) {
    for (Weyl w : kAllWeyl)
        if (weyl_name(w) == s) return w;
    throw std::invalid_argument("unknown Weyl element name: " + s);
}

RotationMatrix rotation_z(double t) {
    double c = std::cos(t), s = std::sin(t);
    return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

RotationMatrix euler_rotation(double alpha, double beta, double gamma) {
    const RotationMatrix w3 = mat_cast<double>(weyl_matrix(Weyl::w3));
    return matmul(matmul(matmul(matmul(rotation_z(alpha), w3), rotation_z(-beta)), w3), rotation_z(gamma));
}

void check_rotation(const RotationMatrix& k, double tol) {
    RotationMatrix p = matmul(transpose(k), k);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(p[i][j] - (i == j ? 1.0 : 0.0)) > tol)
                throw std::invalid_argument("matrix is not orthogonal");
    double det = k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) -
                 k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
                 k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
    if (std::abs(det - 1.0) > tol) throw std::invalid_argument("rotation must have determinant +1");
}

SpectralParameter weyl_action(const SpectralParameter& mu, Weyl w) {
    const cplx a = mu.mu1, b = mu.mu2, c = mu.mu3;
    switch (w) {
        case Weyl::I: return {a, b, c};
        case Weyl::w2: return {b, a, c};
        case Weyl::w3: return {a, c, b};
        case Weyl::w4: return {c, a, b};
        case Weyl::w5: return {b, c, a};
        case Weyl::wl: return {c, b, a};
    }
    throw std::invalid_argument("unknown Weyl element");
}

VElement wv_commutation(Weyl w, VElement v) {
    Mat3<int> W = weyl_matrix(w);
    Mat3<int> p = matmul(matmul(W, v_matrix(v)), transpose(W));
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            if (p == v_matrix({e1, e2})) return {e1, e2};
    throw std::logic_error("conjugate of V element is not in V");
}

CMat wigner_D(int d, const RotationMatrix& k) {
    check_rotation(k, 1e-10);
    return wigner_D_generic<cplx>(d, mat_cast<cplx>(k));
}

CenterIndexedMatrix<ComplexSurd> wigner_D_exact(int d, const Mat3<int>& k) {
    Mat3<ComplexSurd> ks;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ks[i][j] = ComplexSurd(SurdSum(k[i][j]));
    return wigner_D_generic<ComplexSurd>(d, ks);
}

CMat to_numeric(const CenterIndexedMatrix<ComplexSurd>& M) {
    CMat R(M.d());
    for (int i = -M.d(); i <= M.d(); ++i)
        for (int j = -M.d(); j <= M.d(); ++j) R(i, j) = M(i, j).to_complex();
    return R;
}

CenterIndexedMatrix<ComplexSurd> sigma_projection(int d, VCharacter chi) {
    CenterIndexedMatrix<ComplexSurd> S(d);
    const ComplexSurd quarter(SurdSum(SurdScalar(Rational(1, 4))));
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            VElement v{e1, e2};
            auto Dv = wigner_D_exact(d, v_matrix(v));
            ComplexSurd c = quarter * ComplexSurd(SurdSum(chi(v)));
            for (int i = -d; i <= d; ++i)
                for (int j = -d; j <= d; ++j) S(i, j) += c * Dv(i, j);
        }
    return S;
}

CVec basis_v(int d, int j) {
    CVec v(d);
    v(j) = 1.0;
    return v;
}

CVec basis_u(int d, int j, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("basis_u sign must be +-1");
    CVec v(d);
    v(j) += 0.5;
    double s = sign * ((d % 2 == 0) ? 1.0 : -1.0);
    v(-j) += 0.5 * s;
    return v;
}

}  // namespace gl3
