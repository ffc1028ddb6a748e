#include "doctest.h"
#include "gl3/lie.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace gl3;
using gl3::testing::random_complex;
using gl3::testing::random_mu;
using gl3::testing::uniform;

namespace {

IwasawaPoint random_point() {
    IwasawaPoint p;
    p.x1 = uniform(-1, 1);
    p.x2 = uniform(-1, 1);
    p.x3 = uniform(-1, 1);
    p.y1 = uniform(0.5, 2);
    p.y2 = uniform(0.5, 2);
    p.alpha = uniform(0, 2 * kPi);
    p.beta = uniform(0.2, kPi - 0.2);
    p.gamma = uniform(0, 2 * kPi);
    return p;
}

Mat3<ComplexSurd> mat_mul(const Mat3<ComplexSurd>& a, const Mat3<ComplexSurd>& b) { return matmul(a, b); }

Mat3<ComplexSurd> scale(const ComplexSurd& c, const Mat3<ComplexSurd>& a) {
    Mat3<ComplexSurd> r = a;
    for (auto& row : r)
        for (auto& e : row) e = c * e;
    return r;
}

Mat3<ComplexSurd> add(const Mat3<ComplexSurd>& a, const Mat3<ComplexSurd>& b) {
    Mat3<ComplexSurd> r = a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

Mat3<ComplexSurd> commutator(const Mat3<ComplexSurd>& a, const Mat3<ComplexSurd>& b) {
    return add(mat_mul(a, b), scale(ComplexSurd(SurdSum(-1)), mat_mul(b, a)));
}

bool is_zero(const Mat3<ComplexSurd>& m) {
    for (auto& r : m)
        for (auto& e : r)
            if (!e.is_zero()) return false;
    return true;
}

ComplexSurd cs(const SurdScalar& s) { return ComplexSurd(SurdSum(s)); }

Mat3<cplx> cmul(const Mat3<cplx>& a, const Mat3<cplx>& b) { return matmul(a, b); }

double mdiff(const Mat3<cplx>& a, const Mat3<cplx>& b) {
    double e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e = std::max(e, std::abs(a[i][j] - b[i][j]));
    return e;
}

}  // namespace

TEST_CASE("power function") {
    SpectralParameter zero{0.0, 0.0, 0.0};
    CHECK(std::abs(power_function(zero, 1.0, 1.0) - 1.0) < 1e-15);
    SpectralParameter mu{1.0, 0.0, -1.0};
    CHECK(std::abs(power_function(mu, 2.0, 3.0) - 36.0) < 1e-12);
    CHECK_THROWS_AS(power_function(mu, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(power_function(mu, 1.0, 0.0), std::domain_error);

    auto f = test_function(mu, 0, 0, 0, 0, 0);
    IwasawaPoint p = random_point();
    IwasawaPoint q = random_point();
    q.y1 = p.y1;
    q.y2 = p.y2;
    auto v = [&](const IwasawaPoint& r) { return evaluate(f, r); };
    CHECK(std::abs(v(p) - v(q)) < 1e-12 * std::abs(v(p)));
}

TEST_CASE("Iwasawa decomposition") {
    Mat3<double> up = {{{2.0, 0.3, -0.7}, {0.0, 1.5, 0.2}, {0.0, 0.0, 0.5}}};
    auto c = iwasawa_decompose(up);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(c.k[i][j] - (i == j ? 1.0 : 0.0)) < 1e-14);

    auto cl = iwasawa_decompose(mat_cast<double>(weyl_matrix(Weyl::wl)));
    CHECK(std::abs(cl.y1 - 1) < 1e-14);
    CHECK(std::abs(cl.y2 - 1) < 1e-14);
    CHECK(std::abs(cl.x1) + std::abs(cl.x2) + std::abs(cl.x3) < 1e-14);
    auto wl = mat_cast<double>(weyl_matrix(Weyl::wl));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(cl.k[i][j] - wl[i][j]) < 1e-14);

    Mat3<double> sing = {{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}};
    CHECK_THROWS_AS(iwasawa_decompose(sing), std::domain_error);

    for (int n = 0; n < 50; ++n) {
        Mat3<double> g{};
        for (auto& r : g)
            for (auto& e : r) e = uniform(-2, 2);
        auto d = iwasawa_decompose(g);
        check_rotation(d.k, 1e-12);
        CHECK(d.y1 > 0);
        CHECK(d.y2 > 0);
        Mat3<double> back = assemble(d);
        // g = r * back with r scalar
        double r = g[2][2] / back[2][2];
        double err = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) err = std::max(err, std::abs(g[i][j] - r * back[i][j]));
        CHECK(err < 1e-12);
    }
}

TEST_CASE("flow derivatives of the power function") {
    SpectralParameter mu = random_mu();
    auto f = test_function(mu, 0, 0, 0, 0, 0);
    IwasawaPoint p = random_point();
    p.alpha = p.beta = p.gamma = 0;
    cplx F = power_function(mu, p.y1, p.y2);
    Mat3<cplx> zero{};
    CHECK(std::abs(lie_derivative(f, p, {zero})) < 1e-14);
    cplx a1 = lie_derivative(f, p, {to_numeric(iwasawa_basis_exact("A1"))});
    CHECK(std::abs(a1 - (1.0 - mu.mu3) * F) < 1e-10 * std::abs(F));
    cplx a2 = lie_derivative(f, p, {to_numeric(iwasawa_basis_exact("A2"))});
    CHECK(std::abs(a2 - (1.0 + mu.mu1) * F) < 1e-10 * std::abs(F));
}

TEST_CASE("N1 flow matches finite differences") {
    // f depends on x1, x3 only
    GroupFunction f = [](const IwasawaCoords<Jet>& c) { return sin(c.x1) * exp(c.x3 * Jet(0.7)) + c.x3 * c.x3; };
    for (int n = 0; n < 5; ++n) {
        IwasawaPoint p = random_point();
        p.alpha = p.beta = p.gamma = 0;
        cplx flow = lie_derivative(f, p, {to_numeric(iwasawa_basis_exact("N1"))});
        // y1 d/dx1 + y1 x2 d/dx3 by central differences
        auto fx = [&](double x1, double x3) { return std::sin(x1) * std::exp(0.7 * x3) + x3 * x3; };
        double h = 1e-5;
        double dx1 = (fx(p.x1 + h, p.x3) - fx(p.x1 - h, p.x3)) / (2 * h);
        double dx3 = (fx(p.x1, p.x3 + h) - fx(p.x1, p.x3 - h)) / (2 * h);
        CHECK(std::abs(flow - (p.y1 * dx1 + p.y1 * p.x2 * dx3)) < 1e-8);
        cplx fd = lie_derivative_fd(f, p, {{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}});
        CHECK(std::abs(flow - fd) < 1e-8);
    }
}

TEST_CASE("Z operators on the power function") {
    for (int n = 0; n < 5; ++n) {
        SpectralParameter mu = random_mu();
        auto f = test_function(mu, 0, 0, 0, 0, 0);
        IwasawaPoint p = random_point();
        cplx F = power_function(mu, p.y1, p.y2);
        cplx expect[5] = {mu.mu1 - mu.mu2 + 1.0, 0.0, std::sqrt(6.0) * (mu.mu3 - 1.0), 0.0, mu.mu1 - mu.mu2 + 1.0};
        for (int j = -2; j <= 2; ++j) {
            cplx z = coordinate_operator("Z" + std::to_string(j), f, p);
            CHECK(std::abs(z - expect[j + 2] * F) < 1e-10 * std::abs(F));
        }
    }
}

TEST_CASE("K operators on Wigner D entries") {
    for (int d = 0; d <= 4; ++d)
        for (int mp = -d; mp <= d; ++mp)
            for (int m = -d; m <= d; ++m) {
                IwasawaPoint p = random_point();
                p.y1 = p.y2 = 1.0;
                CMat D = wigner_D(d, p.k());
                auto f = test_function({0.0, 0.0, 0.0}, 0, 0, d, mp, m);
                cplx F = evaluate(f, p);
                CHECK(std::abs(F - D(mp, m)) < 1e-12);
                for (int s : {1, -1}) {
                    cplx k = coordinate_operator("K" + std::to_string(s), f, p);
                    cplx expect = std::abs(m + s) <= d ? std::sqrt(double(d * (d + 1) - m * (m + s))) * D(mp, m + s) : 0.0;
                    CHECK(std::abs(k - expect) < 1e-10);
                    cplx kl = coordinate_operator("KL" + std::to_string(s), f, p);
                    cplx expl = std::abs(mp - s) <= d ? std::sqrt(double(d * (d + 1) - mp * (mp - s))) * D(mp - s, m) : 0.0;
                    CHECK(std::abs(kl - expl) < 1e-10);
                }
                cplx k0 = coordinate_operator("K0", f, p);
                CHECK(std::abs(k0 - std::sqrt(2.0) * kI * double(m) * D(mp, m)) < 1e-10);
                cplx kl0 = coordinate_operator("KL0", f, p);
                CHECK(std::abs(kl0 - std::sqrt(2.0) * kI * double(mp) * D(mp, m)) < 1e-10);
            }
}

TEST_CASE("K Laplacian") {
    for (int d = 0; d <= 4; ++d) {
        int mp = d / 2, m = -(d + 1) / 2;
        auto f = test_function({0.0, 0.0, 0.0}, 0, 0, d, mp, m);
        IwasawaPoint p = random_point();
        p.y1 = p.y2 = 1.0;
        cplx F = wigner_D(d, p.k())(mp, m);
        // right form: flow derivatives with K matrices
        cplx right = lie_derivative(f, p, {k_matrix(1), k_matrix(-1)}) + lie_derivative(f, p, {k_matrix(-1), k_matrix(1)}) -
                     lie_derivative(f, p, {k_matrix(0), k_matrix(0)});
        CHECK(std::abs(right / 2.0 - double(d * (d + 1)) * F) < 1e-8);
        cplx left = k_left_derivative(f, p, {k_matrix(1), k_matrix(-1)}) +
                    k_left_derivative(f, p, {k_matrix(-1), k_matrix(1)}) - k_left_derivative(f, p, {k_matrix(0), k_matrix(0)});
        CHECK(std::abs(left / 2.0 - double(d * (d + 1)) * F) < 1e-8);
    }
}

TEST_CASE("X operator: flow and coordinate paths agree") {
    for (int n = 0; n < 5; ++n) {
        SpectralParameter mu = random_mu(1.0);
        int d = 1 + n % 3;
        int mp = int(std::floor(uniform(-d, d + 1)));
        int m = int(std::floor(uniform(-d, d + 1)));
        mp = std::clamp(mp, -d, d);
        m = std::clamp(m, -d, d);
        auto f = test_function(mu, uniform(-1, 1), uniform(-1, 1), d, mp, m);
        IwasawaPoint p = random_point();
        for (int j = -2; j <= 2; ++j) {
            cplx a = x_operator(j, f, p);
            cplx b = x_operator_flow(j, f, p);
            CHECK(std::abs(a - b) < 1e-8 * (1 + std::abs(b)));
        }
    }
    // at k = I and K-independent f, X_0 = -sqrt6 y1 d/dy1
    SpectralParameter mu = random_mu();
    auto f = test_function(mu, 0, 0, 0, 0, 0);
    IwasawaPoint p = random_point();
    p.alpha = p.beta = p.gamma = 0;
    cplx F = power_function(mu, p.y1, p.y2);
    CHECK(std::abs(x_operator(0, f, p) - (-std::sqrt(6.0)) * (1.0 - mu.mu3) * F) < 1e-10 * std::abs(F));
}

TEST_CASE("conjugation of X_j by rotations") {
    for (int n = 0; n < 20; ++n) {
        IwasawaPoint p = random_point();
        auto k = p.k();
        auto kc = mat_cast<cplx>(k);
        auto kt = mat_cast<cplx>(transpose(k));
        CMat D2 = wigner_D(2, k);
        for (int j = -2; j <= 2; ++j) {
            Mat3<cplx> lhs = cmul(cmul(kc, x_matrix(j)), kt);
            Mat3<cplx> rhs{};
            for (int l = -2; l <= 2; ++l) {
                auto X = x_matrix(l);
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) rhs[a][b] += D2(l, j) * X[a][b];
            }
            CHECK(mdiff(lhs, rhs) < 1e-12);
        }
    }
    // exact form at alpha: k(a,0,0) X_j k(-a,0,0) = e^{-ija} X_j, checked at a = pi/2 exactly
    Mat3<int> r90 = {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
    Mat3<int> r90i = transpose(r90);
    auto toS = [](const Mat3<int>& m) {
        Mat3<ComplexSurd> r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = ComplexSurd(SurdSum(m[i][j]));
        return r;
    };
    for (int j = -2; j <= 2; ++j) {
        auto lhs = mat_mul(mat_mul(toS(r90), x_matrix_exact(j)), toS(r90i));
        auto rhs = scale(ComplexSurd::i_pow(((-j) % 4 + 4) % 4), x_matrix_exact(j));
        CHECK(is_zero(add(lhs, scale(ComplexSurd(SurdSum(-1)), rhs))));
    }
    for (int n = 0; n < 20; ++n) {
        double a = uniform(0, 2 * kPi);
        auto kc = mat_cast<cplx>(rotation_z(a));
        auto ki = mat_cast<cplx>(rotation_z(-a));
        for (int j = -2; j <= 2; ++j) {
            auto lhs = cmul(cmul(kc, x_matrix(j)), ki);
            auto rhs = x_matrix(j);
            for (auto& r : rhs)
                for (auto& e : r) e *= std::exp(-kI * double(j) * a);
            CHECK(mdiff(lhs, rhs) < 1e-13);
        }
    }
}

TEST_CASE("Killing orthonormality, exact") {
    auto inner = [](const Mat3<ComplexSurd>& a, const Mat3<ComplexSurd>& b) {
        ComplexSurd s;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j].conj();
        return s;
    };
    const ComplexSurd four(SurdSum(4));
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            auto v = inner(x_matrix_exact(a), x_matrix_exact(b));
            CHECK(v == (a == b ? four : ComplexSurd()));
        }
        for (int b = -1; b <= 1; ++b) CHECK(inner(x_matrix_exact(a), k_matrix_exact(b)).is_zero());
    }
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) CHECK(inner(k_matrix_exact(a), k_matrix_exact(b)) == (a == b ? four : ComplexSurd()));
}

TEST_CASE("commutation relations, exact") {
    const ComplexSurd two_sqrt5 = cs(SurdScalar(Rational(2), Rational(5)));
    const ComplexSurd sqrt12 = cs(SurdScalar(Rational(2), Rational(3)));
    const ComplexSurd two_i = ComplexSurd(SurdSum(), SurdSum(2));
    auto ip = [](int n) { return ComplexSurd::i_pow(((n % 4) + 4) % 4); };
    for (int j = -2; j <= 2; ++j)
        for (int k = -2; k <= 2; ++k) {
            auto lhs = commutator(x_matrix_exact(j), x_matrix_exact(k));
            Mat3<ComplexSurd> rhs = scale(ComplexSurd(), x_matrix_exact(0));
            if (std::abs(j + k) <= 1)
                rhs = scale(two_sqrt5 * ip(1 - j - k) * cs(cg(2, 2, -1, j, k)), k_matrix_exact(j + k));
            CHECK(is_zero(add(lhs, scale(ComplexSurd(SurdSum(-1)), rhs))));
        }
    for (int j = -2; j <= 2; ++j)
        for (int k = -1; k <= 1; ++k) {
            auto lhs = commutator(x_matrix_exact(j), k_matrix_exact(k));
            Mat3<ComplexSurd> rhs = scale(ComplexSurd(), x_matrix_exact(0));
            if (std::abs(j + k) <= 2) rhs = scale(sqrt12 * ip(1 + k) * cs(cg(2, 1, 0, j, k)), x_matrix_exact(j + k));
            CHECK(is_zero(add(lhs, scale(ComplexSurd(SurdSum(-1)), rhs))));
        }
    for (int j = -1; j <= 1; ++j)
        for (int k = -1; k <= 1; ++k) {
            auto lhs = commutator(k_matrix_exact(j), k_matrix_exact(k));
            Mat3<ComplexSurd> rhs = scale(ComplexSurd(), x_matrix_exact(0));
            if (std::abs(j + k) <= 1) rhs = scale(two_i * cs(cg(1, 1, 0, j, k)), k_matrix_exact(j + k));
            CHECK(is_zero(add(lhs, scale(ComplexSurd(SurdSum(-1)), rhs))));
        }
}

TEST_CASE("operator commutators match matrix commutators") {
    std::vector<Mat3<cplx>> basis;
    for (int j = -2; j <= 2; ++j) basis.push_back(x_matrix(j));
    for (int j = -1; j <= 1; ++j) basis.push_back(k_matrix(j));
    for (int n = 0; n < 3; ++n) {
        SpectralParameter mu = random_mu(1.0);
        auto f = test_function(mu, uniform(-1, 1), uniform(-1, 1), n + 1, n, -n);
        IwasawaPoint p = random_point();
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = a + 1; b < basis.size(); ++b) {
                cplx lhs = lie_derivative(f, p, {basis[a], basis[b]}) - lie_derivative(f, p, {basis[b], basis[a]});
                Mat3<cplx> c = cmul(basis[a], basis[b]);
                Mat3<cplx> c2 = cmul(basis[b], basis[a]);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) c[i][j] -= c2[i][j];
                cplx rhs = lie_derivative(f, p, {c});
                CHECK(std::abs(lhs - rhs) < 1e-7 * (1 + std::abs(rhs)));
            }
    }
}

TEST_CASE("E_ij expansion in the X, K basis, exact") {
    // 4 E_ij = sum conj[X_k]_ij X_k + sum conj[K_k]_ij K_k  modulo the identity
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Mat3<ComplexSurd> s = scale(ComplexSurd(), x_matrix_exact(0));
            for (int k = -2; k <= 2; ++k) s = add(s, scale(x_matrix_exact(k)[i - 1][j - 1].conj(), x_matrix_exact(k)));
            for (int k = -1; k <= 1; ++k) s = add(s, scale(k_matrix_exact(k)[i - 1][j - 1].conj(), k_matrix_exact(k)));
            auto diff = add(scale(ComplexSurd(SurdSum(4)), e_matrix_exact(i, j)), scale(ComplexSurd(SurdSum(-1)), s));
            // remaining piece is a multiple of the identity
            ComplexSurd c = diff[0][0];
            Mat3<ComplexSurd> id = scale(ComplexSurd(), x_matrix_exact(0));
            for (int a = 0; a < 3; ++a) id[a][a] = c;
            CHECK(is_zero(add(diff, scale(ComplexSurd(SurdSum(-1)), id))));
        }
    // the K_{-k} labelling of the K coefficients holds up to the symmetry conj[K_k] = (-1)^k K_{-k}
    for (int k = -1; k <= 1; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                ComplexSurd sgn(SurdSum(k % 2 == 0 ? 1 : -1));
                CHECK(k_matrix_exact(k)[i][j].conj() == sgn * k_matrix_exact(-k)[i][j]);
                CHECK(x_matrix_exact(k)[i][j].conj() == sgn * x_matrix_exact(-k)[i][j]);
            }
}

TEST_CASE("conversion to the Iwasawa basis, exact") {
    auto N1 = iwasawa_basis_exact("N1"), N2 = iwasawa_basis_exact("N2"), N3 = iwasawa_basis_exact("N3");
    auto A1 = iwasawa_basis_exact("A1"), A2 = iwasawa_basis_exact("A2");
    auto sc = [](long long re, long long im, const Mat3<ComplexSurd>& m) {
        return scale(ComplexSurd(SurdSum(re), SurdSum(im)), m);
    };
    auto minus = [](const Mat3<ComplexSurd>& a, const Mat3<ComplexSurd>& b) {
        return add(a, scale(ComplexSurd(SurdSum(-1)), b));
    };
    const ComplexSurd inv_sqrt2_i(SurdSum(), SurdSum(SurdScalar(Rational(1, 2), Rational(2))));
    for (int s : {1, -1}) {
        // X_{+-2} = +-2i N2 - A1 + 2 A2 -+ (i/sqrt2) K0
        auto rhs = add(add(sc(0, 2 * s, N2), sc(-1, 0, A1)), sc(2, 0, A2));
        rhs = add(rhs, scale(ComplexSurd(SurdSum(-s)) * inv_sqrt2_i, k_matrix_exact(0)));
        CHECK(is_zero(minus(x_matrix_exact(2 * s), rhs)));
        // X_{+-1} = -2i N1 -+ 2 N3 - K_{+-1}
        auto r1 = add(add(sc(0, -2, N1), sc(-2 * s, 0, N3)), sc(-1, 0, k_matrix_exact(s)));
        CHECK(is_zero(minus(x_matrix_exact(s), r1)));
    }
    const ComplexSurd sqrt6(SurdSum(SurdScalar(Rational(1), Rational(6))));
    CHECK(is_zero(minus(x_matrix_exact(0), scale(-sqrt6, A1))));
    // trace-free combinations of E_ii reproduce A1, A2
    auto E = [](int i) { return e_matrix_exact(i, i); };
    const ComplexSurd third(SurdSum(SurdScalar(Rational(1, 3))));
    CHECK(is_zero(minus(A1, scale(third, add(add(E(1), E(2)), sc(-2, 0, E(3)))))));
    CHECK(is_zero(minus(A2, scale(third, add(sc(2, 0, E(1)), sc(-1, 0, add(E(2), E(3))))))));
}

TEST_CASE("Casimir eigenvalues") {
    SpectralParameter zero{0.0, 0.0, 0.0};
    CHECK(std::abs(lambda1(zero) - 1.0) < 1e-15);
    CHECK(std::abs(lambda2(zero)) < 1e-15);
    for (int n = 0; n < 8; ++n) {
        SpectralParameter mu = random_mu(1.0);
        int d = n % 4;
        int mp = std::clamp(int(std::floor(uniform(-d, d + 1))), -d, d);
        int m = std::clamp(int(std::floor(uniform(-d, d + 1))), -d, d);
        auto f = test_function(mu, 0, 0, d, mp, m);
        IwasawaPoint p = random_point();
        cplx F = evaluate(f, p);
        if (std::abs(F) < 1e-3) continue;
        cplx c1 = casimir(1, f, p), c2 = casimir(2, f, p);
        CHECK(std::abs(c1 - lambda1(mu) * F) < 1e-8 * (1 + std::abs(F)));
        CHECK(std::abs(c2 - lambda2(mu) * F) < 1e-6 * (1 + std::abs(F)));
    }
}

TEST_CASE("Casimir definition against coordinate form") {
    for (int n = 0; n < 5; ++n) {
        SpectralParameter mu = random_mu(1.0);
        auto f = test_function(mu, uniform(-1, 1), uniform(-1, 1), 2, 1, 0);
        IwasawaPoint p = random_point();
        CHECK(std::abs(casimir_definition_check(1, f, p)) < 1e-6);
        CHECK(std::abs(casimir_definition_check(2, f, p)) < 1e-6);
    }
}

TEST_CASE("Casimir operators are left invariant") {
    for (int n = 0; n < 3; ++n) {
        SpectralParameter mu = random_mu(1.0);
        auto f = test_function(mu, uniform(-1, 1), uniform(-1, 1), 1, 0, 1);
        Mat3<double> g0{};
        for (auto& r : g0)
            for (auto& e : r) e = uniform(-1, 1);
        for (int i = 0; i < 3; ++i) g0[i][i] += 2.0;
        auto h = left_translate(f, g0);
        IwasawaPoint p = random_point();
        auto gp = matmul(g0, assemble(to_coords(p)));
        for (int which : {1, 2}) {
            // translate the Casimir eigen-relation: (Delta h)(p) = (Delta f)(g0 p)
            cplx lhs = casimir_definition(which, h, p);
            cplx rhs = casimir_definition(which, f, gp);
            CHECK(std::abs(lhs - rhs) < 1e-6 * (1 + std::abs(rhs)));
        }
    }
}

TEST_CASE("Lambda_x eigenvalue forms") {
    for (int d = 1; d <= 6; ++d) {
        double t = uniform(-2, 2);
        SpectralParameter mu{(d - 1) / 2.0 + kI * t, -(d - 1) / 2.0 + kI * t, -2.0 * kI * t};
        CHECK(std::abs(lambda_x_eigenvalue(mu, (d - 1) / 2.0)) < 1e-10);
    }
    SpectralParameter mu{kI, 0.0, -kI};
    CHECK(std::abs(lambda_x_eigenvalue(mu, 0.5) - 20.0) < 1e-12);
    CHECK(std::abs(lambda_x_unitary_form(1, 0, 0.5) - 20.0) < 1e-12);
    CHECK(std::abs(lambda_x_eigenvalue({0.0, 0.0, 0.0}, 0.0)) < 1e-15);
    for (int n = 0; n < 50; ++n) {
        double t1 = uniform(-3, 3), t2 = uniform(-3, 3), x = uniform(0, 4);
        SpectralParameter u{kI * t1, kI * t2, -kI * (t1 + t2)};
        double ref = lambda_x_unitary_form(t1, t2, x);
        CHECK(std::abs(lambda_x_eigenvalue(u, x) - ref) < 1e-10 * (1 + std::abs(ref)));
        double a = uniform(-2, 2), t = uniform(-2, 2);
        SpectralParameter s{a + kI * t, -a + kI * t, -2.0 * kI * t};
        double ref2 = lambda_x_shifted_form(a, t, x);
        CHECK(std::abs(lambda_x_eigenvalue(s, x) - ref2) < 1e-10 * (1 + std::abs(ref2)));
    }
}
