#include "doctest.h"
#include "gl3/clebsch_gordan.hpp"
#include "gl3/coefficient_flow.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace gl3;
using gl3::testing::random_complex;
using gl3::testing::random_mu;
using gl3::testing::uniform;

namespace {

double vdiff(const CVec& a, const CVec& b) {
    REQUIRE(a.d() == b.d());
    double e = 0;
    for (int m = -a.d(); m <= a.d(); ++m) e = std::max(e, std::abs(a(m) - b(m)));
    return e;
}

double vnorm(const CVec& a) {
    double e = 0;
    for (auto& x : a.data()) e = std::max(e, std::abs(x));
    return e;
}

CVec random_vec(int d) {
    CVec v(d);
    for (auto& x : v.data()) x = random_complex(1.0);
    return v;
}

SurdSum sq(long long p) { return p == 0 ? SurdSum(0) : SurdSum(SurdScalar(Rational(1), Rational(p))); }

// explicit display coefficients times their normalization, as c0 + c12 (mu1-mu2) + c3 mu3
struct Display {
    SurdSum norm;
    LinearInMu coef[3];  // shifts -2, 0, +2
};

Display explicit_display(int a, long long d, long long j) {
    Display r;
    auto side = [](SurdSum s, long long jj, int sign) {
        LinearInMu l;
        l.c12 = s;
        l.c0 = s * SurdSum(1 + sign * jj);
        return l;
    };
    switch (a) {
        case 0:
            r.norm = SurdSum(2) * sq(d * (d + 1) * (2 * d - 1) * (2 * d + 3));
            r.coef[0] = side(sq(6 * (d + 2 - j) * (d + 1 - j) * (d + j) * (d - 1 + j)), j, -1);
            r.coef[1].c3 = SurdSum(-2 * (d * (d + 1) - 3 * j * j)) * sq(6);
            r.coef[2] = side(sq(6 * (d + 2 + j) * (d + 1 + j) * (d - j) * (d - 1 - j)), j, 1);
            break;
        case 1:
            r.norm = sq(2 * d * (d + 1) * (d + 2) * (2 * d + 1));
            r.coef[0] = side(SurdSum(-1) * sq((d + 1 - j) * (d + 2 - j) * (d + 3 - j) * (d + j)), j, -1);
            r.coef[1].c3 = SurdSum(-6 * j) * sq((d + 1 - j) * (d + 1 + j));
            r.coef[1].c0 = SurdSum(2 * j * (d + 1)) * sq((d + 1 - j) * (d + 1 + j));
            r.coef[2] = side(sq((d - j) * (d + 1 + j) * (d + 2 + j) * (d + 3 + j)), j, 1);
            break;
        case -1:
            r.norm = sq(2 * d * (d - 1) * (d + 1) * (2 * d + 1));
            r.coef[0] = side(SurdSum(-1) * sq((d + 1 - j) * (d - 2 + j) * (d - 1 + j) * (d + j)), j, -1);
            r.coef[1].c3 = SurdSum(6 * j) * sq((d - j) * (d + j));
            r.coef[1].c0 = SurdSum(2 * j * d) * sq((d - j) * (d + j));
            r.coef[2] = side(sq((d - 2 - j) * (d - 1 - j) * (d - j) * (d + 1 + j)), j, 1);
            break;
        case 2:
            r.norm = SurdSum(2) * sq((d + 1) * (d + 2) * (2 * d + 1) * (2 * d + 3));
            r.coef[0] = side(sq((d + 1 - j) * (d + 2 - j) * (d + 3 - j) * (d + 4 - j)), j, -1);
            r.coef[1].c3 = SurdSum(6) * sq((d + 1 - j) * (d + 2 - j) * (d + 1 + j) * (d + 2 + j));
            r.coef[1].c0 = SurdSum(-2 * (2 * d + 3)) * sq((d + 1 - j) * (d + 2 - j) * (d + 1 + j) * (d + 2 + j));
            r.coef[2] = side(sq((d + 1 + j) * (d + 2 + j) * (d + 3 + j) * (d + 4 + j)), j, 1);
            break;
        case -2:
            r.norm = SurdSum(2) * sq(d * (d - 1) * (2 * d - 1) * (2 * d + 1));
            r.coef[0] = side(sq((d - 3 + j) * (d - 2 + j) * (d - 1 + j) * (d + j)), j, -1);
            r.coef[1].c3 = SurdSum(6) * sq((d - 1 - j) * (d - j) * (d - 1 + j) * (d + j));
            r.coef[1].c0 = SurdSum(2 * (2 * d - 1)) * sq((d - 1 - j) * (d - j) * (d - 1 + j) * (d + j));
            r.coef[2] = side(sq((d - 3 - j) * (d - 2 - j) * (d - 1 - j) * (d - j)), j, 1);
            break;
    }
    return r;
}

LinearInMu times(const SurdSum& s, const LinearInMu& l) { return {s * l.c0, s * l.c12, s * l.c3}; }

SpectralParameter kappa_mu(int kappa, double t) {
    // mu1 - mu2 + 1 = kappa
    double x = (kappa - 1) / 2.0;
    return {x + kI * t, -x + kI * t, -2.0 * kI * t};
}

SpectralParameter unitary_mu(double t1, double t2) { return {kI * t1, kI * t2, -kI * (t1 + t2)}; }

}  // namespace

TEST_CASE("Y action reproduces the five explicit displays exactly") {
    int compared = 0;
    for (int a = -2; a <= 2; ++a)
        for (int d = 0; d <= 6; ++d) {
            if (d + a < 0) continue;
            for (int j = -d; j <= d; ++j) {
                Display disp = explicit_display(a, d, j);
                for (int s = 0; s < 3; ++s) {
                    int shift = 2 * (s - 1);
                    int target = j + shift;
                    if (std::abs(target) > d + a) continue;
                    LinearInMu lhs = times(disp.norm, y_coefficient_exact(a, d, j, shift));
                    CHECK_MESSAGE(lhs == disp.coef[s], "a=" << a << " d=" << d << " j=" << j << " shift=" << shift);
                    ++compared;
                }
            }
        }
    CHECK(compared > 300);
}

TEST_CASE("Y action basic values") {
    SpectralParameter mu = random_mu();
    for (int eps : {1, -1}) CHECK(vnorm(y_action(0, mu, bu(0, 0, eps))) < 1e-15);
    // d = 1: Y^0 bu^{1,-}_0 = -2 sqrt(3/5) mu3 bu^{1,-}_0
    CVec u = bu(1, 0, -1);
    CVec expect = u;
    for (auto& x : expect.data()) x *= -2.0 * std::sqrt(3.0 / 5.0) * mu.mu3;
    CHECK(vdiff(y_action(0, mu, u), expect) < 1e-13);
    CHECK_THROWS_AS(y_action(-2, mu, CVec(1)), std::invalid_argument);
    CHECK(y_action(2, mu, CVec(1)).d() == 3);
    CHECK(vnorm(y_action(1, mu, CVec(3))) == 0.0);
}

TEST_CASE("Y action matches the Lie-algebra path pointwise") {
    struct Case { int a, d; };
    for (Case c : {Case{0, 1}, Case{2, 0}, Case{1, 1}, Case{-1, 2}, Case{-2, 2}, Case{0, 2}, Case{2, 1}}) {
        for (int n = 0; n < 3; ++n) {
            SpectralParameter mu = random_mu(1.0);
            IwasawaPoint p;
            p.x1 = uniform(-1, 1);
            p.x2 = uniform(-1, 1);
            p.x3 = uniform(-1, 1);
            p.y1 = uniform(0.5, 2);
            p.y2 = uniform(0.5, 2);
            CVec f = random_vec(c.d);
            double r = y_action_pointwise_check(c.a, mu, f, p);
            CHECK_MESSAGE(r < 1e-6, "a=" << c.a << " d=" << c.d << " residual " << r);
        }
    }
    IwasawaPoint p;
    CHECK(y_action_pointwise_check(0, random_mu(), CVec(2), p) < 1e-12);
}

TEST_CASE("adjoint of Y") {
    SpectralParameter mu = random_mu();
    for (int d = 0; d <= 4; ++d) {
        CVec f = random_vec(d);
        CVec a0 = adjoint_y(0, d, mu, f), y0 = y_action(0, mu, f);
        for (auto& x : y0.data()) x = -x;
        CHECK(vdiff(a0, y0) < 1e-12);
    }
    CVec g = random_vec(1);
    CVec a1 = adjoint_y(1, 0, mu, g), ym = y_action(-1, mu, g);
    for (auto& x : ym.data()) x *= std::sqrt(3.0);
    CHECK(a1.d() == 0);
    CHECK(vdiff(a1, ym) < 1e-12);
    CHECK(vnorm(adjoint_y(2, 1, mu, CVec(3))) == 0.0);
}

TEST_CASE("Y^0 is skew-Hermitian for unitary mu") {
    for (int n = 0; n < 10; ++n) {
        SpectralParameter mu = unitary_mu(uniform(-3, 3), uniform(-3, 3));
        int d = 1 + n % 5;
        Eigen::MatrixXcd Y0 = y_matrix(0, d, mu);
        CHECK((Y0 + Y0.adjoint()).norm() < 1e-9 * (1 + Y0.norm()));
    }
}

TEST_CASE("raising operators") {
    for (int n = 0; n < 20; ++n) {
        SpectralParameter mu = random_mu(5.0);
        int d = 1 + n % 6;
        int j = int(uniform(0, d + 1));
        j = std::min(j, d);
        int eps = n % 2 ? 1 : -1;
        for (int variant : {1, 2}) {
            CVec lhs = raising_R(variant, d, mu, j, eps);
            CVec rhs = raising_R_closed(variant, d, mu, j, eps);
            CHECK(vdiff(lhs, rhs) < 1e-9 * (1 + vnorm(rhs)));
        }
    }
    // variant 1 at j = 1
    for (int d = 1; d <= 6; ++d) {
        SpectralParameter mu = random_mu(3.0);
        for (int eps : {1, -1}) {
            CVec lhs = raising_R(1, d, mu, 1, eps);
            CVec u = bu(d + 1, 1, eps);
            bool collapses = eps * ((d % 2 == 0) ? 1 : -1) == 1;  // bu_{-1} = bu_1
            if (!collapses) continue;
            cplx c = 16.0 * std::sqrt(3.0 * d * (d + 2)) * (mu.mu1 - mu.mu3 + double(d)) * (mu.mu2 - mu.mu3 - 1.0);
            for (auto& x : u.data()) x *= c;
            CHECK(vdiff(lhs, u) < 1e-9 * (1 + vnorm(u)));
        }
    }
    // variant 2 at j = 0 only the bu_0 term survives
    for (int d = 0; d <= 5; ++d) {
        SpectralParameter mu = random_mu(3.0);
        int eps = (d % 2 == 0) ? 1 : -1;
        CVec r = raising_R(2, d, mu, 0, eps);
        CVec u0 = bu(d + 2, 0, eps);
        double nn = 0;
        cplx dot = 0.0;
        for (int m = -(d + 2); m <= d + 2; ++m) {
            dot += r(m) * u0(m);
            nn += std::norm(u0(m));
        }
        for (int m = -(d + 2); m <= d + 2; ++m) r(m) -= dot / nn * u0(m);
        CHECK(vnorm(r) < 1e-9 * (1 + std::abs(dot)));
    }
}

TEST_CASE("adjoints of the raising operators") {
    for (int n = 0; n < 20; ++n) {
        SpectralParameter mu = random_mu(3.0);
        int d = 2 + n % 5;
        int j = std::min(d, int(uniform(0, d + 1)));
        int eps = n % 2 ? 1 : -1;
        for (int variant : {1, 2}) {
            CVec lhs = raising_R_adjoint(variant, d, mu, j, eps);
            CVec rhs = raising_R_adjoint_closed(variant, d, mu, j, eps);
            CHECK_MESSAGE(vdiff(lhs, rhs) < 1e-9 * (1 + vnorm(rhs)), "variant " << variant << " d=" << d << " j=" << j);
        }
    }
}

TEST_CASE("Gram recursion from the minimal vector") {
    // kappa = delta = 0, eps = +1: base value 1
    {
        auto rep = gram_recursion_check(8, unitary_mu(1.3, -0.4), {0, 1}, 0);
        CHECK(rep.d0 == 0);
        CHECK(std::abs(rep.gram[0](0, 0) - 1.0) < 1e-15);
        CHECK(rep.determined);
        CHECK(rep.residual < 1e-9);
        CHECK(rep.max_error < 1e-10);
    }
    // d0 = 1 chains: diagonal 1/2, off-diagonal 0
    for (Parity chi : {Parity{1, 1}, Parity{1, -1}, Parity{0, -1}}) {
        auto rep = gram_recursion_check(8, unitary_mu(0.7, 0.2), chi, 0);
        CHECK(rep.d0 == 1);
        CHECK(rep.determined);
        CHECK(rep.residual < 1e-9);
        CHECK(rep.max_error < 1e-10);
        if (chi.delta == 1)
            for (auto& G : rep.gram)
                for (int i = 0; i < G.rows(); ++i)
                    for (int k = 0; k < G.cols(); ++k) CHECK(std::abs(G(i, k) - (i == k ? 0.5 : 0.0)) < 1e-10);
    }
    // kappa > 1 on the shifted family
    for (int kappa : {2, 3, 4}) {
        auto rep = gram_recursion_check(kappa + 6, kappa_mu(kappa, 0.37), {kappa % 2, 1}, kappa);
        CHECK(rep.d0 == kappa);
        CHECK(rep.determined);
        CHECK(rep.residual < 1e-9);
        CHECK(rep.max_error < 1e-10);
    }
}

TEST_CASE("span generated from the minimal vector") {
    auto r0 = generate_minimal_span(0, {0, 1}, 0, unitary_mu(1.1, 0.3), 4);
    CHECK(r0.rank == 3);
    CHECK(r0.expected == 3);
    CHECK(r0.leak < 1e-9);
    auto r1 = generate_minimal_span(0, {0, 1}, 0, unitary_mu(1.1, 0.3), 0);
    CHECK(r1.rank == 1);
    auto r3 = generate_minimal_span(3, {1, 1}, 3, kappa_mu(3, 0.4), 5);
    CHECK(r3.rank == 2);
    CHECK(r3.leak < 1e-9);

    int pairs = 0;
    for (int d0 = 0; d0 <= 4; ++d0)
        for (int d = d0; d <= d0 + 4 && pairs < 25; ++d) {
            Parity chi{0, 1};
            int kappa = 0;
            SpectralParameter mu = unitary_mu(0.9, -0.35);
            if (d0 == 1) chi = {1, 1};
            if (d0 >= 2) {
                kappa = d0;
                chi = {d0 % 2, 1};
                mu = kappa_mu(kappa, 0.21);
            }
            auto rep = generate_minimal_span(d0, chi, kappa, mu, d);
            CHECK_MESSAGE(rep.rank == multiplicity(d0, d), "d0=" << d0 << " d=" << d);
            CHECK(rep.rank == rep.expected);
            CHECK(rep.leak < 1e-8);
            ++pairs;
        }
    CHECK(pairs >= 20);
}

TEST_CASE("duality") {
    CHECK(duality_check(0, random_mu(), CVec(3)) == 0.0);
    for (int n = 0; n < 5; ++n) {
        SpectralParameter mu = random_mu(2.0);
        CHECK(duality_check(0, mu, random_vec(2)) < 1e-10);
        CHECK(duality_check(-1, mu, random_vec(3)) < 1e-10);
        CHECK(duality_check(2, mu, random_vec(1)) < 1e-10);
        CHECK(duality_check(1, mu, random_vec(4)) < 1e-10);
    }
}

TEST_CASE("multiplicities") {
    CHECK(multiplicity(0, 4) == 3);
    CHECK(multiplicity(1, 1) == 1);
    CHECK(multiplicity(3, 2) == 0);
    const int expect0[] = {1, 0, 2, 1, 3, 2, 4};
    for (int d = 0; d <= 6; ++d) CHECK(multiplicity(0, d) == expect0[d]);
    CHECK_THROWS_AS(multiplicity(0, -1), std::invalid_argument);
}
