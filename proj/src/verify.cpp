#include "gl3/verify.hpp"

#include "gl3/clebsch_gordan.hpp"
#include "gl3/coefficient_flow.hpp"
#include "gl3/gamma.hpp"
#include "gl3/lie.hpp"
#include "gl3/minimal.hpp"
#include "gl3/whittaker.hpp"
#include "gl3/wigner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gl3 {

bool SuiteReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(g_); }
    cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }
    SpectralParameter mu(double r) { return SpectralParameter::from_two(complex(r), complex(r)); }
    RotationMatrix rotation() { return euler_rotation(uniform(-kPi, kPi), uniform(0, kPi), uniform(-kPi, kPi)); }

private:
    std::mt19937_64 g_;
};

class Check {
public:
    Check(std::string name, double tol) {
        r_.name = std::move(name);
        r_.tolerance = tol;
    }
    void add(double err, const std::string& where = {}) {
        ++r_.count;
        if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
        r_.value = std::max(r_.value, err);
        if (err > r_.tolerance && r_.detail.empty()) note(where, err);
    }
    // exact identities: value counts the mismatches
    void expect(bool ok, const std::string& where = {}) {
        ++r_.count;
        if (ok) return;
        r_.value += 1.0;
        if (r_.detail.empty()) r_.detail = where.empty() ? "mismatch" : where;
    }
    void fail(const std::string& what) {
        r_.value = std::numeric_limits<double>::infinity();
        if (r_.detail.empty()) r_.detail = what;
    }
    CheckResult done() {
        r_.passed = r_.count > 0 && r_.value <= r_.tolerance;
        if (r_.count == 0 && r_.detail.empty()) r_.detail = "nothing checked";
        return r_;
    }

private:
    void note(const std::string& where, double err) {
        std::ostringstream s;
        s << (where.empty() ? "error" : where) << ": " << err;
        r_.detail = s.str();
    }
    CheckResult r_;
};

CheckResult run_check(const std::string& name, double tol, const std::function<void(Check&)>& body) {
    Check c(name, tol);
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    return c.done();
}

std::string at(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream s;
    bool first = true;
    for (auto& [k, v] : kv) {
        s << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return s.str();
}

double vdiff(const CVec& a, const CVec& b) {
    if (a.d() != b.d()) return std::numeric_limits<double>::infinity();
    double e = 0;
    for (size_t i = 0; i < a.data().size(); ++i) e = std::max(e, std::abs(a.data()[i] - b.data()[i]));
    return e;
}

double vmax(const CVec& a) {
    double e = 0;
    for (auto& x : a.data()) e = std::max(e, std::abs(x));
    return e;
}

template <class M>
double mdiff(const M& a, const M& b) {
    double e = 0;
    for (size_t i = 0; i < a.data().size(); ++i) e = std::max(e, std::abs(a.data()[i] - b.data()[i]));
    return e;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CVec random_vec(Rng& r, int d) {
    CVec v(d);
    for (auto& x : v.data()) x = r.complex(1.0);
    return v;
}

SpectralParameter unitary_mu(double t1, double t2) { return {kI * t1, kI * t2, -kI * (t1 + t2)}; }

// mu1 - mu2 + 1 = kappa
SpectralParameter kappa_mu(int kappa, double t) {
    const double x = (kappa - 1) / 2.0;
    return {x + kI * t, -x + kI * t, -2.0 * kI * t};
}

// ---------------------------------------------------------------- cg

using MatS = Mat3<ComplexSurd>;

MatS scale(const ComplexSurd& c, const MatS& a) {
    MatS r = a;
    for (auto& row : r)
        for (auto& e : row) e = c * e;
    return r;
}

MatS add(const MatS& a, const MatS& b) {
    MatS r = a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

MatS sub(const MatS& a, const MatS& b) { return add(a, scale(ComplexSurd(SurdSum(-1)), b)); }

MatS commutator(const MatS& a, const MatS& b) { return sub(matmul(a, b), matmul(b, a)); }

bool is_zero(const MatS& m) {
    for (auto& r : m)
        for (auto& e : r)
            if (!e.is_zero()) return false;
    return true;
}

ComplexSurd cs(const SurdScalar& s) { return ComplexSurd(SurdSum(s)); }
ComplexSurd ipow(int n) { return ComplexSurd::i_pow(((n % 4) + 4) % 4); }

SurdScalar q(long long p, long long den, long long r) { return SurdScalar(Rational(p, den), Rational(r)); }

std::vector<CheckResult> suite_cg(Rng&) {
    std::vector<CheckResult> out;
    out.push_back(run_check("CG sign-flip symmetry, d <= 6, k <= 2", 0.0, [](Check& c) {
        for (int d = 0; d <= 6; ++d)
            for (int k = 1; k <= 2; ++k)
                for (int a = -k; a <= k; ++a)
                    for (int m = -d; m <= d; ++m)
                        for (int i = -k; i <= k; ++i) {
                            const SurdScalar v = cg(d, k, a, m, i);
                            c.expect(cg(d, k, a, -m, -i) == ((k - a) % 2 == 0 ? v : -v),
                                     at({{"d", d}, {"k", k}, {"a", a}, {"m", m}, {"i", i}}));
                        }
    }));
    out.push_back(run_check("printed coefficient matrices C^{2,2,-1}, C^{2,1,0}, C^{1,1,0}", 0.0, [](Check& c) {
        const SurdScalar C221[5][5] = {{0, 0, 0, q(2, 10, 5), q(2, 10, 10)},
                                       {0, 0, q(-1, 10, 30), q(-1, 10, 10), q(2, 10, 5)},
                                       {0, q(1, 10, 30), 0, q(-1, 10, 30), 0},
                                       {q(-2, 10, 5), q(1, 10, 10), q(1, 10, 30), 0, 0},
                                       {q(-2, 10, 10), q(-2, 10, 5), 0, 0, 0}};
        const SurdScalar C210[5][3] = {{0, q(2, 6, 6), q(2, 6, 3)},
                                       {q(-2, 6, 3), q(1, 6, 6), q(3, 6, 2)},
                                       {q(-3, 6, 2), 0, q(3, 6, 2)},
                                       {q(-3, 6, 2), q(-1, 6, 6), q(2, 6, 3)},
                                       {q(-2, 6, 3), q(-2, 6, 6), 0}};
        const SurdScalar C110[3][3] = {
            {0, q(1, 2, 2), q(1, 2, 2)}, {q(-1, 2, 2), 0, q(1, 2, 2)}, {q(-1, 2, 2), q(-1, 2, 2), 0}};
        const auto t = cg_matrix(2, 2, -1), u = cg_matrix(2, 1, 0), v = cg_matrix(1, 1, 0);
        for (int m = -2; m <= 2; ++m)
            for (int i = -2; i <= 2; ++i) c.expect(t(m, i) == C221[m + 2][i + 2], at({{"C221 m", m}, {"i", i}}));
        for (int m = -2; m <= 2; ++m)
            for (int i = -1; i <= 1; ++i) c.expect(u(m, i) == C210[m + 2][i + 1], at({{"C210 m", m}, {"i", i}}));
        for (int m = -1; m <= 1; ++m)
            for (int i = -1; i <= 1; ++i) c.expect(v(m, i) == C110[m + 1][i + 1], at({{"C110 m", m}, {"i", i}}));
    }));
    out.push_back(run_check("commutators [X,X], [X,K], [K,K] as exact matrices", 0.0, [](Check& c) {
        const ComplexSurd two_sqrt5 = cs(SurdScalar(Rational(2), Rational(5)));
        const ComplexSurd sqrt12 = cs(SurdScalar(Rational(2), Rational(3)));
        const ComplexSurd two_i(SurdSum(), SurdSum(2));
        const MatS zero = scale(ComplexSurd(), x_matrix_exact(0));
        for (int j = -2; j <= 2; ++j)
            for (int k = -2; k <= 2; ++k) {
                MatS rhs = zero;
                if (std::abs(j + k) <= 1) rhs = scale(two_sqrt5 * ipow(1 - j - k) * cs(cg(2, 2, -1, j, k)), k_matrix_exact(j + k));
                c.expect(is_zero(sub(commutator(x_matrix_exact(j), x_matrix_exact(k)), rhs)), at({{"[X_j,X_k] j", j}, {"k", k}}));
            }
        for (int j = -2; j <= 2; ++j)
            for (int k = -1; k <= 1; ++k) {
                MatS rhs = zero;
                if (std::abs(j + k) <= 2) rhs = scale(sqrt12 * ipow(1 + k) * cs(cg(2, 1, 0, j, k)), x_matrix_exact(j + k));
                c.expect(is_zero(sub(commutator(x_matrix_exact(j), k_matrix_exact(k)), rhs)), at({{"[X_j,K_k] j", j}, {"k", k}}));
            }
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k) {
                MatS rhs = zero;
                if (std::abs(j + k) <= 1) rhs = scale(two_i * cs(cg(1, 1, 0, j, k)), k_matrix_exact(j + k));
                c.expect(is_zero(sub(commutator(k_matrix_exact(j), k_matrix_exact(k)), rhs)), at({{"[K_j,K_k] j", j}, {"k", k}}));
            }
    }));
    out.push_back(run_check("Killing orthonormality of X_j, K_j", 0.0, [](Check& c) {
        auto inner = [](const MatS& a, const MatS& b) {
            ComplexSurd s;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j].conj();
            return s;
        };
        const ComplexSurd four(SurdSum(4));
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b)
                c.expect(inner(x_matrix_exact(a), x_matrix_exact(b)) == (a == b ? four : ComplexSurd()), at({{"X a", a}, {"b", b}}));
            for (int b = -1; b <= 1; ++b) c.expect(inner(x_matrix_exact(a), k_matrix_exact(b)).is_zero(), at({{"XK a", a}, {"b", b}}));
        }
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                c.expect(inner(k_matrix_exact(a), k_matrix_exact(b)) == (a == b ? four : ComplexSurd()), at({{"K a", a}, {"b", b}}));
    }));
    return out;
}

// ---------------------------------------------------------------- dmatrix

std::vector<CheckResult> suite_dmatrix(Rng& rng) {
    std::vector<CheckResult> out;
    out.push_back(run_check("printed D^1(w3), D^2(w3)", 1e-12, [](Check& c) {
        const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
        const cplx D1[3][3] = {{-1, {0, -r2}, 1}, {{0, r2}, 0, {0, r2}}, {1, {0, -r2}, -1}};
        const cplx D2[5][5] = {{1, {0, 2}, -r6, {0, -2}, 1},
                               {{0, -2}, 2, 0, 2, {0, 2}},
                               {-r6, 0, -2, 0, -r6},
                               {{0, 2}, 2, 0, 2, {0, -2}},
                               {1, {0, -2}, -r6, {0, 2}, 1}};
        const RotationMatrix w3 = mat_cast<double>(weyl_matrix(Weyl::w3));
        const CMat W1 = wigner_D(1, w3), W2 = wigner_D(2, w3);
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j) c.add(std::abs(W1(i, j) - 0.5 * D1[i + 1][j + 1]), at({{"d", 1}, {"m'", i}, {"m", j}}));
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) c.add(std::abs(W2(i, j) - 0.25 * D2[i + 2][j + 2]), at({{"d", 2}, {"m'", i}, {"m", j}}));
    }));
    std::vector<std::array<RotationMatrix, 2>> pairs(200);
    for (auto& p : pairs) p = {rng.rotation(), rng.rotation()};
    out.push_back(run_check("multiplicativity, 200 rotations, d <= 5", 1e-10, [&](Check& c) {
        for (size_t t = 0; t < pairs.size(); ++t) {
            const auto& [a, b] = pairs[t];
            const auto Da = wigner_D_all(5, mat_cast<cplx>(a));
            const auto Db = wigner_D_all(5, mat_cast<cplx>(b));
            const auto Dab = wigner_D_all(5, mat_cast<cplx>(matmul(a, b)));
            for (int d = 0; d <= 5; ++d) c.add(mdiff(Dab[d], Da[d] * Db[d]), at({{"rotation", double(t)}, {"d", d}}));
        }
    }));
    out.push_back(run_check("unitarity, 200 rotations, d <= 5", 1e-10, [&](Check& c) {
        for (size_t t = 0; t < pairs.size(); ++t) {
            const auto Da = wigner_D_all(5, mat_cast<cplx>(pairs[t][0]));
            for (int d = 0; d <= 5; ++d) {
                CMat adj(d);
                for (int i = -d; i <= d; ++i)
                    for (int j = -d; j <= d; ++j) adj(i, j) = std::conj(Da[d](j, i));
                c.add(mdiff(Da[d] * adj, CMat::identity(d)), at({{"rotation", double(t)}, {"d", d}}));
            }
        }
    }));
    out.push_back(run_check("product rule D^k D^d = sum C C D^{d+a}, d <= 4", 1e-10, [&](Check& c) {
        for (int t = 0; t < 10; ++t) {
            const auto D = wigner_D_all(6, mat_cast<cplx>(rng.rotation()));
            for (int d = 0; d <= 4; ++d)
                for (int k = 1; k <= 2; ++k)
                    for (int j = -k; j <= k; ++j)
                        for (int i = -k; i <= k; ++i)
                            for (int mp = -d; mp <= d; ++mp)
                                for (int m = -d; m <= d; ++m) {
                                    cplx rhs = 0.0;
                                    for (int a = -k; a <= k; ++a) {
                                        const int e = d + a;
                                        if (e < 0 || std::abs(mp + j) > e || std::abs(m + i) > e) continue;
                                        rhs += cg_value(d, k, a, mp, j) * cg_value(d, k, a, m, i) * D[e](mp + j, m + i);
                                    }
                                    c.add(std::abs(D[k](j, i) * D[d](mp, m) - rhs),
                                          at({{"d", d}, {"k", k}, {"j", j}, {"i", i}, {"m'", mp}, {"m", m}}));
                                }
        }
    }));
    return out;
}

// ---------------------------------------------------------------- casimir

IwasawaPoint random_point(Rng& r) {
    IwasawaPoint p;
    p.x1 = r.uniform(-1, 1);
    p.x2 = r.uniform(-1, 1);
    p.x3 = r.uniform(-1, 1);
    p.y1 = r.uniform(0.5, 2);
    p.y2 = r.uniform(0.5, 2);
    p.alpha = r.uniform(0, 2 * kPi);
    p.beta = r.uniform(0.2, kPi - 0.2);
    p.gamma = r.uniform(0, 2 * kPi);
    return p;
}

std::vector<CheckResult> suite_casimir(Rng& rng) {
    struct Sample {
        int d, mp, m;
        SpectralParameter mu;
        IwasawaPoint p;
    };
    std::vector<Sample> samples;
    for (int d = 0; d <= 3; ++d)
        for (int n = 0; n < 5; ++n)
            samples.push_back({d, rng.integer(-d, d), rng.integer(-d, d), rng.mu(1.0), random_point(rng)});
    // errors relative to max(1, |f|) at the point
    auto eigen_check = [&](int which) {
        return [&, which](Check& c) {
            for (const auto& s : samples) {
                const auto f = test_function(s.mu, 0, 0, s.d, s.mp, s.m);
                const cplx F = evaluate(f, s.p);
                const cplx lam = which == 1 ? lambda1(s.mu) : lambda2(s.mu);
                c.add(std::abs(casimir(which, f, s.p) - lam * F) / std::max(1.0, std::abs(F)),
                      at({{"d", s.d}, {"m'", s.mp}, {"m", s.m}}));
            }
        };
    };
    std::vector<CheckResult> out;
    out.push_back(run_check("Delta1 p D = lambda1 p D, d <= 3, 5 mu each", 1e-6, eigen_check(1)));
    out.push_back(run_check("Delta2 p D = lambda2 p D, d <= 3, 5 mu each", 1e-6, eigen_check(2)));
    out.push_back(run_check("E_ij definition agrees with the coordinate form", 1e-6, [&](Check& c) {
        for (const auto& s : samples) {
            const auto f = test_function(s.mu, 0, 0, s.d, s.mp, s.m);
            const double F = std::max(1.0, std::abs(evaluate(f, s.p)));
            for (int which : {1, 2})
                c.add(std::abs(casimir_definition_check(which, f, s.p)) / F, at({{"which", which}, {"d", s.d}}));
        }
    }));
    return out;
}

// ---------------------------------------------------------------- ycalc

SurdSum sq(long long p) { return p == 0 ? SurdSum(0) : SurdSum(SurdScalar(Rational(1), Rational(p))); }

// explicit display coefficients times their normalization, c0 + c12 (mu1-mu2) + c3 mu3
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

std::vector<CheckResult> suite_ycalc(Rng& rng) {
    std::vector<CheckResult> out;
    out.push_back(run_check("five explicit Y^a displays from the general CG form", 0.0, [](Check& c) {
        for (int a = -2; a <= 2; ++a)
            for (int d = 0; d <= 6; ++d) {
                if (d + a < 0) continue;
                for (int j = -d; j <= d; ++j) {
                    const Display disp = explicit_display(a, d, j);
                    for (int s = 0; s < 3; ++s) {
                        const int shift = 2 * (s - 1);
                        if (std::abs(j + shift) > d + a) continue;
                        const LinearInMu y = y_coefficient_exact(a, d, j, shift);
                        const LinearInMu lhs{disp.norm * y.c0, disp.norm * y.c12, disp.norm * y.c3};
                        c.expect(lhs == disp.coef[s], at({{"a", a}, {"d", d}, {"j", j}, {"shift", shift}}));
                    }
                }
            }
    }));
    out.push_back(run_check("Y^a against the Lie-algebra action pointwise", 1e-6, [&](Check& c) {
        const int cases[][2] = {{0, 1}, {2, 0}, {1, 1}, {-1, 2}, {-2, 2}, {0, 2}, {2, 1}, {1, 2}};
        for (auto [a, d] : cases)
            for (int n = 0; n < 3; ++n) {
                const SpectralParameter mu = rng.mu(1.0);
                IwasawaPoint p = random_point(rng);
                p.alpha = p.beta = p.gamma = 0;
                c.add(y_action_pointwise_check(a, mu, random_vec(rng, d), p), at({{"a", a}, {"d", d}}));
            }
    }));
    out.push_back(run_check("raising identities R^{d,1}, R^{d,2} and adjoints, 20 mu", 1e-9, [&](Check& c) {
        for (int n = 0; n < 20; ++n) {
            const SpectralParameter mu = rng.mu(5.0);
            const int d = 1 + n % 6, eps = n % 2 ? 1 : -1;
            const int j = rng.integer(0, d);
            for (int variant : {1, 2}) {
                const CVec rhs = raising_R_closed(variant, d, mu, j, eps);
                c.add(vdiff(raising_R(variant, d, mu, j, eps), rhs) / (1 + vmax(rhs)),
                      at({{"variant", variant}, {"d", d}, {"j", j}}));
            }
            const int da = 2 + n % 5;
            const int ja = rng.integer(0, da);
            for (int variant : {1, 2}) {
                const CVec rhs = raising_R_adjoint_closed(variant, da, mu, ja, eps);
                c.add(vdiff(raising_R_adjoint(variant, da, mu, ja, eps), rhs) / (1 + vmax(rhs)),
                      at({{"adjoint variant", variant}, {"d", da}, {"j", ja}}));
            }
        }
    }));
    out.push_back(run_check("adjoint factor: CG forms against -(-1)^a sqrt((2d+2a+1)/(2d+1))", 1e-9, [](Check& c) {
        for (int a = -2; a <= 2; ++a)
            for (int d = 0; d <= 8; ++d) {
                const int e = d + a;
                if (e < 0) continue;
                const double closed = -(a % 2 == 0 ? 1.0 : -1.0) * std::sqrt((2.0 * e + 1) / (2.0 * d + 1));
                double form;
                if (a % 2 == 0) {
                    const double den = cg_value(d, 2, a, 0, 0);
                    if (den == 0.0) continue;
                    form = -(2.0 * e + 1) * cg_value(e, 2, -a, 0, 0) / ((2.0 * d + 1) * den);
                } else {
                    const double den = cg_value(d, 2, a, 0, 1);
                    if (den == 0.0 || e == 0) continue;
                    form = (2.0 * e + 1) * std::sqrt(double(d) * (d + 1)) * cg_value(e, 2, -a, 0, -1) /
                           ((2.0 * d + 1) * std::sqrt(double(e) * (e + 1)) * den);
                }
                c.add(std::abs(form - closed), at({{"a", a}, {"d", d}}));
            }
    }));
    out.push_back(run_check("adjoint relation (Y^a_mu)^* = Yhat^a_{-conj mu}", 1e-9, [&](Check& c) {
        for (int n = 0; n < 5; ++n) {
            const SpectralParameter mu = rng.mu(2.0);
            const SpectralParameter nm = -mu.conj();
            for (int a = -2; a <= 2; ++a)
                for (int d = 0; d <= 5; ++d) {
                    if (d + a < 0) continue;
                    const Eigen::MatrixXcd Y = y_matrix(a, d, mu);
                    Eigen::MatrixXcd A(2 * d + 1, 2 * (d + a) + 1);
                    for (int j = 0; j < A.cols(); ++j) {
                        CVec e(d + a);
                        e.data()[j] = 1.0;
                        const CVec r = adjoint_y(a, d, nm, e);
                        for (int i = 0; i < A.rows(); ++i) A(i, j) = r.data()[i];
                    }
                    c.add((Y.adjoint() - A).norm() / (1 + Y.norm()), at({{"a", a}, {"d", d}}));
                }
        }
    }));
    out.push_back(run_check("Y^-2 Y^0 g1 closed form", 1e-9, [&](Check& c) {
        for (int n = 0; n < 10; ++n) {
            const SpectralParameter mu = rng.mu(2.0);
            const CVec r = y_action(-2, mu, y_action(0, mu, g_vector(GFamily::g1, 2, 0, 1, mu)));
            const cplx expect = -8.0 * std::sqrt(2.0) * (mu.mu1 - mu.mu2 - 1.0) * (mu.mu1 - mu.mu3 - 1.0) *
                                (mu.mu2 - mu.mu3 - 1.0) / std::sqrt(35.0);
            c.add(std::abs(r(0) - expect) / std::max(1.0, std::abs(expect)), at({{"sample", n}}));
        }
    }));
    return out;
}

// ---------------------------------------------------------------- minimal

std::vector<CheckResult> suite_minimal(Rng&) {
    std::vector<CheckResult> out;
    out.push_back(run_check("minimal nullspace against the classified basis, d <= 10", 1e-8, [](Check& c) {
        for (int d = 0; d <= 10; ++d) {
            std::vector<StandardMu> cfg{StandardMu::unitary(0.3, 1.1), StandardMu::shifted(0.2, 0.7)};
            if (d >= 1)
                for (auto s : {StandardMu::shifted((d - 1) / 2.0, 0.4), StandardMu::shifted((d - 1) / 2.0, 0.0),
                               StandardMu::shifted(d - 1.0, 0.0)})
                    cfg.push_back(s);
            for (size_t i = 0; i < cfg.size(); ++i) {
                const MinimalClass mc = classify_minimal(d, cfg[i]);
                const Eigen::MatrixXcd N = minimal_nullspace(d, cfg[i].mu());
                const std::string where = at({{"d", d}, {"config", double(i)}, {"case", mc.case_tag}});
                if (N.cols() != static_cast<long>(mc.basis.size())) {
                    c.add(1.0, where + " dimension");
                    continue;
                }
                c.add(mc.basis.empty() ? 0.0 : subspace_distance(N, span_of(mc.basis)), where);
            }
        }
    }));
    out.push_back(run_check("Gram recursion gives bu . bu^T up to d = 12", 1e-10, [](Check& c) {
        struct Run {
            SpectralParameter mu;
            Parity chi;
            int kappa;
        };
        std::vector<Run> runs{{unitary_mu(1.3, -0.4), {0, 1}, 0},
                              {unitary_mu(0.7, 0.2), {1, 1}, 0},
                              {unitary_mu(0.7, 0.2), {1, -1}, 0},
                              {unitary_mu(0.7, 0.2), {0, -1}, 0}};
        for (int kappa : {2, 3, 4, 5}) runs.push_back({kappa_mu(kappa, 0.37), {kappa % 2, 1}, kappa});
        for (const auto& r : runs) {
            const GramReport g = gram_recursion_check(12, r.mu, r.chi, r.kappa);
            const std::string where = at({{"kappa", r.kappa}, {"delta", r.chi.delta}, {"eps", r.chi.eps}});
            c.add(g.determined ? g.max_error : std::numeric_limits<double>::infinity(), where);
        }
    }));
    out.push_back(run_check("multiplicity formula against generated span rank", 0.0, [](Check& c) {
        int pairs = 0;
        for (int d0 = 0; d0 <= 4; ++d0)
            for (int d = d0; d <= d0 + 4; ++d) {
                Parity chi{0, 1};
                int kappa = 0;
                SpectralParameter mu = unitary_mu(0.9, -0.35);
                if (d0 == 1) chi = {1, 1};
                if (d0 >= 2) {
                    kappa = d0;
                    chi = {d0 % 2, 1};
                    mu = kappa_mu(kappa, 0.21);
                }
                const SpanReport rep = generate_minimal_span(d0, chi, kappa, mu, d);
                c.expect(rep.rank == multiplicity(d0, d) && rep.rank == rep.expected && rep.leak < 1e-8,
                         at({{"d0", d0}, {"d", d}, {"rank", rep.rank}, {"multiplicity", multiplicity(d0, d)}}));
                ++pairs;
            }
        c.expect(pairs >= 20, "fewer than 20 pairs");
    }));
    return out;
}

// ---------------------------------------------------------------- gamma

std::vector<std::vector<Weyl>> words_upto(int n) {
    std::vector<std::vector<Weyl>> out{{}}, layer{{}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<Weyl>> next;
        for (auto& w : layer)
            for (Weyl s : {Weyl::w2, Weyl::w3}) {
                auto x = w;
                x.push_back(s);
                next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = next;
    }
    return out;
}

std::vector<CheckResult> suite_gamma(Rng& rng) {
    std::vector<CheckResult> out;
    out.push_back(run_check("Gamma_W quotient against the y = 0 classical matrix", 1e-10, [&](Check& c) {
        for (int d : {1, 2, 4})
            for (int trial = 0; trial < 5; ++trial) {
                const cplx u = rng.complex(0.9) + 0.05;
                const CMat Dvmp = wigner_D(d, mat_cast<double>(v_matrix({-1, 1})));
                const cplx pre = kI * complex_gamma(1.0 + u) / (std::pow(2.0, 1.0 + u) * kPi);
                CMat mid = CMat::identity(d);
                for (auto& x : mid.data()) x *= std::exp(kI * kPi * u / 2.0);
                CMat sub = Dvmp;
                for (auto& x : sub.data()) x *= std::exp(-kI * kPi * u / 2.0);
                const CMat R = (mid - sub) * dtilde(d, -kI) * classical_whittaker_matrix(d, 0.0, -u);
                const GammaMatrix G = gamma_W(d, u, 1);
                for (int m = -d; m <= d; ++m) c.add(std::abs(pre * R(m, m) / G.entries(m) - 1.0), at({{"d", d}, {"m", m}}));
            }
    }));
    out.push_back(run_check("classical Whittaker functional equation in u", 1e-8, [&](Check& c) {
        for (int trial = 0; trial < 20; ++trial) {
            const int d = 1 + trial % 4;
            const double y = (trial % 2 ? 1.0 : -1.0) * rng.uniform(0.1, 1.5);
            const cplx u = rng.complex(1.5);
            const GammaMatrix G = gamma_W(d, u, y > 0 ? 1 : -1);
            const cplx s = std::exp(-u * std::log(kPi * std::abs(y)));
            for (int m = -d; m <= d; ++m) {
                const cplx lhs = classical_whittaker(d, m, y, -u);
                const cplx rhs = s * G.entries(m) * classical_whittaker(d, m, y, u);
                c.add(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), at({{"d", d}, {"m", m}, {"y", y}}));
            }
        }
    }));
    out.push_back(run_check("T^d(w, mu) independent of the word, d <= 3", 1e-9, [&](Check& c) {
        const auto words = words_upto(5);
        for (int d = 0; d <= 3; ++d)
            for (int trial = 0; trial < 3; ++trial) {
                const SpectralParameter mu = rng.mu(0.9);
                for (Weyl w : {Weyl::I, Weyl::w2, Weyl::w3, Weyl::w4, Weyl::w5, Weyl::wl}) {
                    const CMat T = t_matrix(d, w, mu);
                    double s = 0;
                    for (auto x : T.data()) s = std::max(s, std::abs(x));
                    for (const auto& word : words) {
                        Weyl p = Weyl::I;
                        for (Weyl x : word) p = weyl_compose(p, x);
                        if (p == w)
                            c.add(mdiff(t_matrix_word(d, word, mu), T) / s,
                                  at({{"d", d}, {"length", double(word.size())}}) + " w=" + weyl_name(w));
                    }
                }
            }
    }));
    out.push_back(run_check("minimal vectors proportional to intertwined rows (ratio spread)", 1e-8, [](Check& c) {
        struct Run {
            int which, d;
            double t;
        };
        for (Run r : {Run{1, 2, 0.0}, Run{1, 3, 0.2}, Run{1, 4, 0.2}, Run{1, 7, -0.45}, Run{2, 5, 0}, Run{2, 9, 0},
                      Run{3, 3, 0}, Run{3, 7, 0}, Run{3, 11, 0}, Run{4, 2, 0}, Run{4, 3, 0}, Run{4, 6, 0}, Run{4, 9, 0}}) {
            const GDWhittFEReport rep = verify_gdwhittfes(r.which, r.d, r.t);
            const std::string where = at({{"case", r.which}, {"d", r.d}});
            if (!rep.ok) c.add(std::numeric_limits<double>::infinity(), where + " not ok");
            for (size_t i = 0; i < rep.pairs.size(); ++i) {
                c.add(rep.ratio_spread[i], where + " " + rep.pairs[i]);
                if (std::abs(rep.constants[i]) == 0.0) c.add(std::numeric_limits<double>::infinity(), where + " zero constant");
            }
        }
    }));
    out.push_back(run_check("case-3 anchor constant against the removable limit", 1e-9, [](Check& c) {
        for (int d : {3, 7, 11}) {
            IntertwinedParams p{IntertwinedKind::w4, d, 1, 1, cplx(d - 1.0), cplx((d - 1) / 2.0)};
            const CVec row = intertwined_row_limit(p);
            const cplx v = std::pow(kPi, -1.5 * (d - 1)) * 2.0 * row((d + 1) / 2);
            c.add(rel(v, case3_anchor_constant(d)), at({{"d", d}}));
        }
    }));
    return out;
}

// ---------------------------------------------------------------- whittaker

std::vector<CheckResult> suite_whittaker(Rng& rng) {
    const SpectralParameter shifted({2.0, 0.1}, {0.4, 0.0}, {-2.4, -0.1});
    const std::vector<std::array<double, 2>> ys{{1.0, 1.0}, {0.7, 1.3}};
    std::vector<CheckResult> out;
    out.push_back(run_check("Barnes second lemma, 10 random parameter sets", 1e-8, [&](Check& c) {
        for (int k = 0; k < 10; ++k) {
            auto p = [&](double lo) { return cplx(rng.uniform(lo, lo + 1.0), rng.uniform(-1.0, 1.0)); };
            const cplx a = p(0.2), b = p(0.2), cc = p(0.2), d = p(1.0), e = p(1.0);
            c.add(barnes_second_lemma_check(a, b, cc, d, e).residual, at({{"set", k}}));
        }
    }));
    out.push_back(run_check("d = 0: Lambda W^0 (Jacquet) = W^{0*}", 1e-4, [&](Check& c) {
        for (auto [y1, y2] : ys) {
            const cplx oracle = jacquet_full_matrix(0, y1, y2, shifted, {}).value(0, 0);
            const WStarResult w = w_star(0, y1, y2, shifted);
            c.add(rel(lambda_alpha({0, 0, 0}, shifted) * oracle, w.value(0)), at({{"y1", y1}, {"y2", y2}}));
        }
    }));
    out.push_back(run_check("d = 1: three rows of W^1 (Jacquet) against W^{1*}", 1e-4, [&](Check& c) {
        for (auto [y1, y2] : ys) {
            const CMat W = jacquet_full_matrix(1, y1, y2, shifted, {}).value;
            const CVec a = bu(1, 0, -1) * W, b = bu(1, 1, -1) * W, e = bu(1, 1, 1) * W;
            const WStarResult w0 = w_star(1, y1, y2, shifted);
            const WStarResult w4 = w_star(1, y1, y2, weyl_action(shifted, Weyl::w4));
            const WStarResult w5 = w_star(1, y1, y2, weyl_action(shifted, Weyl::w5));
            for (int m = -1; m <= 1; ++m) {
                const std::string where = at({{"y1", y1}, {"y2", y2}, {"m", m}});
                c.add(rel(std::sqrt(2.0) * lambda_alpha({0, 1, 1}, shifted) * a(m), w0.value(m)), where + " row bu^-_0");
                c.add(rel(-2.0 * lambda_alpha({1, 0, 1}, shifted) * b(m), w4.value(m)), where + " row bu^-_1");
                c.add(rel(2.0 * lambda_alpha({1, 1, 0}, shifted) * e(m), w5.value(m)), where + " row bu^+_1");
            }
        }
    }));
    struct Central {
        int d;
        double tol;
    };
    for (Central cs : {Central{3, 1e-4}, Central{2, 1e-3}}) {
        out.push_back(run_check("d = " + std::to_string(cs.d) + ": central entry Lambda* W^d_{-d,0} = W^{d*}_0", cs.tol,
                                [&](Check& c) {
                                    const SpectralParameter mu = minimal_line_mu(cs.d, 0.3);
                                    for (auto [y1, y2] : {std::array<double, 2>{1.0, 0.8}, std::array<double, 2>{0.7, 1.3}}) {
                                        const EvalResult o = jacquet_central_oracle(cs.d, y1, y2, mu, -cs.d);
                                        const WStarResult w = w_star(cs.d, y1, y2, mu);
                                        c.add(rel(lambda_star(cs.d, mu) * o.value, w.value(0)), at({{"y1", y1}, {"y2", y2}}));
                                    }
                                }));
    }
    out.push_back(run_check("row W^d_{d,0} vanishes, d = 2, 3", 1e-6, [&](Check& c) {
        for (int d : {2, 3}) {
            const SpectralParameter mu = minimal_line_mu(d, 0.3);
            const double ref = std::abs(jacquet_central_oracle(d, 1.0, 0.8, mu, -d).value);
            c.add(std::abs(jacquet_central_oracle(d, 1.0, 0.8, mu, d).value) / ref, at({{"d", d}}));
        }
    }));
    out.push_back(run_check("Mellin-space Casimir residuals, d <= 5, 10 s each", 1e-10, [&](Check& c) {
        for (int d = 0; d <= 5; ++d) {
            const SpectralParameter mu = d >= 2 ? minimal_line_mu(d, rng.uniform(-1, 1)) : rng.mu(0.7);
            for (int k = 0; k < 10; ++k) {
                const std::array<cplx, 2> s{cplx(rng.uniform(2, 4), rng.uniform(-3, 3)),
                                            cplx(rng.uniform(2, 4), rng.uniform(-3, 3))};
                for (int mp = -d; mp <= d; ++mp)
                    for (int which = 1; which <= 2; ++which) {
                        const MellinResidual r = mellin_pde_residual(which, d, mp, s, mu);
                        c.add(std::abs(r.residual) / r.scale, at({{"which", which}, {"d", d}, {"m'", mp}}));
                    }
            }
        }
    }));
    out.push_back(run_check("ladder S^+- phi_{m'} = +-c phi_{m'+-1}", 1e-6, [&](Check& c) {
        const int runs[][3] = {{2, 0, 1}, {2, -1, -1}, {3, 1, 1}, {3, -2, -1}};
        for (auto [d, mp, sign] : runs) {
            const LadderReport r = ladder_check(d, mp, sign, ys, minimal_line_mu(d, 0.3));
            c.add(r.max_residual / r.scale, at({{"d", d}, {"m'", mp}, {"sign", sign}}));
        }
    }));
    return out;
}

// ---------------------------------------------------------------- lambda_x

std::vector<CheckResult> suite_lambda_x(Rng& rng) {
    std::vector<CheckResult> out;
    out.push_back(run_check("unitary factored form of Lambda_x, 50 points", 1e-9, [&](Check& c) {
        for (int n = 0; n < 50; ++n) {
            const double t1 = rng.uniform(-3, 3), t2 = rng.uniform(-3, 3), x = rng.uniform(0, 4);
            const cplx def = lambda_x_eigenvalue(unitary_mu(t1, t2), x);
            c.add(rel(lambda_x_unitary_form(t1, t2, x), def), at({{"t1", t1}, {"t2", t2}, {"x", x}}));
        }
    }));
    out.push_back(run_check("shifted factored form of Lambda_x, 50 points", 1e-9, [&](Check& c) {
        for (int n = 0; n < 50; ++n) {
            const double a = rng.uniform(-2, 2), t = rng.uniform(-2, 2), x = rng.uniform(0, 4);
            const cplx def = lambda_x_eigenvalue({a + kI * t, -a + kI * t, -2.0 * kI * t}, x);
            c.add(rel(lambda_x_shifted_form(a, t, x), def), at({{"a", a}, {"t", t}, {"x", x}}));
        }
    }));
    out.push_back(run_check("Lambda_x vanishes on the minimal lines x = (d-1)/2", 0.0, [&](Check& c) {
        for (int d = 1; d <= 10; ++d)
            for (int n = 0; n < 3; ++n) {
                const double h = (d - 1) / 2.0, t = rng.uniform(-2, 2);
                c.expect(lambda_x_shifted_form(h, t, h) == 0.0, at({{"d", d}, {"t", t}}));
                const SpectralParameter mu{h + kI * t, -h + kI * t, -2.0 * kI * t};
                const cplx l1 = lambda1(mu), l2 = lambda2(mu);
                const cplx b = l1 + 4.0 * h * h - 1.0;
                const double s = std::abs(27.0 * l2 * l2) + std::abs(4.0 * (l1 + h * h - 1.0) * b * b) + 1.0;
                c.expect(std::abs(lambda_x_eigenvalue(mu, h)) <= 1e-12 * s, at({{"definition d", d}, {"t", t}}));
            }
    }));
    return out;
}

struct SuiteDef {
    int criterion;
    double budget;
    std::vector<CheckResult> (*run)(Rng&);
};

const std::vector<std::pair<std::string, SuiteDef>>& registry() {
    static const std::vector<std::pair<std::string, SuiteDef>> r{
        {"cg", {1, 1.0, suite_cg}},
        {"dmatrix", {2, 10.0, suite_dmatrix}},
        {"casimir", {3, 120.0, suite_casimir}},
        {"ycalc", {4, 30.0, suite_ycalc}},
        {"minimal", {5, 60.0, suite_minimal}},
        {"gamma", {6, 60.0, suite_gamma}},
        {"whittaker", {7, 600.0, suite_whittaker}},
        {"lambda_x", {8, 1.0, suite_lambda_x}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& [k, v] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    const auto& r = registry();
    auto it = std::find_if(r.begin(), r.end(), [&](auto& e) { return e.first == name; });
    if (it == r.end()) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    rep.criterion = it->second.criterion;
    rep.budget_seconds = it->second.budget;
    Rng rng(seed);
    const auto t0 = std::chrono::steady_clock::now();
    rep.checks = it->second.run(rng);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult budget;
    budget.name = "runtime budget (s)";
    budget.value = rep.seconds;
    budget.tolerance = rep.budget_seconds;
    budget.count = 1;
    budget.passed = rep.seconds < rep.budget_seconds;
    if (!budget.passed) budget.detail = "over budget";
    rep.checks.push_back(budget);
    return rep;
}

}  // namespace gl3
