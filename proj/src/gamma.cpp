#include "gl3/gamma.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <array>
#include <cmath>
#include <limits>

namespace gl3 {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_series(cplx z) {
    // z already shifted by -1
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    return x;
}

double fact(int n) { return std::tgamma(n + 1.0); }

const double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double pole_distance(cplx z) {
    if (z.real() > 0.5) return std::numeric_limits<double>::infinity();
    const double n = std::round(z.real());
    if (n > 0) return std::abs(z - cplx(1.0, 0.0)) + 1.0;
    return std::abs(z - cplx(n, 0.0));
}

bool near_gamma_pole(cplx z, double tol) { return pole_distance(z) < tol; }

cplx complex_gamma(cplx z) {
    if (near_gamma_pole(z)) throw PoleError("gamma pole", z);
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    const cplx zz = z - 1.0;
    const cplx t = zz + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zz + 0.5) * std::exp(-t) * lanczos_series(zz);
}

cplx complex_rgamma(cplx z) {
    if (z.real() < 0.5) {
        const double n = std::round(z.real());
        if (z.imag() == 0.0 && z.real() == n) return 0.0;
        // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
        return std::sin(kPi * z) * complex_gamma(1.0 - z) / kPi;
    }
    return 1.0 / complex_gamma(z);
}

cplx complex_lgamma(cplx z) {
    if (near_gamma_pole(z)) throw PoleError("log gamma pole", z);
    if (z.real() < 0.5) return std::log(kPi) - std::log(std::sin(kPi * z)) - complex_lgamma(1.0 - z);
    const cplx zz = z - 1.0;
    const cplx t = zz + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zz + 0.5) * std::log(t) - t + std::log(lanczos_series(zz));
}

cplx pi_pow(cplx z) { return std::exp(z * std::log(kPi)); }

cplx gamma_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den) {
    cplx r = 1.0;
    for (cplx a : num) r *= complex_gamma(a);
    for (cplx b : den) r *= complex_rgamma(b);
    return r;
}

namespace {

using lcplx = std::complex<long double>;

// e^{-z/2} z^{1/2+beta} 1F1(1/2+beta-kappa; 1+2beta; z)
cplx kummer_M(cplx kappa, cplx beta, double z) {
    const lcplx a(0.5L + (long double)beta.real() - (long double)kappa.real(),
                  (long double)beta.imag() - (long double)kappa.imag());
    const lcplx b(1.0L + 2.0L * (long double)beta.real(), 2.0L * (long double)beta.imag());
    lcplx term = 1.0L, sum = 1.0L;
    for (int n = 0; n < 2000; ++n) {
        term *= (a + (long double)n) / ((b + (long double)n) * (long double)(n + 1)) * (long double)z;
        sum += term;
        if (std::abs(term) < 1e-21L * std::abs(sum) && n > 5) break;
    }
    const cplx s(double(sum.real()), double(sum.imag()));
    return std::exp(-z / 2.0 + (0.5 + beta) * std::log(z)) * s;
}

cplx whittaker_W_series_raw(cplx kappa, cplx beta, double z) {
    return complex_gamma(-2.0 * beta) * complex_rgamma(0.5 - beta - kappa) * kummer_M(kappa, beta, z) +
           complex_gamma(2.0 * beta) * complex_rgamma(0.5 + beta - kappa) * kummer_M(kappa, -beta, z);
}

// Gamma(a) U(a,b,z) by trapezoid in t = e^x; Re a > 0
cplx gamma_a_times_U(cplx a, cplx b, double z) {
    const double ra = a.real();
    const double h = 0.04;
    const double x_lo = -42.0 / ra;
    const double x_hi = std::log((60.0 + 4.0 * std::abs(b) + 4.0 * std::abs(a)) / z) + 1.0;
    const cplx e = b - a - 1.0;
    cplx sum = 0.0;
    for (double x = x_lo; x <= x_hi; x += h) {
        const double t = std::exp(x);
        sum += std::exp(-z * t + a * x + e * std::log1p(t));
    }
    return sum * h;
}

}  // namespace

cplx whittaker_W_series(cplx kappa, cplx beta, double z) {
    const double tb = 2.0 * beta.real();
    if (std::abs(beta.imag()) < 1e-6 && std::abs(tb - std::round(tb)) < 1e-6) {
        const double p = 1e-8;
        return 0.5 * (whittaker_W_series_raw(kappa, beta + p, z) + whittaker_W_series_raw(kappa, beta - p, z));
    }
    return whittaker_W_series_raw(kappa, beta, z);
}

cplx whittaker_W_integral(cplx kappa, cplx beta, double z) {
    if (z <= 0.0) throw std::domain_error("whittaker_W: z must be positive");
    // W = e^{-z/2} z^{beta+1/2} U(a, b, z) = e^{-z/2} z^{1/2-beta} U(a', 2-b, z)
    cplx bb = beta;
    cplx a = 0.5 + bb - kappa;
    if ((0.5 - bb - kappa).real() > a.real()) {
        bb = -bb;
        a = 0.5 + bb - kappa;
    }
    const cplx b = 1.0 + 2.0 * bb;
    const cplx pre = std::exp(-z / 2.0 + (bb + 0.5) * std::log(z));
    if (a.real() > 0.3) return pre * gamma_a_times_U(a, b, z) * complex_rgamma(a);
    // U(a) = -(b-2a-2-z) U(a+1) - (a+1)(a+2-b) U(a+2)
    const int n = int(std::ceil(0.3 - a.real())) + 1;
    cplx u2 = gamma_a_times_U(a + double(n + 1), b, z) * complex_rgamma(a + double(n + 1));
    cplx u1 = gamma_a_times_U(a + double(n), b, z) * complex_rgamma(a + double(n));
    for (int k = n - 1; k >= 0; --k) {
        const cplx ak = a + double(k);
        const cplx u0 = -(b - 2.0 * ak - 2.0 - z) * u1 - (ak + 1.0) * (ak + 2.0 - b) * u2;
        u2 = u1;
        u1 = u0;
    }
    return pre * u1;
}

cplx whittaker_W(cplx kappa, cplx beta, double z) { return whittaker_W_integral(kappa, beta, z); }

cplx classical_whittaker(int d, int m, double y, cplx u) {
    if (std::abs(m) > d) throw IndexError("classical_whittaker: |m| > d");
    if (y == 0.0) {
        return std::pow(2.0, 1.0 - u) * kPi * complex_gamma(u) * complex_rgamma((1.0 + u + double(m)) / 2.0) *
               complex_rgamma((1.0 + u - double(m)) / 2.0);
    }
    const int eps = y > 0 ? 1 : -1;
    const double ay = std::abs(y);
    const cplx r = complex_rgamma((1.0 - double(eps * m) + u) / 2.0);
    if (r == cplx(0.0)) return 0.0;
    return std::exp((1.0 + u) / 2.0 * std::log(kPi * ay)) / ay * r *
           whittaker_W(-double(eps * m) / 2.0, u / 2.0, 4.0 * kPi * ay);
}

CMat classical_whittaker_matrix(int d, double y, cplx u) {
    CMat W(d);
    for (int m = -d; m <= d; ++m) W(m, m) = classical_whittaker(d, m, y, u);
    return W;
}

CMat GammaMatrix::matrix() const {
    if (!regular())
        throw PoleError("Gamma_W(u," + std::to_string(eps) + ") singular at row " + std::to_string(poles.front()),
                        (1.0 - double(eps * poles.front()) + u) / 2.0);
    CMat M(d);
    for (int m = -d; m <= d; ++m) M(m, m) = entries(m);
    return M;
}

GammaMatrix gamma_W(int d, cplx u, int eps) {
    GammaMatrix G;
    G.d = d;
    G.u = u;
    G.eps = eps;
    G.entries = CVec(d);
    for (int m = -d; m <= d; ++m) {
        const cplx num = (1.0 - double(eps * m) + u) / 2.0;
        const cplx den = (1.0 - double(eps * m) - u) / 2.0;
        if (near_gamma_pole(num)) {
            G.poles.push_back(m);
            G.entries(m) = cplx(kNaN, kNaN);
            continue;
        }
        G.entries(m) = complex_gamma(num) * complex_rgamma(den);
    }
    return G;
}

CMat dtilde(int d, cplx s) {
    CMat M(d);
    for (int m = -d; m <= d; ++m) M(m, m) = std::pow(s, -m);
    return M;
}

namespace {

RotationMatrix vmm_wl() {
    return mat_cast<double>(matmul(v_matrix({-1, -1}), weyl_matrix(Weyl::wl)));
}
RotationMatrix wl_vmm() {
    return mat_cast<double>(matmul(weyl_matrix(Weyl::wl), v_matrix({-1, -1})));
}

CMat t_generator(int d, Weyl w, const SpectralParameter& mu) {
    switch (w) {
        case Weyl::I: return CMat::identity(d);
        case Weyl::w2: {
            CMat G = gamma_W(d, mu.mu2 - mu.mu1, 1).matrix();
            const cplx p = pi_pow(mu.mu1 - mu.mu2);
            for (auto& x : G.data()) x *= p;
            return G;
        }
        case Weyl::w3: {
            CMat G = wigner_D(d, vmm_wl()) * gamma_W(d, mu.mu3 - mu.mu2, 1).matrix() * wigner_D(d, wl_vmm());
            const cplx p = pi_pow(mu.mu2 - mu.mu3);
            for (auto& x : G.data()) x *= p;
            return G;
        }
        default: throw std::invalid_argument("t_generator: not a simple reflection");
    }
}

}  // namespace

CMat t_matrix_word(int d, const std::vector<Weyl>& word, const SpectralParameter& mu) {
    CMat T = CMat::identity(d);
    SpectralParameter cur = mu;
    for (Weyl w : word) {
        T = T * t_generator(d, w, cur);
        cur = weyl_action(cur, w);
    }
    return T;
}

CMat t_matrix(int d, Weyl w, const SpectralParameter& mu) {
    switch (w) {
        case Weyl::I: return CMat::identity(d);
        case Weyl::w2:
        case Weyl::w3: return t_generator(d, w, mu);
        case Weyl::w4: return t_matrix_word(d, {Weyl::w3, Weyl::w2}, mu);
        case Weyl::w5: return t_matrix_word(d, {Weyl::w2, Weyl::w3}, mu);
        case Weyl::wl: return t_matrix_word(d, {Weyl::w2, Weyl::w3, Weyl::w2}, mu);
    }
    throw std::invalid_argument("unknown Weyl element");
}

cplx f_matrix_entry(int d, FRow which, int mp, cplx u) {
    if (std::abs(mp) > d) throw IndexError("f_matrix_entry: |m'| > d");
    const double sp = std::sqrt(kPi);
    if (which == FRow::last) {
        const double c = std::pow(2.0, -d) * sp * std::sqrt(fact(2 * d) / (fact(d + mp) * fact(d - mp)));
        return c * gamma_ratio({(double(d - mp) - u) / 2.0, (double(d + mp) - u) / 2.0},
                               {(double(d) - u) / 2.0, (double(d + 1) - u) / 2.0});
    }
    if (d < 1) throw IndexError("f_matrix_entry: second-to-last row needs d >= 1");
    if (mp == 0) return 0.0;
    const double c =
        std::pow(2.0, 1 - d) * std::sqrt(fact(2 * d - 1) / (fact(d + mp) * fact(d - mp)));
    return -double(mp) * sp * c *
           gamma_ratio({(double(d - 1 - mp) - u) / 2.0, (double(d - 1 + mp) - u) / 2.0, (1.0 - u) / 2.0},
                       {(double(d) - u) / 2.0, (double(d + 1) - u) / 2.0, -(u + 1.0) / 2.0});
}

cplx f_matrix_quadrature(int d, int mp, int m, cplx u) {
    if (u.real() >= -1.0) throw std::domain_error("f_matrix_quadrature needs Re u < -1");
    boost::math::quadrature::tanh_sinh<double> q;
    const cplx e = -1.0 - u / 2.0;
    auto part = [&](bool imag) {
        return q.integrate([&](double x) {
            const cplx v = std::exp(e * std::log1p(-x * x)) * wigner_small_d(d, mp, m, x);
            return imag ? v.imag() : v.real();
        }, -1.0, 1.0);
    };
    return {part(false), part(true)};
}

namespace {

int delta_of(const IntertwinedParams& p) { return (p.sign == ((p.d % 2 == 0) ? 1 : -1)) ? 0 : 1; }
int eta_of(const IntertwinedParams& p) { return p.sign == 1 ? 0 : 1; }

cplx ipow(int k) {
    static const cplx t[4] = {1.0, kI, -1.0, -kI};
    return t[((k % 4) + 4) % 4];
}

}  // namespace

std::vector<int> intertwined_support(const IntertwinedParams& p) {
    const int par = p.row_offset == 0 ? delta_of(p) : 1 - delta_of(p);
    std::vector<int> ms;
    for (int m = par; m <= p.d; m += 2) ms.push_back(m);
    return ms;
}

int intertwined_result_sign(const IntertwinedParams& p) {
    if (p.kind == IntertwinedKind::w3) return p.sign;
    const int eps = (p.d % 2 == 0) ? 1 : -1;
    return p.row_offset == 0 ? eps : -eps;
}

cplx intertwined_coefficient(const IntertwinedParams& p, int m) {
    const int d = p.d, eta = eta_of(p);
    const cplx u = p.u1;
    cplx c;
    if (p.row_offset == 0) {
        c = ipow(d + eta - m) / std::pow(2.0, d - 1) *
            std::sqrt(fact(2 * d) / (fact(d + m) * fact(d - m))) *
            gamma_ratio({(1.0 + eta + u) / 2.0, (double(d - m) - u) / 2.0, (double(d + m) - u) / 2.0},
                        {(double(eta) - u) / 2.0, (double(d) - u) / 2.0, (double(d + 1) - u) / 2.0});
    } else {
        if (m == 0) return 0.0;
        c = ipow(d + 1 + eta - m) / std::pow(2.0, d - 2) * double(m) *
            std::sqrt(fact(2 * d - 1) / (fact(d + m) * fact(d - m))) *
            gamma_ratio({(1.0 + eta + u) / 2.0, (1.0 - u) / 2.0, (double(d - 1 - m) - u) / 2.0,
                         (double(d - 1 + m) - u) / 2.0},
                        {(double(eta) - u) / 2.0, -(u + 1.0) / 2.0, (double(d) - u) / 2.0,
                         (double(d + 1) - u) / 2.0});
    }
    if (p.kind == IntertwinedKind::w4)
        c *= gamma_ratio({(1.0 - double(m) + p.u2) / 2.0}, {(1.0 - double(m) - p.u2) / 2.0});
    return c;
}

RatioParts intertwined_ratio(const IntertwinedParams& p, int m) {
    const int d = p.d;
    const cplx u = p.u1;
    const double sq = std::sqrt(double(d - m) * (d - 1 - m) / (double(d + 2 + m) * (d + 1 + m)));
    RatioParts r;
    if (p.row_offset == 0) {
        r.num = -sq * (double(d + m) - u);
        r.den = double(d - 2 - m) - u;
    } else {
        r.num = -sq * double(m + 2) * (double(d - 1 + m) - u);
        r.den = double(m) * (double(d - 3 - m) - u);
    }
    if (p.kind == IntertwinedKind::w4) {
        r.num *= (-1.0 - double(m) - p.u2);
        r.den *= (-1.0 - double(m) + p.u2);
    }
    return r;
}

namespace {

CVec assemble(const IntertwinedParams& p, const std::vector<int>& ms, const std::vector<cplx>& s) {
    const int rs = intertwined_result_sign(p);
    CVec out(p.d);
    for (size_t i = 0; i < ms.size(); ++i) {
        const double cm = ms[i] == 0 ? 0.5 : 1.0;
        const CVec b = basis_u(p.d, ms[i], rs);
        for (int k = -p.d; k <= p.d; ++k) out(k) += cm * s[i] * b(k);
    }
    return out;
}

}  // namespace

CVec intertwined_row(const IntertwinedParams& p) {
    const auto ms = intertwined_support(p);
    std::vector<cplx> s;
    for (int m : ms) s.push_back(intertwined_coefficient(p, m));
    return assemble(p, ms, s);
}

CVec intertwined_row_direct(const IntertwinedParams& p) {
    CVec v = basis_u(p.d, p.d - p.row_offset, p.sign);
    v = v * wigner_D(p.d, vmm_wl());
    v = v * gamma_W(p.d, p.u1, 1).matrix();
    v = v * wigner_D(p.d, wl_vmm());
    if (p.kind == IntertwinedKind::w4) v = v * gamma_W(p.d, p.u2, 1).matrix();
    return v;
}

cplx intertwined_coefficient_limit(const IntertwinedParams& p, int m, double h) {
    // off-axis direction so that a single offset does not land on another pole line
    const cplx dir1(1.0, 0.0), dir2(0.6180339887, 0.0);
    auto at = [&](double t) {
        IntertwinedParams q = p;
        q.u1 += t * dir1;
        q.u2 += t * dir2;
        return intertwined_coefficient(q, m);
    };
    auto sym = [&](double t) { return 0.5 * (at(t) + at(-t)); };
    return (4.0 * sym(h / 2.0) - sym(h)) / 3.0;
}

CVec intertwined_row_limit(const IntertwinedParams& p, double h) {
    const auto ms = intertwined_support(p);
    std::vector<cplx> s;
    for (int m : ms) s.push_back(intertwined_coefficient_limit(p, m, h));
    return assemble(p, ms, s);
}

CVec intertwined_row_anchored(const IntertwinedParams& p, double h) {
    const auto ms = intertwined_support(p);
    const size_t n = ms.size();
    std::vector<cplx> lim(n), s(n);
    size_t anchor = 0;
    for (size_t i = 0; i < n; ++i) {
        lim[i] = intertwined_coefficient_limit(p, ms[i], h);
        if (std::abs(lim[i]) > std::abs(lim[anchor])) anchor = i;
    }
    s[anchor] = lim[anchor];
    const double tiny = 1e-12;
    for (size_t i = anchor; i + 1 < n; ++i) {
        const RatioParts r = intertwined_ratio(p, ms[i]);
        const bool degenerate = std::abs(r.den) < tiny || (ms[i] == 0 && p.row_offset == 1);
        s[i + 1] = degenerate ? lim[i + 1] : s[i] * r.num / r.den;
    }
    for (size_t i = anchor; i > 0; --i) {
        const RatioParts r = intertwined_ratio(p, ms[i - 1]);
        const bool degenerate = std::abs(r.num) < tiny || (ms[i - 1] == 0 && p.row_offset == 1);
        s[i - 1] = degenerate ? lim[i - 1] : s[i] * r.den / r.num;
    }
    return assemble(p, ms, s);
}

double case3_anchor_constant(int d) {
    const int kappa = (d + 1) / 2;
    return std::pow(kPi, -1.5 * (d - 1)) * std::pow(2.0, 3 - 2 * d) * fact(d) *
           std::sqrt(fact(2 * d - 1) * fact(kappa - 1) / fact(3 * kappa - 1));
}

}  // namespace gl3
