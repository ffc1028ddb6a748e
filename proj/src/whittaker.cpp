#include "gl3/whittaker.hpp"

#include "gl3/coefficient_flow.hpp"
#include "gl3/gamma.hpp"
#include "gl3/lie.hpp"
#include "gl3/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>


namespace gl3 {

namespace {

using Vec = Eigen::VectorXcd;
using Triple = std::array<int, 3>;
using S2 = std::array<cplx, 2>;

double binom(int n, int k) { return std::round(std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0))); }

// Gauss-Legendre on [-1, 1] by Golub-Welsch
struct GaussRule {
    std::vector<double> x, w;
};

const GaussRule& gauss_rule(int n) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule r;
    for (int k = 0; k < n; ++k) {
        r.x.push_back(es.eigenvalues()(k));
        r.w.push_back(2.0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k));
    }
    return cache.emplace(n, r).first->second;
}

template <class T>
T pairwise_sum(const std::vector<T>& v, size_t lo, size_t hi, const T& zero) {
    if (hi - lo == 0) return zero;
    if (hi - lo == 1) return v[lo];
    const size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid, zero) + pairwise_sum(v, mid, hi, zero);
}

Triple beta_of(int d, int l1) {
    if (d == 0) return {0, 0, 0};
    if (d == 1) return {l1, l1, 1 - l1};
    return {d, 0, l1};
}
Triple eta_of(int d, int l2) {
    if (d == 0) return {0, 0, 0};
    if (d == 1) return {l2, l2, 1 - l2};
    return {0, d, l2};
}

// (l1, l2) pairs with the components m' they feed
struct KernelTerm {
    int l1, l2, k;
    std::vector<std::pair<int, double>> uses;  // (m' + d, coefficient)
};

std::vector<KernelTerm> kernel_terms(int d) {
    std::map<std::pair<int, int>, KernelTerm> terms;
    for (int mp = -d; mp <= d; ++mp) {
        const int m = std::abs(mp), eps = mp < 0 ? -1 : 1;
        const double root = std::sqrt(binom(2 * d, d + m));
        for (int l = 0; l <= m; ++l) {
            const int l1 = d - m, l2 = l;
            auto& t = terms[{l1, l2}];
            t.l1 = l1;
            t.l2 = l2;
            const Triple b = beta_of(d, l1), e = eta_of(d, l2);
            t.k = b[0] + b[1] + b[2] + e[0] + e[1] + e[2] - 2 * d;
            t.uses.push_back({mp + d, root * ((l % 2 == 0 || eps > 0) ? 1.0 : -1.0) * binom(m, l)});
        }
    }
    std::vector<KernelTerm> out;
    for (auto& [key, t] : terms) out.push_back(t);
    return out;
}

struct AxisNodes {
    std::vector<double> tau, w;
    std::vector<char> inner;  // node lies in |tau| <= T/2
};

AxisNodes axis_nodes(double T, double pw, int npp) {
    const GaussRule& g = gauss_rule(npp);
    const int panels = static_cast<int>(std::llround(2 * T / pw));
    AxisNodes a;
    for (int p = 0; p < panels; ++p) {
        const double lo = -T + p * pw, hi = lo + pw;
        const bool in = lo >= -T / 2 - 1e-12 && hi <= T / 2 + 1e-12;
        for (int k = 0; k < npp; ++k) {
            a.tau.push_back(0.5 * (lo + hi) + 0.5 * pw * g.x[k]);
            a.w.push_back(0.5 * pw * g.w[k]);
            a.inner.push_back(in);
        }
    }
    return a;
}

double auto_T(const SpectralParameter& mu, const ContourSpec& c) {
    double T = c.T > 0 ? c.T : 30.0 + 5.0 * std::max({std::abs(mu.mu1.imag()), std::abs(mu.mu2.imag()), std::abs(mu.mu3.imag())});
    // whole panels
    return std::ceil(T / c.panel_width) * c.panel_width;
}

constexpr double kNorm = 1.0 / (16.0 * kPi * kPi * kPi * kPi);  // 1/(4pi^2) times dtau/(2pi)^2

struct StarPass {
    std::vector<cplx> full, inner;
    long nodes = 0;
};

StarPass w_star_pass(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c, double T,
                     bool parallel) {
    const int n = 2 * d + 1;
    const auto terms = kernel_terms(d);
    const AxisNodes a = axis_nodes(T, c.panel_width, c.nodes_per_panel);
    const size_t N = a.tau.size();
    int kmax = 0;
    for (auto& t : terms) kmax = std::max(kmax, t.k);

    // per-axis gamma products and Mellin powers
    std::vector<std::vector<cplx>> N1(d + 1, std::vector<cplx>(N)), N2(d + 1, std::vector<cplx>(N));
    std::vector<cplx> P1(N), P2(N), s1(N), s2(N);
    for (size_t i = 0; i < N; ++i) {
        s1[i] = cplx(c.s1, a.tau[i]);
        s2[i] = cplx(c.s2, a.tau[i]);
        P1[i] = a.w[i] * std::pow(kPi * y1, 1.0 - s1[i]);
        P2[i] = a.w[i] * std::pow(kPi * y2, 1.0 - s2[i]);
        for (int l = 0; l <= d; ++l) {
            const Triple b = beta_of(d, l), e = eta_of(d, l);
            cplx g1 = 1.0, g2 = 1.0;
            for (int q = 0; q < 3; ++q) {
                g1 *= complex_gamma((double(b[q]) + s1[i] - mu[q]) / 2.0);
                g2 *= complex_gamma((double(e[q]) + s2[i] + mu[q]) / 2.0);
            }
            N1[l][i] = g1;
            N2[l][i] = g2;
        }
    }

    std::vector<std::vector<cplx>> rows_full(N, std::vector<cplx>(n)), rows_inner(N, std::vector<cplx>(n));
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < static_cast<long>(N); ++i) {
        std::vector<cplx> acc(n), acc_in(n), rg(kmax + 1), comp(n);
        for (size_t j = 0; j < N; ++j) {
            const cplx S = s1[i] + s2[j];
            cplx r0 = complex_rgamma(S / 2.0), r1 = complex_rgamma((S + 1.0) / 2.0);
            for (int k = 0; k <= kmax; ++k) {
                if (k % 2 == 0) {
                    rg[k] = r0;
                    r0 /= (S + double(k)) / 2.0;
                } else {
                    rg[k] = r1;
                    r1 /= (S + double(k)) / 2.0;
                }
            }
            std::fill(comp.begin(), comp.end(), cplx(0));
            for (const auto& t : terms) {
                const cplx v = N1[t.l1][i] * N2[t.l2][j] * rg[t.k];
                for (const auto& [idx, coef] : t.uses) comp[idx] += coef * v;
            }
            for (int q = 0; q < n; ++q) {
                const cplx v = P2[j] * comp[q];
                acc[q] += v;
                if (a.inner[j]) acc_in[q] += v;
            }
        }
        for (int q = 0; q < n; ++q) {
            rows_full[i][q] = P1[i] * acc[q];
            rows_inner[i][q] = a.inner[i] ? P1[i] * acc_in[q] : cplx(0);
        }
    }
    StarPass out;
    out.full.resize(n);
    out.inner.resize(n);
    std::vector<cplx> col(N);
    for (int q = 0; q < n; ++q) {
        for (size_t i = 0; i < N; ++i) col[i] = rows_full[i][q];
        out.full[q] = kNorm * pairwise_sum(col, 0, N, cplx(0));
        for (size_t i = 0; i < N; ++i) col[i] = rows_inner[i][q];
        out.inner[q] = kNorm * pairwise_sum(col, 0, N, cplx(0));
    }
    out.nodes = static_cast<long>(N * N);
    return out;
}

WStarResult w_star_impl(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c, bool parallel) {
    if (d < 0) throw std::invalid_argument("w_star: negative weight");
    if (y1 <= 0 || y2 <= 0) throw std::domain_error("w_star: y must be positive");
    check_contour(d, mu, c);
    double T0 = auto_T(mu, c);
    WStarResult r;
    r.d = d;
    r.value = CVec(d);
    r.error.assign(2 * d + 1, 0.0);
    for (int it = 0;; ++it) {
        const double T = c.adaptive ? 2 * T0 : T0;
        const StarPass p = w_star_pass(d, y1, y2, mu, c, T, parallel);
        r.nodes += p.nodes;
        r.T = T;
        double scale = 0, diff = 0;
        for (int q = 0; q <= 2 * d; ++q) {
            r.value.data()[q] = p.full[q];
            r.error[q] = std::abs(p.full[q] - p.inner[q]);
            scale = std::max(scale, std::abs(p.full[q]));
            diff = std::max(diff, r.error[q]);
        }
        if (!c.adaptive || diff <= 0.1 * c.target * std::max(scale, 1e-300)) break;
        if (it >= c.max_doublings)
            throw ConvergenceError("w_star: truncation did not converge (change " + std::to_string(diff / scale) + ")");
        T0 *= 2;
    }
    return r;
}

// ---- one-dimensional pieces for the Jacquet oracles ----

// Wynn epsilon on partial sums; returns the limit and a change estimate
std::pair<cplx, double> wynn(const std::vector<cplx>& S) {
    const size_t n = S.size();
    if (n < 3) return {S.back(), n > 1 ? std::abs(S[n - 1] - S[n - 2]) : 0.0};
    std::vector<cplx> prev(n + 1, cplx(0)), cur(S.begin(), S.end());
    cplx best = S.back(), last_even = S.back();
    double err = std::abs(S[n - 1] - S[n - 2]);
    for (size_t col = 1; col < n; ++col) {
        std::vector<cplx> next(n - col);
        bool ok = true;
        for (size_t k = 0; k + col < n; ++k) {
            const cplx diff = cur[k + 1] - cur[k];
            if (std::abs(diff) < 1e-300) {
                ok = false;
                break;
            }
            next[k] = prev[k + 1] + 1.0 / diff;
        }
        if (!ok) break;
        prev = cur;
        cur = next;
        if (col % 2 == 0) {
            const cplx est = cur.back();
            err = std::abs(est - last_even);
            last_even = est;
            best = est;
        }
    }
    return {best, err};
}

// int_0^inf f(p + sgn*x) dx with x = exp(t - exp(-t))
template <class F>
Vec de_tail(F&& f, double p, int sgn, double tmax, double h, int dim, long& evals) {
    Vec acc = Vec::Zero(dim);
    for (double t = -4.0; t <= tmax + 1e-12; t += h) {
        const double x = std::exp(t - std::exp(-t));
        const double dx = x * (1.0 + std::exp(-t));
        acc += (h * dx) * f(p + sgn * x);
        ++evals;
    }
    return acc;
}

template <class F>
Vec gl_interval(F&& f, double lo, double hi, int nodes, int dim, long& evals) {
    const GaussRule& g = gauss_rule(nodes);
    Vec acc = Vec::Zero(dim);
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    for (int k = 0; k < nodes; ++k) acc += (r * g.w[k]) * f(c + r * g.x[k]);
    evals += nodes;
    return acc;
}

// graded panels from both ends of [lo, hi]
template <class F>
Vec gl_graded(F&& f, double lo, double hi, int nodes, int dim, long& evals) {
    Vec acc = Vec::Zero(dim);
    if (hi <= lo) return acc;
    const double mid = 0.5 * (lo + hi);
    for (int side = 0; side < 2; ++side) {
        double w = 0.5, a = side == 0 ? lo : hi;
        while (true) {
            const double b = side == 0 ? std::min(a + w, mid) : std::max(a - w, mid);
            acc += side == 0 ? gl_interval(f, a, b, nodes, dim, evals) : gl_interval(f, b, a, nodes, dim, evals);
            if (b == mid) break;
            a = b;
            w *= 2;
        }
    }
    return acc;
}

// int_R f(x) e(-nu x) dx, by half periods and Wynn extrapolation on each side
template <class F>
Vec oscillatory_line(F&& f, double nu, const OracleOptions& o, int dim, long& evals, double& xerr) {
    if (nu == 0.0) {
        return de_tail(f, 0.0, 1, 12.0, o.de_step, dim, evals) + de_tail(f, 0.0, -1, 12.0, o.de_step, dim, evals);
    }
    const double h = 1.0 / (2.0 * std::abs(nu));
    const int q = std::max(1, static_cast<int>(std::ceil(h / o.inner_panel)));
    auto g = [&](double x) -> Vec { return f(x) * std::exp(cplx(0, -2.0 * kPi * nu * x)); };
    Vec total = Vec::Zero(dim);
    for (int sgn : {1, -1}) {
        std::vector<Vec> partial;
        Vec run = Vec::Zero(dim);
        for (int k = 0; k < o.half_periods; ++k) {
            for (int p = 0; p < q; ++p) {
                const double a = sgn * (k * h + p * h / q), b = sgn * (k * h + (p + 1) * h / q);
                run += sgn > 0 ? gl_interval(g, a, b, o.nodes, dim, evals) : gl_interval(g, b, a, o.nodes, dim, evals);
            }
            partial.push_back(run);
        }
        for (int c = 0; c < dim; ++c) {
            std::vector<cplx> S(partial.size());
            for (size_t k = 0; k < partial.size(); ++k) S[k] = partial[k](c);
            const auto [lim, e] = wynn(S);
            total(c) += lim;
            xerr = std::max(xerr, e);
        }
    }
    return total;
}

Vec flatten(const CMat& M) {
    Vec v(M.data().size());
    for (size_t i = 0; i < M.data().size(); ++i) v(i) = M.data()[i];
    return v;
}

}  // namespace

EvalResult WStarResult::component(int mp) const { return {value(mp), error.at(mp + d), nodes}; }

cplx lambda_alpha(const std::array<int, 3>& alpha, const SpectralParameter& mu) {
    return pi_pow(-1.5 + mu.mu3 - mu.mu1) * complex_gamma((1.0 + alpha[0] + mu.mu1 - mu.mu2) / 2.0) *
           complex_gamma((1.0 + alpha[1] + mu.mu1 - mu.mu3) / 2.0) * complex_gamma((1.0 + alpha[2] + mu.mu2 - mu.mu3) / 2.0);
}

cplx lambda_star(int d, const SpectralParameter& mu) {
    if (d < 2) throw std::invalid_argument("lambda_star needs d >= 2");
    const double sign = d % 2 == 0 ? 1.0 : -1.0;
    return sign * pi_pow(-1.5 + mu.mu3 - mu.mu1) * std::tgamma(double(d)) * complex_gamma((1.0 + mu.mu1 - mu.mu3) / 2.0) *
           complex_gamma((2.0 + mu.mu1 - mu.mu3) / 2.0);
}

cplx g_kernel(int d, const std::array<int, 3>& beta, const std::array<int, 3>& eta, const std::array<cplx, 2>& s,
              const SpectralParameter& mu) {
    std::vector<cplx> num;
    int sum = 0;
    for (int i = 0; i < 3; ++i) {
        num.push_back((double(beta[i]) + s[0] - mu[i]) / 2.0);
        num.push_back((double(eta[i]) + s[1] + mu[i]) / 2.0);
        sum += beta[i] + eta[i];
    }
    return gamma_ratio(num, {(s[0] + s[1] + double(sum - 2 * d)) / 2.0});
}

cplx g_tilde(int d, int l1, int l2, const std::array<cplx, 2>& s, const SpectralParameter& mu) {
    return g_kernel(d, beta_of(d, l1), eta_of(d, l2), s, mu);
}

cplx g_vector_component(int d, int mp, const std::array<cplx, 2>& s, const SpectralParameter& mu) {
    if (std::abs(mp) > d) throw IndexError("g_vector_component: |m'| > d");
    const int m = std::abs(mp), eps = mp < 0 ? -1 : 1;
    cplx acc = 0.0;
    for (int l = 0; l <= m; ++l)
        acc += ((l % 2 == 0 || eps > 0) ? 1.0 : -1.0) * binom(m, l) * g_tilde(d, d - m, l, s, mu);
    return std::sqrt(binom(2 * d, d + m)) * acc;
}

CVec g_vector_mellin(int d, const std::array<cplx, 2>& s, const SpectralParameter& mu) {
    CVec v(d);
    for (int mp = -d; mp <= d; ++mp) v(mp) = g_vector_component(d, mp, s, mu);
    return v;
}

std::array<double, 2> rightmost_poles(int d, const SpectralParameter& mu) {
    std::array<double, 2> r{-1e300, -1e300};
    for (int l = 0; l <= d; ++l) {
        const Triple b = beta_of(d, l), e = eta_of(d, l);
        for (int i = 0; i < 3; ++i) {
            r[0] = std::max(r[0], (mu[i] - double(b[i])).real());
            r[1] = std::max(r[1], (-mu[i] - double(e[i])).real());
        }
    }
    return r;
}

ContourSpec default_contour(int d, const SpectralParameter& mu) {
    const auto p = rightmost_poles(d, mu);
    ContourSpec c;
    c.s1 = std::max(1.0, p[0] + 0.5);
    c.s2 = std::max(1.0, p[1] + 0.5);
    return c;
}

void check_contour(int d, const SpectralParameter& mu, const ContourSpec& c) {
    const auto p = rightmost_poles(d, mu);
    if (!(c.s1 > p[0] + 1e-9) || !(c.s2 > p[1] + 1e-9))
        throw ContourError("contour (" + std::to_string(c.s1) + ", " + std::to_string(c.s2) +
                           ") is not to the right of the poles at (" + std::to_string(p[0]) + ", " +
                           std::to_string(p[1]) + ")");
    if (c.panel_width <= 0 || c.nodes_per_panel < 2) throw std::invalid_argument("contour: bad panel layout");
}

WStarResult w_star(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c) {
    return w_star_impl(d, y1, y2, mu, c, true);
}

WStarResult w_star(int d, double y1, double y2, const SpectralParameter& mu) {
    return w_star(d, y1, y2, mu, default_contour(d, mu));
}

WStarResult w_star_serial(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c) {
    return w_star_impl(d, y1, y2, mu, c, false);
}

std::vector<WStarResult> w_star_grid(int d, const std::vector<std::array<double, 2>>& ys, const SpectralParameter& mu,
                                     const ContourSpec& c, bool parallel) {
    std::vector<WStarResult> out(ys.size());
    check_contour(d, mu, c);
    std::vector<std::string> errors(ys.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < static_cast<long>(ys.size()); ++i) {
        try {
            out[i] = w_star_impl(d, ys[i][0], ys[i][1], mu, c, false);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw ConvergenceError("w_star_grid: " + e);
    return out;
}

EvalResult mellin_barnes_2d(const MellinKernel& F, double y1, double y2, const ContourSpec& c) {
    const double T = c.T > 0 ? std::ceil(c.T / c.panel_width) * c.panel_width : 30.0;
    const AxisNodes a = axis_nodes(T, c.panel_width, c.nodes_per_panel);
    const size_t N = a.tau.size();
    std::vector<cplx> P1(N), P2(N), s1(N), s2(N);
    for (size_t i = 0; i < N; ++i) {
        s1[i] = cplx(c.s1, a.tau[i]);
        s2[i] = cplx(c.s2, a.tau[i]);
        P1[i] = a.w[i] * std::pow(kPi * y1, 1.0 - s1[i]);
        P2[i] = a.w[i] * std::pow(kPi * y2, 1.0 - s2[i]);
    }
    std::vector<cplx> full(N), inner(N);
    for (size_t i = 0; i < N; ++i) {
        cplx acc = 0, acc_in = 0;
        for (size_t j = 0; j < N; ++j) {
            const cplx v = P2[j] * F({s1[i], s2[j]});
            acc += v;
            if (a.inner[j]) acc_in += v;
        }
        full[i] = P1[i] * acc;
        inner[i] = a.inner[i] ? P1[i] * acc_in : cplx(0);
    }
    EvalResult r;
    r.value = kNorm * pairwise_sum(full, 0, N, cplx(0));
    r.error = std::abs(r.value - kNorm * pairwise_sum(inner, 0, N, cplx(0)));
    r.nodes = static_cast<long>(N * N);
    return r;
}

CMat jacquet_integrand(int d, const SpectralParameter& mu, double x1, double x2, double x3) {
    // w_l u in closed form: Gram-Schmidt cancels badly once |x| ~ 1e5
    const double A = 1.0 + x2 * x2 + x3 * x3, z = x3 - x1 * x2, B = 1.0 + x1 * x1 + z * z;
    const double sa = std::sqrt(A), sb = std::sqrt(B);
    const std::array<double, 3> q1{z / sb, x1 / sb, -1.0 / sb}, q3{-1.0 / sa, -x2 / sa, -x3 / sa};
    const std::array<double, 3> q2{q3[1] * q1[2] - q3[2] * q1[1], q3[2] * q1[0] - q3[0] * q1[2],
                                   q3[0] * q1[1] - q3[1] * q1[0]};
    const cplx p = power_function(mu, sb / A, sa / B);
    if (d == 0) return CMat(0, p);
    CMat D = wigner_D(d, RotationMatrix{q1, q2, q3});
    for (auto& e : D.data()) e *= p;
    return D;
}

OracleResult jacquet_full_matrix(int d, double y1, double y2, const SpectralParameter& mu, const CharacterParams& psi,
                                 const OracleOptions& o) {
    if (y1 <= 0 || y2 <= 0) throw std::domain_error("jacquet oracle: y must be positive");
    const double g12 = (mu.mu1 - mu.mu2).real(), g23 = (mu.mu2 - mu.mu3).real();
    if (g12 <= 0 || g23 <= 0)
        throw std::domain_error("jacquet oracle: needs Re(mu1-mu2) > 0 and Re(mu2-mu3) > 0 for absolute convergence");
    const int n = 2 * d + 1, dim = n * n;
    const double nu1 = psi.n1 * y1, nu2 = psi.n2 * y2;
    // |I| ~ |x3|^{-(2 + Re(mu1-mu3))} along x3
    const double p = 2.0 + (mu.mu1 - mu.mu3).real();
    const double tmax = std::min(20.0, 27.7 / (p - 1.0) + 1.0);
    long evals = 0;
    double xerr = 0;
    auto inner = [&](double x1, double x2) -> Vec {
        auto f = [&](double x3) -> Vec { return flatten(jacquet_integrand(d, mu, x1, x2, x3)); };
        const double lo = std::min(0.0, x1 * x2), hi = std::max(0.0, x1 * x2);
        return de_tail(f, hi, 1, tmax, o.de_step, dim, evals) + de_tail(f, lo, -1, tmax, o.de_step, dim, evals) +
               gl_graded(f, lo, hi, 10, dim, evals);
    };
    auto middle = [&](double x2) -> Vec {
        auto f = [&](double x1) -> Vec { return inner(x1, x2); };
        return oscillatory_line(f, nu1, o, dim, evals, xerr);
    };
    const Vec J = oscillatory_line(middle, nu2, o, dim, evals, xerr);
    const cplx pref = std::pow(y1, 1.0 - mu.mu1) * std::pow(y2, 1.0 + mu.mu3);
    OracleResult r;
    r.value = CMat(d);
    for (int i = 0; i < dim; ++i) r.value.data()[i] = pref * J(i);
    r.evaluations = evals;
    r.extrapolation_error = std::abs(pref) * xerr;
    return r;
}

CVec jacquet_full_oracle(int d, double y1, double y2, const SpectralParameter& mu, const CharacterParams& psi,
                         const CVec& f, const OracleOptions& o) {
    if (f.d() != d) throw std::invalid_argument("jacquet_full_oracle: f has the wrong dimension");
    return f * jacquet_full_matrix(d, y1, y2, mu, psi, o).value;
}

SpectralParameter minimal_line_mu(int d, double t) {
    const double h = (d - 1) / 2.0;
    return {cplx(h, t), cplx(-h, t), cplx(0, -2 * t)};
}

EvalResult jacquet_central_oracle(int d, double y1, double y2, const SpectralParameter& mu, int row,
                                  const OracleOptions& o) {
    if (d < 2) throw std::invalid_argument("jacquet_central_oracle needs d >= 2");
    if (std::abs(row) != d) throw std::invalid_argument("jacquet_central_oracle: row must be +-d");
    if (std::abs(mu.mu1 - mu.mu2 - double(d - 1)) > 1e-12)
        throw std::domain_error("jacquet_central_oracle needs mu1 - mu2 = d - 1");
    if (y1 <= 0 || y2 <= 0) throw std::domain_error("jacquet oracle: y must be positive");
    EvalResult r;
    const double wnorm = std::pow(2 * kPi, d) / std::tgamma(double(d));
    const cplx e31 = (-1.0 + mu.mu3 - mu.mu1) / 2.0, e32 = (-1.0 + mu.mu3 - mu.mu2) / 2.0;
    const double panel = std::min(o.inner_panel, 0.5 / y1);
    long evals = 0;
    double xerr = 0;
    auto inner = [&](double u2) -> Vec {
        const double r2 = std::sqrt(1.0 + u2 * u2);
        const double U = r2 * (45.0 + 2.0 * d) / (2.0 * kPi * y1);
        const double freq = y1 * u2 / r2;
        auto f = [&](double u3) -> Vec {
            const double r3 = std::sqrt(1.0 + u3 * u3);
            const double Y = y1 * r3 / r2;
            // row +d meets the pole of 1/Gamma((1 - d + mu1 - mu2)/2)
            const cplx W = row == -d ? cplx(wnorm * std::pow(Y, d - 1) * std::exp(-2.0 * kPi * Y))
                                     : classical_whittaker(d, row, Y, mu.mu1 - mu.mu2);
            Vec v(1);
            v(0) = std::pow(1.0 + u3 * u3, e31) * W * wigner_small_d(d, row, 0, -u3 / r3) *
                   std::exp(cplx(0, -2.0 * kPi * freq * u3));
            return v;
        };
        const int panels = std::max(2, static_cast<int>(std::ceil(2 * U / panel)));
        Vec acc = Vec::Zero(1);
        for (int p = 0; p < panels; ++p) acc += gl_interval(f, -U + 2 * U * p / panels, -U + 2 * U * (p + 1) / panels, 10, 1, evals);
        return acc * std::pow(1.0 + u2 * u2, e32);
    };
    const Vec J = oscillatory_line(inner, y2, o, 1, evals, xerr);
    const double sign = d % 2 == 0 ? 1.0 : -1.0;
    const cplx pref = sign * std::pow(y1, 1.0 - mu.mu1) * std::pow(y2, 1.0 + mu.mu3);
    r.value = pref * J(0);
    r.error = std::abs(pref) * xerr;
    r.nodes = evals;
    return r;
}

MellinResidual mellin_pde_residual(int which, int d, int mp, const std::array<cplx, 2>& s, const SpectralParameter& mu) {
    if (which != 1 && which != 2) throw std::invalid_argument("mellin_pde_residual: which must be 1 or 2");
    if (std::abs(mp) > d) throw IndexError("mellin_pde_residual: |m'| > d");
    auto G = [&](int q, double a, double b) -> cplx {
        if (std::abs(q) > d) return 0.0;
        return g_vector_component(d, q, {s[0] + a, s[1] + b}, mu);
    };
    const double cp = std::sqrt(double(d * (d + 1) - mp * (mp + 1)));
    const double cm = std::sqrt(double(d * (d + 1) - mp * (mp - 1)));
    const cplx a1 = 1.0 - s[0], a2 = 1.0 - s[1];
    const cplx l1 = 1.0 - (mu.mu1 * mu.mu1 + mu.mu2 * mu.mu2 + mu.mu3 * mu.mu3) / 2.0;
    const cplx l2 = mu.mu1 * mu.mu2 * mu.mu3;
    std::vector<cplx> terms;
    if (which == 1) {
        const cplx P = -(a1 * a1 - a1) - (a2 * a2 - a2) + a1 * a2;
        terms = {(P - l1) * G(mp, 0, 0), 4.0 * G(mp, 2, 0), 4.0 * G(mp, 0, 2), -2.0 * double(mp) * G(mp, 0, 1),
                 -cp * G(mp + 1, 1, 0), -cm * G(mp - 1, 1, 0)};
    } else {
        const cplx Q = -(a1 * a1 - a1) * a2 + a1 * (a2 * a2 - a2) + (a1 * a1 - a1) - (a2 * a2 - a2);
        terms = {(Q - l2) * G(mp, 0, 0),
                 -4.0 * s[1] * G(mp, 2, 0),
                 4.0 * s[0] * G(mp, 0, 2),
                 -2.0 * double(mp) * s[0] * G(mp, 0, 1),
                 cp * (s[1] * G(mp + 1, 1, 0) - 2.0 * G(mp + 1, 1, 1)),
                 cm * (s[1] * G(mp - 1, 1, 0) + 2.0 * G(mp - 1, 1, 1))};
    }
    MellinResidual r;
    for (const auto& t : terms) {
        r.residual += t;
        r.scale = std::max(r.scale, std::abs(t));
    }
    return r;
}

LadderReport ladder_check(int d, int mp, int sign, const std::vector<std::array<double, 2>>& ys,
                          const SpectralParameter& mu) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ladder_check: sign must be +-1");
    if (std::abs(mp) > d) throw IndexError("ladder_check: |m'| > d");
    LadderReport rep;
    rep.coefficient = std::sqrt(double(d * (d + 1) - mp * (mp + sign)));
    const cplx l1 = 1.0 - (mu.mu1 * mu.mu1 + mu.mu2 * mu.mu2 + mu.mu3 * mu.mu3) / 2.0;
    const cplx l2 = mu.mu1 * mu.mu2 * mu.mu3;
    // Mellin images of (Delta_1 - lambda_1) phi and (Delta_2 - lambda_2) phi
    auto G = [&](cplx s1, cplx s2) { return g_vector_component(d, mp, {s1, s2}, mu); };
    auto E1 = [&](cplx s1, cplx s2) {
        const cplx a1 = 1.0 - s1, a2 = 1.0 - s2;
        const cplx P = -(a1 * a1 - a1) - (a2 * a2 - a2) + a1 * a2;
        return (P - l1) * G(s1, s2) + 4.0 * G(s1 + 2.0, s2) + 4.0 * G(s1, s2 + 2.0);
    };
    auto E2 = [&](cplx s1, cplx s2) {
        const cplx a1 = 1.0 - s1, a2 = 1.0 - s2;
        const cplx Q = -(a1 * a1 - a1) * a2 + a1 * (a2 * a2 - a2) + (a1 * a1 - a1) - (a2 * a2 - a2);
        return (Q - l2) * G(s1, s2) - 4.0 * s2 * G(s1 + 2.0, s2) + 4.0 * s1 * G(s1, s2 + 2.0);
    };
    // 4 pi^2 y1 y2 S^{+-} phi, shifted back by (1, 1), over 4
    const double sg = sign;
    MellinKernel K = [&](const S2& s) -> cplx {
        const cplx s1 = s[0] - 1.0, s2 = s[1] - 1.0;
        const cplx k = s2 * E1(s1, s2) + 2.0 * sg * E1(s1, s2 + 1.0) + E2(s1, s2) +
                       2.0 * double(mp) * (-(s1 + s2) * G(s1, s2 + 1.0) - 2.0 * sg * G(s1, s2 + 2.0));
        return k / 4.0;
    };
    ContourSpec c = default_contour(d, mu);
    c.s1 += 1.0;
    c.s2 += 1.0;
    c.T = 16.0;
    c.nodes_per_panel = 10;
    const bool edge = std::abs(mp + sign) > d;
    for (const auto& y : ys) {
        const EvalResult lhs = mellin_barnes_2d(K, y[0], y[1], c);
        const WStarResult phi = w_star(d, y[0], y[1], mu);
        const cplx rhs = edge ? cplx(0.0) : sg * rep.coefficient * phi.value(mp + sign);
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs.value - rhs));
        rep.scale = std::max({rep.scale, std::abs(rhs), std::abs(phi.value(mp))});
    }
    return rep;
}

BarnesResult barnes_second_lemma_check(cplx a, cplx b, cplx c, cplx d, cplx e, double sigma, double T) {
    const double left = std::max({-a.real(), -b.real(), -c.real()});
    const double right = std::min(d.real(), e.real());
    if (!(left < right)) throw ContourError("barnes_second_lemma_check: no contour separates the pole families");
    if (std::isnan(sigma)) sigma = 0.5 * (left + right);
    if (!(sigma > left && sigma < right)) throw ContourError("barnes_second_lemma_check: sigma does not separate the poles");
    const cplx f = a + b + c + d + e;
    const AxisNodes ax = axis_nodes(std::ceil(T), 0.5, 20);
    std::vector<cplx> vals(ax.tau.size());
    for (size_t i = 0; i < ax.tau.size(); ++i) {
        const cplx s(sigma, ax.tau[i]);
        vals[i] = ax.w[i] * complex_gamma(a + s) * complex_gamma(b + s) * complex_gamma(c + s) * complex_gamma(d - s) *
                  complex_gamma(e - s) * complex_rgamma(f + s);
    }
    BarnesResult r;
    r.sigma = sigma;
    r.lhs = pairwise_sum(vals, 0, vals.size(), cplx(0)) / (2.0 * kPi);
    r.rhs = complex_gamma(a + e) * complex_gamma(b + e) * complex_gamma(c + e) * complex_gamma(a + d) *
            complex_gamma(b + d) * complex_gamma(c + d) * complex_rgamma(f - a) * complex_rgamma(f - b) *
            complex_rgamma(f - c);
    r.residual = std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.rhs));
    return r;
}

GrowthReport bad_whittaker_growth(int d, double y1, double y2_small, double y2_large, double eps) {
    if (d < 2) throw std::invalid_argument("bad_whittaker_growth needs d >= 2");
    const SpectralParameter mu(d - 1.0, 0.0, 1.0 - d);
    ContourSpec c = default_contour(d, mu);
    c.s1 = eps;
    c.s2 = d - 1 + eps;
    const double small = std::abs(w_star(d, y1, y2_small, mu, c).value(0));
    const double large = std::abs(w_star(d, y1, y2_large, mu, c).value(0));
    const double half = std::abs(w_star(d, y1, y2_small / 2, mu, c).value(0));
    GrowthReport g;
    g.ratio = small / large;
    g.lower_bound = std::pow(y2_large / y2_small, d - 1 - eps);
    g.exponent = std::log(half / small) / std::log(2.0);
    return g;
}

Eigen::VectorXd whittaker_row_gram_singular_values(const SpectralParameter& mu,
                                                   const std::vector<std::array<double, 2>>& ys,
                                                   const OracleOptions& o) {
    Eigen::MatrixXcd V(3, 3 * ys.size());
    for (size_t k = 0; k < ys.size(); ++k) {
        const CMat W = jacquet_full_matrix(1, ys[k][0], ys[k][1], mu, {}, o).value;
        for (int r = -1; r <= 1; ++r)
            for (int m = -1; m <= 1; ++m) V(r + 1, 3 * k + (m + 1)) = W(r, m);
    }
    const Eigen::MatrixXcd gram = V * V.adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
    return svd.singularValues();
}

}  // namespace gl3
