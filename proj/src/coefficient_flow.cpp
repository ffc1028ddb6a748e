#include "gl3/coefficient_flow.hpp"

#include "gl3/clebsch_gordan.hpp"
#include "gl3/gamma.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gl3 {

namespace {

void axpy(CVec& y, cplx s, const CVec& x) {
    if (x.d() != y.d()) throw std::invalid_argument("vector dimension mismatch");
    for (size_t i = 0; i < y.data().size(); ++i) y.data()[i] += s * x.data()[i];
}

CVec scaled(cplx s, CVec x) {
    for (auto& e : x.data()) e *= s;
    return x;
}

double sqrt_nonneg(long long p) { return p > 0 ? std::sqrt(double(p)) : 0.0; }

double norm(const CVec& v) {
    double s = 0;
    for (auto& e : v.data()) s += std::norm(e);
    return std::sqrt(s);
}

Eigen::VectorXcd to_eigen(const CVec& v) {
    Eigen::VectorXcd r(v.size());
    for (int i = 0; i < v.size(); ++i) r(i) = v.data()[i];
    return r;
}

CVec from_eigen(int d, const Eigen::VectorXcd& e) {
    CVec v(d);
    for (int i = 0; i < v.size(); ++i) v.data()[i] = e(i);
    return v;
}

}  // namespace

CVec bu(int d, int j, int eps) {
    if (std::abs(j) > d) return CVec(d);
    return basis_u(d, j, eps);
}

CVec y_action(int a, const SpectralParameter& mu, const CVec& f) {
    const int d = f.d();
    if (a < -2 || a > 2) throw std::invalid_argument("y_action: a must be in [-2,2]");
    if (d + a < 0) throw std::invalid_argument("y_action: d + a must be nonnegative");
    const int t = d + a;
    const cplx shift0 = std::sqrt(6.0) * (mu.mu3 - 1.0) - cgb_vector(d)[a + 2].to_double();
    const cplx m12 = mu.mu1 - mu.mu2 + 1.0;
    CVec out(t);
    for (int j = -d; j <= d; ++j) {
        if (f(j) == cplx(0.0)) continue;
        const cplx coef[3] = {cg_value(d, 2, a, j, -2) * (m12 - double(j)), cg_value(d, 2, a, j, 0) * shift0,
                              cg_value(d, 2, a, j, 2) * (m12 + double(j))};
        for (int s = 0; s < 3; ++s) {
            int target = j + 2 * (s - 1);
            if (std::abs(target) > t) {
                if (coef[s] != cplx(0.0)) throw std::logic_error("y_action: nonzero coefficient outside the target range");
                continue;
            }
            out(target) += coef[s] * f(j);
        }
    }
    return out;
}

Eigen::MatrixXcd y_matrix(int a, int d, const SpectralParameter& mu) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * (d + a) + 1, 2 * d + 1);
    for (int j = -d; j <= d; ++j) M.col(j + d) = to_eigen(y_action(a, mu, basis_v(d, j)));
    return M;
}

LinearInMu y_coefficient_exact(int a, int d, int j, int shift) {
    if (std::abs(j) > d) throw IndexError("y_coefficient_exact: j out of range");
    LinearInMu r;
    SurdSum c = SurdSum(cg(d, 2, a, j, shift));
    if (shift == 0) {
        SurdSum s6 = SurdSum(SurdScalar(Rational(1), Rational(6)));
        r.c0 = c * (SurdSum(0) - s6 - SurdSum(cgb_vector(d)[a + 2]));
        r.c3 = c * s6;
        return r;
    }
    if (std::abs(shift) != 2) throw std::invalid_argument("shift must be -2, 0 or 2");
    r.c0 = c * SurdSum(shift > 0 ? 1 + j : 1 - j);
    r.c12 = c;
    return r;
}

CVec adjoint_y(int a, int d, const SpectralParameter& mu, const CVec& f) {
    if (f.d() != d + a) throw std::invalid_argument("adjoint_y: argument must have dimension d + a");
    double s = -((a % 2 == 0) ? 1.0 : -1.0) * std::sqrt(double(2 * d + 2 * a + 1) / double(2 * d + 1));
    return scaled(s, y_action(-a, mu, f));
}

double y_action_pointwise_check(int a, const SpectralParameter& mu, const CVec& f, const IwasawaPoint& p) {
    const int d = f.d();
    const int col = (a % 2 == 0) ? 0 : 1;
    if (d + a < col) throw std::invalid_argument("y_action_pointwise_check: target dimension too small");
    GroupFunction F = [f, mu, d](const IwasawaCoords<Jet>& c) {
        auto D = wigner_D_generic<Jet>(d, c.k);
        Jet s(0.0);
        for (int m = -d; m <= d; ++m)
            if (f(m) != cplx(0.0)) s += Jet(f(m)) * D(m, 0);
        return power_function(mu, c.y1, c.y2) * s;
    };
    // X_j F lies in the span of D^{d+b}_{., col}, |b| <= 2
    std::vector<int> blocks;
    int unknowns = 0;
    for (int b = -2; b <= 2; ++b)
        if (d + b >= col) {
            blocks.push_back(d + b);
            unknowns += 2 * (d + b) + 1;
        }
    const int samples = 2 * unknowns + 10;
    std::mt19937_64 rng(977);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    Eigen::MatrixXcd A(samples, unknowns);
    Eigen::VectorXcd rhs(samples);
    for (int s = 0; s < samples; ++s) {
        IwasawaPoint q = p;
        q.alpha = ang(rng);
        q.beta = ang(rng) / 2.0;
        q.gamma = ang(rng);
        rhs(s) = x_operator_flow(col, F, q);
        auto Ds = wigner_D_all(d + 2, mat_cast<cplx>(q.k()));
        int c = 0;
        for (int e : blocks)
            for (int m = -e; m <= e; ++m) A(s, c++) = Ds[e](m, col);
    }
    Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(rhs);
    int off = 0;
    for (int e : blocks) {
        if (e == d + a) break;
        off += 2 * e + 1;
    }
    const double scale_cg = col == 0 ? cg_value(d, 2, a, 0, 0) : cg_value(d, 2, a, 0, 1);
    if (scale_cg == 0.0) throw std::logic_error("y_action_pointwise_check: vanishing normalization");
    const cplx pw = power_function(mu, p.y1, p.y2);
    CVec direct = y_action(a, mu, f);
    double err = 0.0;
    for (int m = -(d + a); m <= d + a; ++m) {
        cplx v = sol(off + m + d + a) / (pw * scale_cg);
        err = std::max(err, std::abs(v - direct(m)));
    }
    return err;
}

namespace {

struct RCoefs {
    double c1, c3;
    cplx c2;
};

RCoefs r_coefs(int variant, int d, const SpectralParameter& mu, int j) {
    const double D = d;
    if (variant == 1)
        return {std::sqrt(D * (D + 2) * (D + 2) * (2 * D + 1) * (2 * D + 1) * (2 * D + 5)),
                -std::sqrt(D * D * (D + 2) * (2 * D - 1) * (2 * D + 1) * (2 * D + 3)),
                2.0 * std::sqrt(6 * D * (D + 1) * (D + 2) * (2 * D + 1)) * (D - 1 - 2.0 * j - 2.0 * mu.mu3)};
    if (variant == 2)
        return {std::sqrt((D + 1) * (D + 2) * (D + 2) * (D + 3) * (2 * D + 1) * (2 * D + 7)),
                -std::sqrt(D * (D + 1) * (D + 1) * (D + 2) * (2 * D - 1) * (2 * D + 1)),
                2.0 * std::sqrt(6 * (D + 1) * (D + 2) * (2 * D + 1) * (2 * D + 3)) * (2 * D + 1 - 2.0 * j - 2.0 * mu.mu3)};
    throw std::invalid_argument("raising_R: variant must be 1 or 2");
}

}  // namespace

CVec raising_R(int variant, int d, const SpectralParameter& mu, int j, int eps) {
    if (std::abs(j) > d) throw IndexError("raising_R: j out of range");
    RCoefs c = r_coefs(variant, d, mu, j);
    const int a = variant;
    CVec u = bu(d, j, eps);
    CVec ya = y_action(a, mu, u);
    CVec out = scaled(c.c1, y_action(0, mu, ya));
    axpy(out, c.c2, ya);
    axpy(out, c.c3, y_action(a, mu, y_action(0, mu, u)));
    return out;
}

CVec raising_R_closed(int variant, int d, const SpectralParameter& mu, int j, int eps) {
    const long long D = d, J = j;
    const cplx m12 = mu.mu1 - mu.mu2 + 1.0;
    const cplx P = (mu.mu1 - mu.mu3 + 1.0) * (mu.mu2 - mu.mu3 + 1.0);
    if (variant == 1) {
        CVec out = scaled(8.0 * J * sqrt_nonneg(3 * (D + 1 - J) * (D + 2 - J) * (D + 3 - J) * (D + J)) * (m12 - double(J)),
                          bu(d + 1, j - 2, eps));
        cplx k = -8.0 * J * sqrt_nonneg(3 * (D + 1 - J) * (D + 1 + J)) *
                 (double(D - J - 2) * (double(J + 1) + 3.0 * mu.mu3) - 2.0 * P + 4.0 * double(J + 1));
        axpy(out, k, bu(d + 1, j, eps));
        return out;
    }
    if (variant == 2) {
        CVec out = scaled(-4.0 * J * sqrt_nonneg(6 * (D + 1 - J) * (D + 2 - J) * (D + 3 - J) * (D + 4 - J)) * (m12 - double(J)),
                          bu(d + 2, j - 2, eps));
        cplx k = -4.0 * sqrt_nonneg(6 * (D + 1 - J) * (D + 2 - J) * (D + 1 + J) * (D + 2 + J)) *
                 (double(2 * D - J) * (double(D + 2) - 3.0 * mu.mu3) + 2.0 * P - double(J * (D + 1 - J)));
        axpy(out, k, bu(d + 2, j, eps));
        return out;
    }
    throw std::invalid_argument("raising_R_closed: variant must be 1 or 2");
}

CVec raising_R_adjoint(int variant, int d, const SpectralParameter& mu, int j, int eps) {
    if (std::abs(j) > d) throw IndexError("raising_R_adjoint: j out of range");
    RCoefs c = r_coefs(variant, d, mu, j);
    const int a = variant;
    const SpectralParameter nu = -mu;  // conj of the adjoint moves -conj(mu) to -mu
    CVec v = bu(d + a, j, eps);
    CVec out = scaled(c.c1, adjoint_y(a, d, nu, adjoint_y(0, d + a, nu, v)));
    axpy(out, c.c2, adjoint_y(a, d, nu, v));
    axpy(out, c.c3, adjoint_y(0, d, nu, adjoint_y(a, d, nu, v)));
    return out;
}

CVec raising_R_adjoint_closed(int variant, int d, const SpectralParameter& mu, int j, int eps) {
    const long long D = d, J = j;
    const cplx m12 = mu.mu1 - mu.mu2 - 1.0;
    const cplx P = (mu.mu1 - mu.mu3 + 1.0) * (mu.mu2 - mu.mu3 + 1.0);
    CVec out(d);
    if (variant == 1) {
        axpy(out, -8.0 * sqrt_nonneg(3 * (D + 2 - J) * (D - 1 + J) * (D + J) * (D + 1 + J)) * (m12 + double(J)),
             bu(d, j - 2, eps));
        axpy(out,
             -8.0 * J * sqrt_nonneg(3 * (D + 1 - J) * (D + 1 + J)) *
                 (double(D - J - 2) * (double(J + 1) + 3.0 * mu.mu3) - 2.0 * P + 4.0 * double(J + 1)),
             bu(d, j, eps));
        axpy(out, 8.0 * double(J + 1) * sqrt_nonneg(3 * (D - 1 - J) * (D - J) * (D + 1 - J) * (D + 2 + J)) * (m12 - double(J)),
             bu(d, j + 2, eps));
        return out;
    }
    if (variant == 2) {
        axpy(out, -4.0 * sqrt_nonneg(6 * (D - 1 + J) * (D + J) * (D + 1 + J) * (D + 2 + J)) * (m12 + double(J)),
             bu(d, j - 2, eps));
        axpy(out,
             -4.0 * sqrt_nonneg(6 * (D + 1 - J) * (D + 2 - J) * (D + 1 + J) * (D + 2 + J)) *
                 (double(2 * D - J) * (double(D + 2) - 3.0 * mu.mu3) + 2.0 * P - double(J * (D + 1 - J))),
             bu(d, j, eps));
        axpy(out, -4.0 * double(1 + J) * sqrt_nonneg(6 * (D - 1 - J) * (D - J) * (D + 1 - J) * (D + 2 - J)) * (m12 - double(J)),
             bu(d, j + 2, eps));
        return out;
    }
    throw std::invalid_argument("raising_R_adjoint_closed: variant must be 1 or 2");
}

std::vector<int> v_space_indices(int d, Parity chi, int kappa) {
    std::vector<int> out;
    const int sgn = chi.eps * ((d % 2 == 0) ? 1 : -1);
    for (int m = chi.delta; m <= d; m += 2) {
        if (m < kappa) continue;
        if (m == 0 && sgn != 1) continue;
        out.push_back(m);
    }
    return out;
}

int v_space_dim(int d, Parity chi, int kappa) { return static_cast<int>(v_space_indices(d, chi, kappa).size()); }

int minimal_start(Parity chi, int kappa) {
    if (kappa > 0) return kappa;
    return (chi.delta == 1 || chi.eps == -1) ? 1 : 0;
}

int minimal_index(int d, Parity chi, int kappa) {
    const int d0 = minimal_start(chi, kappa);
    if (kappa == 0 && chi.delta == 0 && (d - d0) % 2 != 0) return 2;
    if (chi.delta == 1 && kappa == 0) return 1;
    return kappa;
}

namespace {

// coordinates of u along the bu basis of V^d; the remainder is returned in leak
std::vector<cplx> coords(const CVec& u, const std::vector<int>& idx, int eps, double* leak) {
    std::vector<cplx> c;
    CVec rest = u;
    for (int m : idx) {
        CVec b = bu(u.d(), m, eps);
        cplx dot = 0.0;
        double nn = 0.0;
        for (int k = -u.d(); k <= u.d(); ++k) {
            dot += u(k) * b(k).real();
            nn += std::norm(b(k));
        }
        c.push_back(dot / nn);
        axpy(rest, -dot / nn, b);
    }
    if (leak) *leak = norm(rest);
    return c;
}

}  // namespace

GramReport gram_recursion_check(int d_max, const SpectralParameter& mu, Parity chi, int kappa) {
    GramReport rep;
    rep.d0 = minimal_start(chi, kappa);
    rep.d_max = d_max;
    if (d_max < rep.d0) throw std::invalid_argument("gram_recursion_check: d_max below the minimal weight");
    const SpectralParameter nu = -mu.conj();
    const int eps = chi.eps;
    std::vector<std::vector<int>> idx(d_max + 1);
    for (int d = rep.d0; d <= d_max; ++d) idx[d] = v_space_indices(d, chi, kappa);
    std::vector<Eigen::MatrixXcd> G(d_max + 1);
    {
        const int d = rep.d0;
        const int jm = minimal_index(d, chi, kappa);
        if (idx[d].size() != 1 || idx[d][0] != jm) throw std::logic_error("gram_recursion_check: V^{d0} is not spanned by bu_min");
        CVec b = bu(d, jm, eps);
        double nn = 0;
        for (auto& e : b.data()) nn += std::norm(e);
        G[d] = Eigen::MatrixXcd::Constant(1, 1, nn);
    }
    for (int d = rep.d0 + 1; d <= d_max; ++d) {
        const int n = static_cast<int>(idx[d].size());
        G[d] = Eigen::MatrixXcd::Zero(n, n);
        if (n == 0) continue;
        std::vector<Eigen::VectorXcd> rows;
        std::vector<cplx> rhs;
        auto unknown = [n](int i, int k) { return i * n + k; };
        for (int a : {1, 2}) {
            const int lo = d - a;
            if (lo < rep.d0 || idx[lo].empty()) continue;
            for (size_t e = 0; e < idx[lo].size(); ++e) {
                double leak = 0;
                auto alpha = coords(y_action(a, mu, bu(lo, idx[lo][e], eps)), idx[d], eps, &leak);
                rep.residual = std::max(rep.residual, leak);
                for (int v = 0; v < n; ++v) {
                    auto beta = coords(adjoint_y(a, lo, nu, bu(d, idx[d][v], eps)), idx[lo], eps, nullptr);
                    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(n * n);
                    for (int i = 0; i < n; ++i) row(unknown(i, v)) += alpha[i];
                    cplx r = 0.0;
                    for (size_t k = 0; k < beta.size(); ++k) r += std::conj(beta[k]) * G[lo](e, k);
                    rows.push_back(row);
                    rhs.push_back(r);
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            double leak = 0;
            auto alpha = coords(y_action(0, mu, bu(d, idx[d][u], eps)), idx[d], eps, &leak);
            rep.residual = std::max(rep.residual, leak);
            for (int v = 0; v < n; ++v) {
                auto beta = coords(adjoint_y(0, d, nu, bu(d, idx[d][v], eps)), idx[d], eps, nullptr);
                Eigen::VectorXcd row = Eigen::VectorXcd::Zero(n * n);
                for (int i = 0; i < n; ++i) row(unknown(i, v)) += alpha[i];
                for (int k = 0; k < n; ++k) row(unknown(u, k)) -= std::conj(beta[k]);
                rows.push_back(row);
                rhs.push_back(0.0);
            }
        }
        Eigen::MatrixXcd A(rows.size(), n * n);
        Eigen::VectorXcd b(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            A.row(r) = rows[r].transpose();
            b(r) = rhs[r];
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
        cod.setThreshold(1e-10);
        if (cod.rank() < n * n) rep.determined = false;
        Eigen::VectorXcd x = cod.solve(b);
        double scale = std::max(1.0, b.norm());
        rep.residual = std::max(rep.residual, (A * x - b).norm() / scale);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) G[d](i, k) = x(unknown(i, k));
    }
    for (int d = rep.d0; d <= d_max; ++d) {
        const int n = static_cast<int>(idx[d].size());
        rep.dims.push_back(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                CVec bi = bu(d, idx[d][i], eps), bk = bu(d, idx[d][k], eps);
                cplx dot = 0.0;
                for (int m = -d; m <= d; ++m) dot += bi(m) * bk(m);
                rep.max_error = std::max(rep.max_error, std::abs(G[d](i, k) - dot));
            }
        rep.gram.push_back(G[d]);
    }
    return rep;
}

namespace {

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& M, double rel_tol) {
    if (M.cols() == 0) return M;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    int r = 0;
    const double smax = s.size() ? s(0) : 0.0;
    while (r < s.size() && s(r) > rel_tol * smax && s(r) > 1e-300) ++r;
    return svd.matrixU().leftCols(r);
}

}  // namespace

SpanReport generate_minimal_span(int d0, Parity chi, int kappa, const SpectralParameter& mu, int d_target) {
    if (d0 != minimal_start(chi, kappa)) throw std::invalid_argument("generate_minimal_span: d0 inconsistent with chi and kappa");
    if (d_target < d0) throw std::invalid_argument("generate_minimal_span: target below d0");
    std::vector<Eigen::MatrixXcd> span(d_target + 1);
    span[d0] = to_eigen(bu(d0, minimal_index(d0, chi, kappa), chi.eps)).normalized();
    const double tol = 1e-10;
    for (int d = d0 + 1; d <= d_target; ++d) {
        std::vector<Eigen::VectorXcd> gens;
        for (int a : {1, 2}) {
            if (d - a < d0) continue;
            const Eigen::MatrixXcd Y = y_matrix(a, d - a, mu);
            for (int c = 0; c < span[d - a].cols(); ++c) gens.push_back(Y * span[d - a].col(c));
        }
        Eigen::MatrixXcd M(2 * d + 1, gens.size());
        for (size_t c = 0; c < gens.size(); ++c) M.col(c) = gens[c];
        Eigen::MatrixXcd B = orthonormal_columns(M, tol);
        const Eigen::MatrixXcd Y0 = y_matrix(0, d, mu);
        for (int it = 0; it <= 2 * d + 1; ++it) {
            Eigen::MatrixXcd ext(2 * d + 1, 2 * B.cols());
            ext << B, Y0 * B;
            Eigen::MatrixXcd nb = orthonormal_columns(ext, tol);
            bool done = nb.cols() == B.cols();
            B = nb;
            if (done) break;
        }
        span[d] = B;
    }
    SpanReport rep;
    rep.basis = span[d_target];
    rep.rank = static_cast<int>(rep.basis.cols());
    rep.expected = v_space_dim(d_target, chi, kappa);
    const auto idx = v_space_indices(d_target, chi, kappa);
    for (int c = 0; c < rep.basis.cols(); ++c) {
        double leak = 0;
        coords(from_eigen(d_target, rep.basis.col(c)), idx, chi.eps, &leak);
        rep.leak = std::max(rep.leak, leak);
    }
    return rep;
}

double duality_check(int a, const SpectralParameter& mu, const CVec& f) {
    const int d = f.d();
    const Mat3<int> g = matmul(v_matrix({-1, -1}), weyl_matrix(Weyl::wl));
    const CMat Dd = to_numeric(wigner_D_exact(d, g));
    const CMat Dda = to_numeric(wigner_D_exact(d + a, g));
    CVec lhs = y_action(a, mu, f * Dd);
    CVec rhs = y_action(a, -weyl_action(mu, Weyl::wl), f) * Dda;
    double e = 0;
    for (int m = -(d + a); m <= d + a; ++m) e = std::max(e, std::abs(lhs(m) + rhs(m)));
    return e;
}

double intertwining_compatibility_check(int a, const SpectralParameter& mu, Weyl w, const CVec& f) {
    const int d = f.d();
    const SpectralParameter muw = weyl_action(mu, w);
    const Weyl winv = weyl_inverse(w);
    CVec lhs = y_action(a, mu, f * t_matrix(d, winv, muw));
    CVec rhs = y_action(a, muw, f) * t_matrix(d + a, winv, muw);
    double e = 0, scale = 0;
    for (int m = -(d + a); m <= d + a; ++m) {
        e = std::max(e, std::abs(lhs(m) - rhs(m)));
        scale = std::max(scale, std::abs(rhs(m)));
    }
    return e / std::max(scale, 1e-300);
}

int multiplicity(int d0, int d) {
    if (d0 < 0 || d < 0) throw std::invalid_argument("multiplicity: negative weight");
    if (d0 == 0) return d % 2 == 0 ? d / 2 + 1 : (d - 1) / 2;
    if (d0 == 1) return (d + 1) / 2;
    return d >= d0 ? (d - d0) / 2 + 1 : 0;
}

}  // namespace gl3
