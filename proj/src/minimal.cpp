#include "gl3/minimal.hpp"

#include "gl3/gamma.hpp"
#include "gl3/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace gl3 {

namespace {

constexpr double kEqTol = 1e-9;
constexpr double kNearTol = 1e-6;

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

double vnorm(const CVec& v) {
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

void axpy(CVec& y, cplx s, const CVec& x) {
    for (size_t i = 0; i < y.data().size(); ++i) y.data()[i] += s * x.data()[i];
}

bool close(cplx a, cplx b, double tol = kEqTol) { return std::abs(a - b) < tol; }

// residual of f against span(vs), relative to |f|
double distance_to_span(const CVec& f, const std::vector<CVec>& vs) {
    const double nf = vnorm(f);
    if (nf == 0.0) return 0.0;
    if (vs.empty()) return 1.0;
    Eigen::MatrixXcd A(f.size(), vs.size());
    for (size_t c = 0; c < vs.size(); ++c) A.col(c) = to_eigen(vs[c]);
    const Eigen::VectorXcd b = to_eigen(f);
    const Eigen::VectorXcd x = A.completeOrthogonalDecomposition().solve(b);
    return (A * x - b).norm() / nf;
}

RotationMatrix vmm_wl() { return mat_cast<double>(matmul(v_matrix({-1, -1}), weyl_matrix(Weyl::wl))); }

}  // namespace

StandardMu StandardMu::unitary(double t1, double t2) {
    if (std::abs(t1 - t2) < kEqTol || std::abs(2 * t1 + t2) < kEqTol || std::abs(t1 + 2 * t2) < kEqTol)
        throw std::invalid_argument("unitary standard form needs t1-t2, 2t1+t2, t1+2t2 nonzero");
    return {Kind::unitary, t1, t2};
}

StandardMu StandardMu::shifted(double x, double t) {
    if (x < 0) throw std::invalid_argument("shifted standard form needs x >= 0");
    return {Kind::shifted, x, t};
}

StandardMu StandardMu::from_mu(const SpectralParameter& mu, double tol) {
    const double x = mu.mu1.real(), t = mu.mu1.imag();
    if (std::abs(mu.mu2.real()) < tol && std::abs(mu.mu2.imag() + 2 * t) < tol && std::abs(mu.mu3 - cplx(-x, t)) < tol &&
        x > -tol)
        return shifted(std::max(x, 0.0), t);
    if (std::abs(mu.mu1.real()) < tol && std::abs(mu.mu2.real()) < tol && std::abs(mu.mu3.real()) < tol)
        return unitary(mu.mu1.imag(), mu.mu2.imag());
    throw std::invalid_argument("spectral parameter is not in standard form");
}

SpectralParameter StandardMu::mu() const {
    if (kind == Kind::unitary) return {cplx(0, a), cplx(0, b), cplx(0, -(a + b))};
    return {cplx(a, b), cplx(0, -2 * b), cplx(-a, b)};
}

cplx g2_coefficient(int d, int k, int m, const SpectralParameter& mu) {
    if (m < k || (m - k) % 2 != 0 || m > d) throw std::invalid_argument("g2_coefficient: index outside the family");
    if (m == 0) return 0.5;
    const int j = (m - k) / 2;
    cplx c = 1.0;
    for (int i = 0; i < j; ++i) {
        const int s = 2 * i + k;
        const cplx den = std::sqrt(double(d + 1 + s) * (d + 2 + s)) * (mu.mu1 - mu.mu2 - 1.0 - double(s));
        if (std::abs(den) < 1e-12) throw std::invalid_argument("g2_coefficient: vanishing denominator");
        c *= -std::sqrt(double(d - 1 - s) * (d - s)) * (3.0 * mu.mu3 + double(2 * d - 1 + s)) / den;
    }
    return c;
}

CVec g_vector(GFamily which, int d, int delta, int eps, const SpectralParameter& mu) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("g_vector: eps must be +-1");
    if (which != GFamily::g4 && delta != 0 && delta != 1) throw std::invalid_argument("g_vector: delta must be 0 or 1");
    CVec out(d);
    switch (which) {
        case GFamily::g1: {
            if (d != 2) throw std::invalid_argument("g1 lives at d = 2");
            axpy(out, -std::sqrt(6.0) * (1.0 + mu.mu3), bu(2, 2, 1));
            axpy(out, mu.mu1 - mu.mu2 - 1.0, bu(2, 0, 1));
            return out;
        }
        case GFamily::g2: {
            for (int m = delta; m <= d; m += 2) axpy(out, g2_coefficient(d, delta, m, mu), bu(d, m, eps));
            return out;
        }
        case GFamily::g3: {
            if (d < 2) throw std::invalid_argument("g3 needs d >= 2");
            if (!close(mu.mu1, double(d - 1)) || !close(mu.mu2, 0.0) || !close(mu.mu3, double(1 - d)))
                throw std::invalid_argument("g3 needs mu = (d-1, 0, 1-d)");
            for (int m = delta; m < d; m += 2) axpy(out, g2_coefficient(d, delta, m, mu), bu(d, m, eps));
            if ((d - delta) % 2 == 0) {
                // at d = 2 the empty product (1) is used, not the bu_0 normalization 1/2
                const cplx prev = (d == 2) ? cplx(1.0) : g2_coefficient(d, delta, d - 2, mu);
                axpy(out, prev / std::sqrt(double(d) * (2 * d - 1)), bu(d, d, eps));
            }
            return out;
        }
        case GFamily::g4: {
            if (d % 2 == 0) throw std::invalid_argument("g4 needs d odd");
            const int kappa = (d + 1) / 2;
            for (int m = kappa; m <= d; m += 2) axpy(out, g2_coefficient(d, kappa, m, mu), bu(d, m, eps));
            return out;
        }
    }
    return out;
}

Eigen::MatrixXcd minimal_nullspace(int d, const SpectralParameter& mu, double rel_threshold) {
    const int n = 2 * d + 1;
    int rows = 0;
    if (d >= 1) rows += 2 * d - 1;
    if (d >= 2) rows += 2 * d - 3;
    if (rows == 0) return Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd M(rows, n);
    int r = 0;
    if (d >= 1) {
        M.block(r, 0, 2 * d - 1, n) = y_matrix(-1, d, mu);
        r += 2 * d - 1;
    }
    if (d >= 2) M.block(r, 0, 2 * d - 3, n) = y_matrix(-2, d, mu);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > rel_threshold * smax && smax > 0) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

Eigen::MatrixXcd span_of(const std::vector<CVec>& vs) {
    if (vs.empty()) return Eigen::MatrixXcd(0, 0);
    Eigen::MatrixXcd A(vs.front().size(), vs.size());
    for (size_t c = 0; c < vs.size(); ++c) A.col(c) = to_eigen(vs[c]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
    qr.setThreshold(1e-10);
    const Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(A.rows(), qr.rank());
    return Q;
}

double subspace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.cols() != b.cols()) return 1.0;
    if (a.cols() == 0) return 0.0;
    // |(I - B B^*) A|_2 for orthonormal A, B
    const Eigen::MatrixXcd r = a - b * (b.adjoint() * a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
    return svd.singularValues()(0);
}

double lowering_residual(const SpectralParameter& mu, const CVec& f) {
    const int d = f.d();
    const double nf = vnorm(f);
    if (nf == 0.0) return 0.0;
    double r = 0;
    if (d >= 1) r += vnorm(y_action(-1, mu, f));
    if (d >= 2) r += vnorm(y_action(-2, mu, f));
    return r / nf;
}

MinimalClass classify_minimal(int d, const StandardMu& smu) {
    if (d < 0) throw std::invalid_argument("classify_minimal: negative weight");
    MinimalClass mc;
    mc.d = d;
    mc.mu = smu.mu();
    const SpectralParameter& mu = mc.mu;
    mc.chi = d == 0 ? VCharacter{1, 1} : (d == 1 ? VCharacter{1, -1} : VCharacter{sign_pow(d), 1});
    auto add = [&](CVec v, std::string label, Parity p) {
        mc.basis.push_back(std::move(v));
        mc.labels.push_back(std::move(label));
        mc.parities.push_back(p);
    };
    auto gname = [&](const char* g, int delta, int eps) {
        return std::string(g) + "^{" + std::to_string(d) + "," + std::to_string(delta) + "," + (eps > 0 ? "+" : "-") + "}";
    };

    if (d <= 1) {
        mc.case_tag = 2;
        if (d == 0) {
            add(bu(0, 0, 1), "bu^{0,+}_0", {0, 1});
        } else {
            add(bu(1, 0, -1), "bu^{1,-}_0", {0, -1});
            add(bu(1, 1, 1), "bu^{1,+}_1", {1, 1});
            add(bu(1, 1, -1), "bu^{1,-}_1", {1, -1});
        }
        return mc;
    }

    int tag = (d == 2) ? 3 : 1;
    if (smu.kind == StandardMu::Kind::shifted) {
        const double x = smu.a, t = smu.b;
        auto check_near = [](double a, double b) {
            const double e = std::abs(a - b);
            if (e >= kEqTol && e < kNearTol) throw AmbiguousClassification("spectral parameter within 1e-6 of a case boundary");
            return e < kEqTol;
        };
        const bool x_full = check_near(x, d - 1.0);
        const bool x_half = check_near(x, (d - 1) / 2.0);
        const bool t_zero = (x_full || (x_half && d % 2 == 1)) ? check_near(t, 0.0) : std::abs(t) < kEqTol;
        if (x_full && t_zero)
            tag = 6;
        else if (x_half && d % 2 == 1 && t_zero)
            tag = 5;
        else if (x_half)
            tag = 4;
    }
    mc.case_tag = tag;
    const int eps_d = sign_pow(d);
    switch (tag) {
        case 1: break;
        case 3: add(g_vector(GFamily::g1, 2, 0, 1, mu), "g1", {0, 1}); break;
        case 4:
            add(g_vector(GFamily::g2, d, 0, eps_d, mu), gname("g2", 0, eps_d), {0, eps_d});
            add(g_vector(GFamily::g2, d, 1, -eps_d, mu), gname("g2", 1, -eps_d), {1, -eps_d});
            break;
        case 5: {
            const int kappa = (d + 1) / 2;
            const int delta = (kappa + 1) % 2, eps = sign_pow(kappa);
            add(g_vector(GFamily::g2, d, delta, eps, mu), gname("g2", delta, eps), {delta, eps});
            add(g_vector(GFamily::g4, d, kappa % 2, 1, mu), "g4^{" + std::to_string(d) + ",+}", {kappa % 2, 1});
            add(g_vector(GFamily::g4, d, kappa % 2, -1, mu), "g4^{" + std::to_string(d) + ",-}", {kappa % 2, -1});
            break;
        }
        case 6:
            add(g_vector(GFamily::g3, d, 1, eps_d, mu), gname("g3", 1, eps_d), {1, eps_d});
            add(g_vector(GFamily::g3, d, 0, eps_d, mu), gname("g3", 0, eps_d), {0, eps_d});
            add(bu(d, d, 1), "bu^{" + std::to_string(d) + ",+}_" + std::to_string(d), {d % 2, 1});
            add(bu(d, d, -1), "bu^{" + std::to_string(d) + ",-}_" + std::to_string(d), {d % 2, -1});
            break;
        default: break;
    }
    for (const auto& v : mc.basis) mc.lowering_residual = std::max(mc.lowering_residual, lowering_residual(mu, v));
    return mc;
}

bool whittaker_vanishing(int d, const StandardMu& smu, const CVec& f, double tol) {
    if (f.d() != d) throw std::invalid_argument("whittaker_vanishing: dimension mismatch");
    const SpectralParameter mu = smu.mu();
    if (vnorm(f) == 0.0) return true;
    if (lowering_residual(mu, f) > 1e-8) throw std::invalid_argument("whittaker_vanishing: f is not power-function minimal");
    if (d == 0) return false;
    if (d == 1) {
        if (close(mu.mu1, mu.mu2) || close(mu.mu1, mu.mu3) || close(mu.mu2, mu.mu3))
            throw std::domain_error("whittaker_vanishing: d = 1 with repeated mu_i is not covered");
        return false;
    }
    const MinimalClass mc = classify_minimal(d, smu);
    switch (mc.case_tag) {
        case 4: {
            const CMat T = t_matrix(d, Weyl::w3, weyl_action(mu, Weyl::w3));
            return distance_to_span(f, {basis_v(d, d) * T}) < tol;
        }
        case 5: {
            CVec g = g_vector(GFamily::g4, d, 0, 1, mu);
            axpy(g, 1.0, g_vector(GFamily::g4, d, 0, -1, mu));
            return distance_to_span(f, {g, g * wigner_D(d, vmm_wl())}) < tol;
        }
        case 6: {
            const CVec v = basis_v(d, d);
            return distance_to_span(f, {v, v * wigner_D(d, vmm_wl())}) < tol;
        }
        default:
            throw std::domain_error("whittaker_vanishing: no rule for case " + std::to_string(mc.case_tag));
    }
}

SpectralParameter MinimalKType::mu(double x, double t) const {
    if (d0 >= 2) {
        const double h = (d0 - 1) / 2.0;
        return {cplx(h, t), cplx(-h, t), cplx(0, -2 * t)};
    }
    return {cplx(x, t), cplx(-x, t), cplx(0, -2 * t)};
}

MinimalKType minimal_ktype_parameters(int d0) {
    if (d0 < 0) throw std::invalid_argument("minimal_ktype_parameters: negative weight");
    MinimalKType k;
    k.d0 = d0;
    if (d0 == 0) {
        k.f = CVec(0, 1.0);
        k.family = "Re(mu) = 0, or (x+it, -x+it, -2it) with |x| < 1/2";
    } else if (d0 == 1) {
        k.f = bu(1, 0, -1);
        k.family = "Re(mu) = 0, or (x+it, -x+it, -2it) with |x| < 1/2";
    } else {
        k.f = bu(d0, d0, 1);
        k.family = "((d0-1)/2+it, -(d0-1)/2+it, -2it)";
    }
    return k;
}

Y0Diagnostic y0_skew_exclusion(int d, const SpectralParameter& mu) {
    Y0Diagnostic diag;
    diag.d = d;
    auto eig = [&](const CVec& v, std::string name) {
        const CVec w = y_action(0, mu, v);
        cplx num = 0.0, den = 0.0;
        for (int m = -d; m <= d; ++m) {
            num += std::conj(v(m)) * w(m);
            den += std::conj(v(m)) * v(m);
        }
        Y0Eigen e;
        e.vector = std::move(name);
        e.eigenvalue = num / den;
        CVec r = w;
        axpy(r, -e.eigenvalue, v);
        e.residual = vnorm(r) / vnorm(v);
        e.purely_imaginary = std::abs(e.eigenvalue.real()) < 1e-12 * std::max(1.0, std::abs(e.eigenvalue));
        diag.eigen.push_back(e);
        return e;
    };
    if (d == 0) {
        eig(bu(0, 0, 1), "bv^0_0");
    } else if (d == 1) {
        eig(bu(1, 0, -1), "bu^{1,-}_0");
        eig(bu(1, 1, -1), "bu^{1,-}_1");
        eig(bu(1, 1, 1), "bu^{1,+}_1");
    } else {
        const Y0Eigen e = eig(basis_v(d, -d), "bv^" + std::to_string(d) + "_-" + std::to_string(d));
        diag.printed = -(d - 1) * std::sqrt(6.0 * d * (2 * d - 1)) / std::sqrt((d + 1.0) * (2 * d + 3.0));
        const double scale = std::max(1.0, std::abs(e.eigenvalue));
        diag.excluded = e.residual < 1e-10 * scale && std::abs(e.eigenvalue.imag()) < 1e-10 * scale &&
                        std::abs(e.eigenvalue) > 1e-10;
    }
    return diag;
}

GDWhittFEReport verify_gdwhittfes(int which, int d, double t) {
    if (d < 2) throw std::invalid_argument("verify_gdwhittfes needs d >= 2");
    GDWhittFEReport rep;
    rep.which = which;
    rep.d = d;
    rep.t = t;
    const int eps = sign_pow(d);
    SpectralParameter mu;
    const double h = (d - 1) / 2.0;
    struct Pair {
        std::string label;
        CVec g;
        IntertwinedParams p;
    };
    std::vector<Pair> pairs;
    auto w3 = [&](int sign, int ro) {
        return IntertwinedParams{IntertwinedKind::w3, d, sign, ro, mu.mu2 - mu.mu3, 0.0};
    };
    auto w4 = [&](int sign, int ro) {
        return IntertwinedParams{IntertwinedKind::w4, d, sign, ro, mu.mu1 - mu.mu3, mu.mu1 - mu.mu2};
    };
    switch (which) {
        case 1:
            if (d % 2 == 1 && t == 0.0) throw std::invalid_argument("case 1 needs d even or t != 0");
            mu = SpectralParameter(cplx(h, t), cplx(0, -2 * t), cplx(-h, t));
            pairs.push_back({"g2^{d,0,eps} ~ bu^{d,eps}_d T(w3)", g_vector(GFamily::g2, d, 0, eps, mu), w3(eps, 0)});
            pairs.push_back({"g2^{d,1,-eps} ~ bu^{d,-eps}_d T(w3)", g_vector(GFamily::g2, d, 1, -eps, mu), w3(-eps, 0)});
            break;
        case 2:
            if (d % 4 != 1) throw std::invalid_argument("case 2 needs d = 1 mod 4");
            mu = SpectralParameter(h, 0.0, -h);
            pairs.push_back({"g2^{d,0,-} ~ bu^{d,-}_d T(w3)", g_vector(GFamily::g2, d, 0, -1, mu), w3(-1, 0)});
            pairs.push_back({"g4^{d,+} ~ bu^{d,+}_d T(w3)", g_vector(GFamily::g4, d, 0, 1, mu), w3(1, 0)});
            pairs.push_back({"g4^{d,-} ~ bu^{d,+}_d T(w4)", g_vector(GFamily::g4, d, 0, -1, mu), w4(1, 0)});
            break;
        case 3:
            if (d % 4 != 3) throw std::invalid_argument("case 3 needs d = 3 mod 4");
            mu = SpectralParameter(h, 0.0, -h);
            pairs.push_back({"g2^{d,1,+} ~ bu^{d,+}_d T(w3)", g_vector(GFamily::g2, d, 1, 1, mu), w3(1, 0)});
            pairs.push_back({"g4^{d,-} ~ bu^{d,-}_d T(w3)", g_vector(GFamily::g4, d, 0, -1, mu), w3(-1, 0)});
            pairs.push_back({"g4^{d,+} ~ bu^{d,+}_{d-1} T(w4)", g_vector(GFamily::g4, d, 0, 1, mu), w4(1, 1)});
            break;
        case 4:
            mu = SpectralParameter(d - 1.0, 0.0, 1.0 - d);
            pairs.push_back({"g3^{d,1,eps} ~ bu^{d,eps}_{d-1} T(w3)", g_vector(GFamily::g3, d, 1, eps, mu), w3(eps, 1)});
            pairs.push_back({"g3^{d,0,eps} ~ bu^{d,eps}_d T(w3)", g_vector(GFamily::g3, d, 0, eps, mu), w3(eps, 0)});
            break;
        default: throw std::invalid_argument("verify_gdwhittfes: case must be 1..4");
    }
    for (const auto& pr : pairs) {
        CVec row;
        try {
            row = intertwined_row(pr.p);
        } catch (const PoleError&) {
            row = intertwined_row_limit(pr.p);
        }
        const Eigen::VectorXcd g = to_eigen(pr.g), r = to_eigen(row);
        const cplx c = g.dot(r) / g.squaredNorm();  // conj(g) . r
        const double resid = (r - c * g).norm() / std::max(r.norm(), 1e-300);
        double gmax = g.cwiseAbs().maxCoeff(), spread = 0.0;
        std::vector<cplx> ratios;
        for (int i = 0; i < g.size(); ++i)
            if (std::abs(g(i)) > 1e-8 * gmax) ratios.push_back(r(i) / g(i));
        cplx mean = 0.0;
        for (auto q : ratios) mean += q;
        mean /= double(ratios.size());
        for (auto q : ratios) spread = std::max(spread, std::abs(q - mean) / std::abs(mean));
        rep.pairs.push_back(pr.label);
        rep.ratio_spread.push_back(spread);
        rep.residual.push_back(resid);
        rep.constants.push_back(c);
        if (!(resid < 1e-8 && spread < 1e-8 && std::abs(c) > 0)) rep.ok = false;
    }
    (void)from_eigen;
    return rep;
}

}  // namespace gl3
