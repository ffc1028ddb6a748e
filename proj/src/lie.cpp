#include "gl3/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace gl3 {

namespace {

constexpr int kNoDir = 100;

ComplexSurd cs(long long v) { return ComplexSurd(SurdSum(v)); }
ComplexSurd cs_i(long long v) { return ComplexSurd(SurdSum(), SurdSum(v)); }
ComplexSurd surd(long long p, long long q, long long r) {
    return ComplexSurd(SurdSum(SurdScalar(Rational(p, q), Rational(r))));
}

Mat3<ComplexSurd> zero_exact() {
    Mat3<ComplexSurd> m;
    for (auto& r : m)
        for (auto& e : r) e = cs(0);
    return m;
}

// I + tX + t^2 X^2/2 + t^3 X^3/6 with t the given jet variable
Mat3<Jet> exp_jet(const Mat3<cplx>& X, int nvars, int var) {
    Jet t = Jet::variable(nvars, var, 0.0);
    Mat3<Jet> Xj = mat_cast<Jet>(X);
    Mat3<Jet> out{}, term{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out[i][j] = Jet(nvars, i == j ? 1.0 : 0.0);
            term[i][j] = Jet(nvars, i == j ? 1.0 : 0.0);
        }
    for (int k = 1; k <= Jet::kMaxDegree; ++k) {
        term = matmul(term, Xj);
        for (auto& r : term)
            for (auto& e : r) e = e * t / Jet(double(k));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out[i][j] += term[i][j];
    }
    return out;
}

}  // namespace

IwasawaCoords<double> iwasawa_decompose(const Mat3<double>& g) {
    double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                 g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    double scale = 0.0;
    for (auto& r : g)
        for (double e : r) scale = std::max(scale, std::abs(e));
    if (std::abs(det) <= 1e-14 * scale * scale * scale) throw std::domain_error("iwasawa_decompose: singular matrix");
    return iwasawa_decompose_generic<double>(g);
}

IwasawaCoords<double> to_coords(const IwasawaPoint& p) {
    return {p.x1, p.x2, p.x3, p.y1, p.y2, p.k()};
}

cplx power_function(const SpectralParameter& mu, double y1, double y2) {
    if (y1 <= 0 || y2 <= 0) throw std::domain_error("power_function: y must be positive");
    return std::pow(y1, 1.0 - mu.mu3) * std::pow(y2, 1.0 + mu.mu1);
}

Jet power_function(const SpectralParameter& mu, const Jet& y1, const Jet& y2) {
    if (real_part(y1) <= 0 || real_part(y2) <= 0) throw std::domain_error("power_function: y must be positive");
    return pow(y1, 1.0 - mu.mu3) * pow(y2, 1.0 + mu.mu1);
}

GroupFunction test_function(const SpectralParameter& mu, double n1, double n2, int d, int mp, int m) {
    if (std::abs(mp) > d || std::abs(m) > d) throw IndexError("test_function: index out of range");
    return [=](const IwasawaCoords<Jet>& c) {
        Jet p = power_function(mu, c.y1, c.y2);
        Jet psi = exp(Jet(2.0 * kPi * kI) * (Jet(n1) * c.x1 + Jet(n2) * c.x2));
        Jet D = wigner_D_generic<Jet>(d, c.k)(mp, m);
        return p * psi * D;
    };
}

GroupFunction left_translate(const GroupFunction& f, const Mat3<double>& g0) {
    return [=](const IwasawaCoords<Jet>& c) {
        Mat3<Jet> g = matmul(mat_cast<Jet>(mat_cast<cplx>(g0)), assemble(c));
        return f(iwasawa_decompose_generic(g));
    };
}

Mat3<ComplexSurd> x_matrix_exact(int j) {
    Mat3<ComplexSurd> m = zero_exact();
    switch (j) {
        case 2:
        case -2: {
            int s = j > 0 ? 1 : -1;
            m[0][0] = cs(1); m[0][1] = cs_i(s);
            m[1][0] = cs_i(s); m[1][1] = cs(-1);
            return m;
        }
        case 1:
        case -1: {
            int s = j > 0 ? 1 : -1;
            m[0][2] = cs(-s); m[1][2] = cs_i(-1);
            m[2][0] = cs(-s); m[2][1] = cs_i(-1);
            return m;
        }
        case 0: {
            ComplexSurd c = surd(-1, 3, 6);
            m[0][0] = c; m[1][1] = c; m[2][2] = c * cs(-2);
            return m;
        }
    }
    throw std::invalid_argument("x_matrix: index must be in [-2,2]");
}

Mat3<ComplexSurd> k_matrix_exact(int j) {
    Mat3<ComplexSurd> m = zero_exact();
    switch (j) {
        case 1:
        case -1: {
            int s = j > 0 ? 1 : -1;
            m[0][2] = cs(-s); m[1][2] = cs_i(-1);
            m[2][0] = cs(s); m[2][1] = cs_i(1);
            return m;
        }
        case 0:
            m[0][1] = surd(1, 1, 2);
            m[1][0] = surd(-1, 1, 2);
            return m;
    }
    throw std::invalid_argument("k_matrix: index must be in [-1,1]");
}

Mat3<ComplexSurd> e_matrix_exact(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("e_matrix: indices must be 1..3");
    Mat3<ComplexSurd> m = zero_exact();
    m[i - 1][j - 1] = cs(1);
    return m;
}

Mat3<cplx> to_numeric(const Mat3<ComplexSurd>& m) {
    Mat3<cplx> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = m[i][j].to_complex();
    return r;
}

Mat3<cplx> x_matrix(int j) { return to_numeric(x_matrix_exact(j)); }
Mat3<cplx> k_matrix(int j) { return to_numeric(k_matrix_exact(j)); }
Mat3<cplx> e_matrix(int i, int j) { return to_numeric(e_matrix_exact(i, j)); }

Mat3<ComplexSurd> iwasawa_basis_exact(const std::string& name) {
    if (name == "N1") return e_matrix_exact(2, 3);
    if (name == "N2") return e_matrix_exact(1, 2);
    if (name == "N3") return e_matrix_exact(1, 3);
    Mat3<ComplexSurd> m = zero_exact();
    const ComplexSurd third = ComplexSurd(SurdSum(SurdScalar(Rational(1, 3))));
    if (name == "A1") {
        m[0][0] = third; m[1][1] = third; m[2][2] = third * cs(-2);
        return m;
    }
    if (name == "A2") {
        m[0][0] = third * cs(2); m[1][1] = third * cs(-1); m[2][2] = third * cs(-1);
        return m;
    }
    throw std::invalid_argument("unknown Iwasawa basis element " + name);
}

cplx lie_derivative(const GroupFunction& f, const Mat3<double>& g, const std::vector<Mat3<cplx>>& dirs) {
    const int n = static_cast<int>(dirs.size());
    if (n == 0) return f(iwasawa_decompose_generic(mat_cast<Jet>(mat_cast<cplx>(g)))).value();
    if (n > Jet::kMaxDegree) throw std::invalid_argument("lie_derivative: at most three directions");
    Mat3<Jet> M = mat_cast<Jet>(mat_cast<cplx>(g));
    for (auto& r : M)
        for (auto& e : r) e = e + Jet(n, 0.0);
    for (int i = 0; i < n; ++i) M = matmul(M, exp_jet(dirs[i], n, i));
    Jet F = f(iwasawa_decompose_generic(M));
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    return F.partial(vars);
}

cplx lie_derivative(const GroupFunction& f, const IwasawaPoint& p, const std::vector<Mat3<cplx>>& dirs) {
    return lie_derivative(f, assemble(to_coords(p)), dirs);
}

cplx k_left_derivative(const GroupFunction& f, const IwasawaPoint& p, const std::vector<Mat3<cplx>>& dirs) {
    const int n = static_cast<int>(dirs.size());
    if (n == 0) return evaluate(f, p);
    if (n > Jet::kMaxDegree) throw std::invalid_argument("k_left_derivative: at most three directions");
    IwasawaCoords<double> c = to_coords(p);
    c.k = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3<Jet> M = mat_cast<Jet>(mat_cast<cplx>(assemble(c)));
    for (auto& r : M)
        for (auto& e : r) e = e + Jet(n, 0.0);
    for (int i = 0; i < n; ++i) M = matmul(M, exp_jet(dirs[i], n, i));
    M = matmul(M, mat_cast<Jet>(mat_cast<cplx>(p.k())));
    Jet F = f(iwasawa_decompose_generic(M));
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    return F.partial(vars);
}

cplx evaluate(const GroupFunction& f, const IwasawaPoint& p) {
    IwasawaCoords<double> c = to_coords(p);
    IwasawaCoords<Jet> j{c.x1, c.x2, c.x3, c.y1, c.y2, mat_cast<Jet>(mat_cast<cplx>(c.k))};
    return f(j).value();
}

cplx lie_derivative_fd(const GroupFunction& f, const IwasawaPoint& p, const Mat3<double>& dir, double h) {
    const Mat3<double> g = assemble(to_coords(p));
    auto eval = [&](double t) {
        Mat3<double> E{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) E[i][j] = (i == j ? 1.0 : 0.0) + t * dir[i][j];
        // second-order accurate exponential is enough for a central difference
        Mat3<double> D2 = matmul(dir, dir);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) E[i][j] += 0.5 * t * t * D2[i][j];
        Mat3<double> gm = matmul(g, E);
        return f(iwasawa_decompose_generic(mat_cast<Jet>(mat_cast<cplx>(gm)))).value();
    };
    return (eval(h) - eval(-h)) / (2.0 * h);
}

CoordinateJet::CoordinateJet(const GroupFunction& f, const IwasawaPoint& p, int left_dir, int right_dir)
    : left_(left_dir), right_(right_dir) {
    const double base[5] = {p.x1, p.x2, p.x3, p.y1, p.y2};
    for (int v = 0; v < 5; ++v) coords_[v] = Jet::variable(NVARS, v, base[v]);
    coords_[S] = Jet::variable(NVARS, S, 0.0);
    coords_[T] = Jet::variable(NVARS, T, 0.0);
    Mat3<Jet> k = mat_cast<Jet>(mat_cast<cplx>(p.k()));
    for (auto& r : k)
        for (auto& e : r) e = e + Jet(NVARS, 0.0);
    if (left_dir != kNoDir) k = matmul(exp_jet(k_matrix(left_dir), NVARS, S), k);
    if (right_dir != kNoDir) k = matmul(k, exp_jet(k_matrix(right_dir), NVARS, T));
    IwasawaCoords<Jet> c{coords_[X1], coords_[X2], coords_[X3], coords_[Y1], coords_[Y2], k};
    F_ = f(c);
}

Jet CoordinateJet::Z(int j, const Jet& G) const {
    const Jet& y1 = coords_[Y1];
    const Jet& y2 = coords_[Y2];
    const Jet& x2 = coords_[X2];
    switch (j) {
        case 2:
        case -2: {
            double s = j > 0 ? 1.0 : -1.0;
            return Jet(2.0) * y2 * G.d(Y2) - y1 * G.d(Y1) + Jet(2.0 * s * kI) * y2 * G.d(X2);
        }
        case 1:
        case -1: {
            double s = j > 0 ? 1.0 : -1.0;
            return Jet(-2.0 * kI) * y1 * (G.d(X1) + x2 * G.d(X3)) - Jet(2.0 * s) * y1 * y2 * G.d(X3);
        }
        case 0: return Jet(-std::sqrt(6.0)) * y1 * G.d(Y1);
    }
    throw std::invalid_argument("Z: index must be in [-2,2]");
}

Jet CoordinateJet::Ztilde(int j, const Jet& G) const {
    if (j == 0) return Z(0, G);
    if (std::abs(j) == 2) {
        if (left_ != 0) throw std::logic_error("Ztilde_{+-2} needs the K0 left direction");
        double s = j > 0 ? 1.0 : -1.0;
        return Z(j, G) - Jet(s * kI * std::sqrt(2.0) / 2.0) * KLeft(G);
    }
    if (left_ != j) throw std::logic_error("Ztilde_{+-1} needs the matching left direction");
    return Z(j, G) - KLeft(G);
}

Jet CoordinateJet::delta1_spherical(const Jet& G) const {
    const Jet& y1 = coords_[Y1];
    const Jet& y2 = coords_[Y2];
    const Jet& x2 = coords_[X2];
    Jet y1s = y1 * y1, y2s = y2 * y2;
    Jet Gy1 = G.d(Y1), Gy2 = G.d(Y2), Gx1 = G.d(X1), Gx2 = G.d(X2), Gx3 = G.d(X3);
    return -(y1s * Gy1.d(Y1)) - y2s * Gy2.d(Y2) + y1 * y2 * Gy1.d(Y2) - y1s * (x2 * x2 + y2s) * Gx3.d(X3) -
           y1s * Gx1.d(X1) - y2s * Gx2.d(X2) - Jet(2.0) * y1s * x2 * Gx1.d(X3);
}

Jet CoordinateJet::delta2_spherical(const Jet& G) const {
    const Jet& y1 = coords_[Y1];
    const Jet& y2 = coords_[Y2];
    const Jet& x2 = coords_[X2];
    Jet y1s = y1 * y1, y2s = y2 * y2, x2s = x2 * x2;
    Jet Gy1 = G.d(Y1), Gy2 = G.d(Y2), Gx1 = G.d(X1), Gx2 = G.d(X2), Gx3 = G.d(X3);
    Jet Gy1y1 = Gy1.d(Y1), Gy2y2 = Gy2.d(Y2), Gx3x3 = Gx3.d(X3), Gx1x1 = Gx1.d(X1), Gx2x2 = Gx2.d(X2);
    Jet Gx1x3 = Gx1.d(X3);
    Jet r = -(y1s * y2 * Gy1y1.d(Y2)) + y1 * y2s * Gy2y2.d(Y1) - y1s * y1 * y2 * Gx3x3.d(Y1) +
            y1 * y2s * Gx2x2.d(Y1) - Jet(2.0) * y1s * y2 * x2 * Gx1x3.d(Y2);
    r += (y2s - x2s) * y1s * y2 * Gx3x3.d(Y2) - y1s * y2 * Gx1x1.d(Y2) + Jet(2.0) * y1s * y2s * Gx1.d(X2).d(X3) +
         Jet(2.0) * y1s * y2s * x2 * Gx3x3.d(X2);
    r += y1s * Gy1y1 - y2s * Gy2y2 + Jet(2.0) * y1s * x2 * Gx1x3 + (x2s + y2s) * y1s * Gx3x3 + y1s * Gx1x1 -
         y2s * Gx2x2;
    return r;
}

cplx coordinate_operator(const std::string& name, const GroupFunction& f, const IwasawaPoint& p) {
    auto idx = [&](size_t off) { return std::stoi(name.substr(off)); };
    if (name.rfind("KL", 0) == 0) {
        CoordinateJet cj(f, p, idx(2), kNoDir);
        return cj.KLeft(cj.value()).value();
    }
    if (name.rfind("K", 0) == 0) {
        CoordinateJet cj(f, p, kNoDir, idx(1));
        return cj.KRight(cj.value()).value();
    }
    if (name.rfind("Z", 0) == 0) {
        CoordinateJet cj(f, p, kNoDir, kNoDir);
        return cj.Z(idx(1), cj.value()).value();
    }
    throw std::invalid_argument("unknown coordinate operator " + name);
}

cplx x_operator(int j, const GroupFunction& f, const IwasawaPoint& p) {
    if (std::abs(j) > 2) throw std::invalid_argument("x_operator: index must be in [-2,2]");
    CMat D2 = wigner_D(2, p.k());
    cplx acc = 0.0;
    for (int l = -2; l <= 2; ++l) {
        int dir = (std::abs(l) == 1) ? l : 0;
        CoordinateJet cj(f, p, dir, kNoDir);
        acc += D2(l, j) * cj.Ztilde(l, cj.value()).value();
    }
    return acc;
}

cplx x_operator_flow(int j, const GroupFunction& f, const IwasawaPoint& p) {
    return lie_derivative(f, p, {x_matrix(j)});
}

cplx casimir(int which, const GroupFunction& f, const IwasawaPoint& p) {
    const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
    CoordinateJet Jp(f, p, 1, 0), J0(f, p, 0, 0), Jm(f, p, -1, 0);
    const Jet& Fp = Jp.value();
    const Jet& F0 = J0.value();
    const Jet& Fm = Jm.value();
    if (which == 1) {
        Jet r = Jet(8.0) * J0.delta1_spherical(F0) - Jet(2.0) * Jp.KLeft(Jp.Z(-1, Fp)) -
                Jet(r2 * kI) * J0.KLeft(J0.Z(2, F0) - J0.Z(-2, F0)) - Jet(2.0) * Jm.KLeft(Jm.Z(1, Fm));
        return r.value() / 8.0;
    }
    if (which != 2) throw std::invalid_argument("casimir: which must be 1 or 2");
    // T_{+-1} = sqrt6 Z_{-+1} Z_0 + 6 (1 - Z_{-+2}) Z_{+-1}
    auto Tpm = [&](const CoordinateJet& J, const Jet& F, int s) {
        Jet a = J.Z(s, F);
        return Jet(r6) * J.Z(-s, J.Z(0, F)) + Jet(6.0) * (a - J.Z(-2 * s, a));
    };
    // T_0 = 3 (Z1 Z1 - Z-1 Z-1) + 2 (sqrt6 Z0 + 6)(Z-2 - Z2)
    auto T0 = [&](const CoordinateJet& J, const Jet& F) {
        Jet b = J.Z(-2, F) - J.Z(2, F);
        return Jet(3.0) * (J.Z(1, J.Z(1, F)) - J.Z(-1, J.Z(-1, F))) + Jet(2.0) * (Jet(r6) * J.Z(0, b) + Jet(6.0) * b);
    };
    Jet r = Jet(96.0) * J0.delta2_spherical(F0);
    r += Jet(2.0) * Jp.KLeft(Tpm(Jp, Fp, 1));
    r += Jet(r2 * kI) * J0.KLeft(T0(J0, F0));
    r += Jet(2.0) * Jm.KLeft(Tpm(Jm, Fm, -1));
    Jet kp = Jp.KLeft(Jp.KRight(Jp.Z(-1, Fp) - Jp.Z(1, Fp)));
    Jet km = Jm.KLeft(Jm.KRight(Jm.Z(-1, Fm) - Jm.Z(1, Fm)));
    r += Jet(6.0 * r2 * kI) * (kp + km);
    return r.value() / 96.0;
}

cplx casimir_definition(int which, const GroupFunction& f, const IwasawaPoint& p) {
    return casimir_definition(which, f, assemble(to_coords(p)));
}

cplx casimir_definition(int which, const GroupFunction& f, const Mat3<double>& g) {
    cplx d1 = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) d1 += lie_derivative(f, g, {e_matrix(i, j), e_matrix(j, i)});
    d1 *= -0.5;
    if (which == 1) return d1;
    if (which != 2) throw std::invalid_argument("casimir_definition: which must be 1 or 2");
    cplx t = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) t += lie_derivative(f, g, {e_matrix(i, j), e_matrix(j, k), e_matrix(k, i)});
    return t / 3.0 + d1;
}

cplx casimir_definition_check(int which, const GroupFunction& f, const IwasawaPoint& p) {
    return casimir_definition(which, f, p) - casimir(which, f, p);
}

cplx lambda1(const SpectralParameter& mu) {
    return 1.0 - (mu.mu1 * mu.mu1 + mu.mu2 * mu.mu2 + mu.mu3 * mu.mu3) / 2.0;
}

cplx lambda2(const SpectralParameter& mu) { return mu.mu1 * mu.mu2 * mu.mu3; }

cplx lambda_x_eigenvalue(const SpectralParameter& mu, double x) {
    cplx l1 = lambda1(mu), l2 = lambda2(mu);
    cplx b = l1 + 4.0 * x * x - 1.0;
    return 27.0 * l2 * l2 + 4.0 * (l1 + x * x - 1.0) * b * b;
}

double lambda_x_unitary_form(double t1, double t2, double x) {
    double q = 4 * x * x;
    return ((t1 - t2) * (t1 - t2) + q) * ((2 * t1 + t2) * (2 * t1 + t2) + q) * ((t1 + 2 * t2) * (t1 + 2 * t2) + q);
}

double lambda_x_shifted_form(double a, double t, double x) {
    return 4 * (x - a) * (x + a) * (9 * t * t + (2 * x - a) * (2 * x - a)) * (9 * t * t + (2 * x + a) * (2 * x + a));
}

}  // namespace gl3
