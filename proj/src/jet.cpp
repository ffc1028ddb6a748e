#include "gl3/jet.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace gl3 {

namespace {

struct MulEntry { int i, j, k; };
struct DerEntry { int src, dst; double factor; };

struct Tables {
    int n = 0;
    int size = 0;
    std::vector<std::array<int, Jet::kMaxVars>> exps;
    std::vector<int> degree;
    std::vector<int> lookup;  // base-4 code -> index, -1 when absent
    std::vector<MulEntry> mul;
    std::vector<std::vector<DerEntry>> der;

    int code(const std::array<int, Jet::kMaxVars>& e) const {
        int c = 0;
        for (int v = n - 1; v >= 0; --v) c = c * 4 + e[v];
        return c;
    }
};

Tables build(int n) {
    Tables t;
    t.n = n;
    int codes = 1;
    for (int v = 0; v < n; ++v) codes *= 4;
    t.lookup.assign(codes, -1);
    for (int deg = 0; deg <= Jet::kMaxDegree; ++deg) {
        for (int c = 0; c < codes; ++c) {
            std::array<int, Jet::kMaxVars> e{};
            int rest = c, s = 0;
            for (int v = 0; v < n; ++v) { e[v] = rest % 4; rest /= 4; s += e[v]; }
            if (s != deg) continue;
            t.lookup[c] = static_cast<int>(t.exps.size());
            t.exps.push_back(e);
            t.degree.push_back(deg);
        }
    }
    t.size = static_cast<int>(t.exps.size());
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j) {
            if (t.degree[i] + t.degree[j] > Jet::kMaxDegree) continue;
            std::array<int, Jet::kMaxVars> e{};
            for (int v = 0; v < n; ++v) e[v] = t.exps[i][v] + t.exps[j][v];
            t.mul.push_back({i, j, t.lookup[t.code(e)]});
        }
    t.der.resize(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < t.size; ++i) {
            if (t.exps[i][v] == 0) continue;
            auto e = t.exps[i];
            e[v] -= 1;
            t.der[v].push_back({i, t.lookup[t.code(e)], double(t.exps[i][v])});
        }
    return t;
}

const Tables& tables(int n) {
    static const std::array<std::unique_ptr<Tables>, Jet::kMaxVars + 1> all = [] {
        std::array<std::unique_ptr<Tables>, Jet::kMaxVars + 1> a;
        for (int k = 0; k <= Jet::kMaxVars; ++k) a[k] = std::make_unique<Tables>(build(k));
        return a;
    }();
    if (n < 0 || n > Jet::kMaxVars) throw std::invalid_argument("jet variable count out of range");
    return *all[n];
}

}  // namespace

int jet_size(int nvars) { return tables(nvars).size; }

Jet::Jet(cplx v) : n_(0), deg_(kMaxDegree), c_{v} {}

Jet::Jet(int nvars, cplx v) : n_(nvars), deg_(kMaxDegree), c_(tables(nvars).size, cplx(0.0)) {
    c_[0] = v;
}

Jet Jet::variable(int nvars, int index, cplx value) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("jet variable index out of range");
    Jet j(nvars, value);
    j.c_[1 + index] = 1.0;  // degree-1 monomials follow the constant in variable order
    return j;
}

cplx Jet::value() const {
    if (deg_ < 0) throw std::logic_error("jet differentiated beyond its valid degree");
    return c_[0];
}

cplx Jet::coeff(const std::vector<int>& exponents) const {
    const Tables& t = tables(n_);
    std::array<int, kMaxVars> e{};
    int s = 0;
    for (int v = 0; v < n_ && v < static_cast<int>(exponents.size()); ++v) { e[v] = exponents[v]; s += e[v]; }
    if (s > deg_) throw std::logic_error("jet coefficient beyond valid degree");
    for (int v = 0; v < n_; ++v)
        if (e[v] > 3) return 0.0;
    int idx = t.lookup[t.code(e)];
    return idx < 0 ? cplx(0.0) : c_[idx];
}

cplx Jet::partial(const std::vector<int>& vars) const {
    std::vector<int> e(n_, 0);
    for (int v : vars) {
        if (v < 0 || v >= n_) throw std::invalid_argument("jet partial: variable out of range");
        e[v] += 1;
    }
    double fact = 1.0;
    for (int x : e) for (int k = 2; k <= x; ++k) fact *= k;
    return coeff(e) * fact;
}

void Jet::promote(int n) {
    if (n == n_) return;
    if (n_ != 0) throw std::invalid_argument("jet variable count mismatch");
    cplx v = c_[0];
    c_.assign(tables(n).size, cplx(0.0));
    c_[0] = v;
    n_ = n;
}

Jet Jet::d(int var) const {
    if (var < 0 || var >= n_) throw std::invalid_argument("jet derivative: variable out of range");
    Jet r(n_, 0.0);
    for (const auto& e : tables(n_).der[var]) r.c_[e.dst] += e.factor * c_[e.src];
    r.deg_ = deg_ - 1;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    if (o.n_ == 0) { c_[0] += o.c_[0]; return *this; }
    promote(o.n_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    deg_ = std::min(deg_, o.deg_);
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    if (o.n_ == 0) { c_[0] -= o.c_[0]; return *this; }
    promote(o.n_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    deg_ = std::min(deg_, o.deg_);
    return *this;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    if (a.n_ == 0) {
        Jet r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    if (b.n_ == 0) {
        Jet r = a;
        for (auto& x : r.c_) x *= b.c_[0];
        return r;
    }
    if (a.n_ != b.n_) throw std::invalid_argument("jet variable count mismatch");
    Jet r(a.n_, 0.0);
    for (const auto& e : tables(a.n_).mul) r.c_[e.k] += a.c_[e.i] * b.c_[e.j];
    r.deg_ = std::min(a.deg_, b.deg_);
    return r;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet Jet::compose(const cplx derivs[4]) const {
    Jet h = *this;
    h.c_[0] = 0.0;
    Jet r(n_, derivs[0]);
    r.deg_ = deg_;
    if (n_ == 0) return r;
    Jet p = h;
    double fact = 1.0;
    for (int k = 1; k <= kMaxDegree; ++k) {
        fact *= k;
        Jet term = p * Jet(derivs[k] / fact);
        r += term;
        if (k < kMaxDegree) p = p * h;
    }
    r.deg_ = deg_;
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    cplx b0 = b.c_[0];
    if (b0 == cplx(0.0)) throw std::domain_error("jet division by a jet with zero constant term");
    if (b.n_ == 0) {
        Jet r = a;
        for (auto& x : r.c_) x /= b0;
        return r;
    }
    const cplx dv[4] = {1.0 / b0, -1.0 / (b0 * b0), 2.0 / (b0 * b0 * b0), -6.0 / (b0 * b0 * b0 * b0)};
    return a * b.compose(dv);
}

Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet exp(const Jet& a) {
    cplx e = std::exp(a.coefficients()[0]);
    const cplx dv[4] = {e, e, e, e};
    return a.compose(dv);
}

Jet log(const Jet& a) {
    cplx x = a.coefficients()[0];
    if (x == cplx(0.0)) throw std::domain_error("jet log at zero");
    const cplx dv[4] = {std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)};
    return a.compose(dv);
}

Jet sqrt(const Jet& a) {
    cplx x = a.coefficients()[0];
    if (x == cplx(0.0)) throw std::domain_error("jet sqrt at zero");
    cplx s = std::sqrt(x);
    const cplx dv[4] = {s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)};
    return a.compose(dv);
}

Jet pow(const Jet& a, cplx e) {
    cplx x = a.coefficients()[0];
    if (x == cplx(0.0)) throw std::domain_error("jet pow at zero");
    cplx p = std::pow(x, e);
    const cplx dv[4] = {p, e * p / x, e * (e - 1.0) * p / (x * x), e * (e - 1.0) * (e - 2.0) * p / (x * x * x)};
    return a.compose(dv);
}

Jet sin(const Jet& a) {
    cplx x = a.coefficients()[0];
    const cplx dv[4] = {std::sin(x), std::cos(x), -std::sin(x), -std::cos(x)};
    return a.compose(dv);
}

Jet cos(const Jet& a) {
    cplx x = a.coefficients()[0];
    const cplx dv[4] = {std::cos(x), -std::sin(x), -std::cos(x), std::sin(x)};
    return a.compose(dv);
}

Jet atan2(const Jet& y, const Jet& x) {
    cplx x0 = x.coefficients()[0], y0 = y.coefficients()[0];
    double th0 = std::atan2(y0.real(), x0.real());
    // tan(theta - theta0) = (x0 y - y0 x)/(x0 x + y0 y), which vanishes at the base point
    Jet u = (Jet(x0) * y - Jet(y0) * x) / (Jet(x0) * x + Jet(y0) * y);
    const cplx dv[4] = {th0, 1.0, 0.0, -2.0};
    return u.compose(dv);
}

Jet conj(const Jet& a) {
    Jet r = a;
    for (auto& x : const_cast<std::vector<cplx>&>(r.coefficients())) x = std::conj(x);
    return r;
}

}  // namespace gl3
