#include "gl3/clebsch_gordan.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gl3 {

namespace {

Rational fact_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
    BigInt n = 1, m = 1;
    for (int x : num) n *= factorial(x);
    for (int x : den) m *= factorial(x);
    return Rational(n, m);
}

}  // namespace

bool cg_selection(int d, int k, int a, int m, int i) {
    if (d < 0 || d + a < 0) return false;
    return std::abs(m) <= d && std::abs(i) <= k && std::abs(m + i) <= d + a &&
           std::abs(d - k) <= d + a && d + a <= d + k;
}

SurdScalar cg_prefactor(int d, int k, int a, int m, int i) {
    Rational base = Rational(2 * d + 2 * a + 1) *
                    fact_ratio({2 * d + a - k}, {k - i, k + i, 2 * d + a + k + 1});
    Rational tail = a <= 0 ? fact_ratio({d - m, d + m}, {d + a - i - m, d + a + i + m})
                           : fact_ratio({d + a - i - m, d + a + i + m}, {d - m, d + m});
    SurdScalar s = SurdScalar::sqrt(base * tail);
    if (a <= 0 && (i % 2 != 0)) s = -s;
    return s;
}

SurdScalar cg(int d, int k, int a, int m, int i) {
    if (k != 1 && k != 2) throw std::invalid_argument("cg: only k = 1, 2 are supported");
    if (!cg_selection(d, k, a, m, i)) return SurdScalar();
    const SurdScalar two_root6 = SurdScalar(Rational(2), Rational(6));
    if (k == 2) {
        switch (a) {
            case -2:
            case 2: return two_root6 * cg_prefactor(d, 2, a, m, i);
            case -1: return two_root6 * SurdScalar(i * (d + 1) + 2 * m) * cg_prefactor(d, 2, a, m, i);
            case 1: return two_root6 * SurdScalar(d * i - 2 * m) * cg_prefactor(d, 2, a, m, i);
            default: {
                long long p = 2LL * d * d * (i * i - 1) + 1LL * d * (5 * i * i + 6 * i * m - 2) +
                              3LL * (i + m) * (i + 2 * m);
                return SurdScalar(2 * p) * cg_prefactor(d, 2, 0, m, i);
            }
        }
    }
    switch (a) {
        case -1: return -SurdScalar(Rational(1), Rational(2)) * cg_prefactor(d, 1, -1, m, i);
        case 1: return SurdScalar(Rational(1), Rational(2)) * cg_prefactor(d, 1, 1, m, i);
        default: return SurdScalar(-2LL * (i * (d + 1) + m)) * cg_prefactor(d, 1, 0, m, i);
    }
}

double cg_value(int d, int k, int a, int m, int i) {
    if (!cg_selection(d, k, a, m, i)) return 0.0;
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<double>> cache;
    const std::vector<double>* tab = nullptr;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(d, k, a);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<double> t((2 * d + 1) * (2 * k + 1));
            for (int mm = -d; mm <= d; ++mm)
                for (int ii = -k; ii <= k; ++ii) t[(mm + d) * (2 * k + 1) + ii + k] = cg(d, k, a, mm, ii).to_double();
            it = cache.emplace(key, std::move(t)).first;
        }
        tab = &it->second;  // std::map nodes are stable
    }
    return (*tab)[(m + d) * (2 * k + 1) + i + k];
}

CGTable cg_matrix(int d, int k, int a) {
    CGTable t{d, k, a, {}};
    t.entries.reserve((2 * d + 1) * (2 * k + 1));
    for (int m = -d; m <= d; ++m)
        for (int i = -k; i <= k; ++i) t.entries.push_back(cg(d, k, a, m, i));
    return t;
}

std::array<SurdScalar, 5> cgb_vector(int d) {
    const SurdScalar r = SurdScalar(Rational(1, 3), Rational(6));
    return {r * SurdScalar(-2LL * (d + 1)), r * SurdScalar(-(d + 3)), r * SurdScalar(-3),
            r * SurdScalar(d - 2), r * SurdScalar(2LL * d)};
}

double cg_sum_identity(int d, int m, int a) {
    if (std::abs(m) > d) return 0.0;
    double lhs = 0.0;
    for (int s : {1, -1}) {
        // s = +1: C_{m-1,+1} sqrt(d(d+1)-m(m-1)); s = -1: C_{m+1,-1} sqrt(d(d+1)-m(m+1))
        int mm = m - s;
        if (std::abs(mm) > d) continue;
        lhs += cg(d, 2, a, mm, s).to_double() * std::sqrt(double(d * (d + 1) - m * (m - s)));
    }
    double rhs = (cg(d, 2, a, m, 0) * cgb_vector(d)[a + 2]).to_double();
    return lhs - rhs;
}

SurdScalar three_j(int j1, int j2, int j3, int m1, int m2, int m3) {
    if (m1 + m2 + m3 != 0) return SurdScalar();
    // (j1 j2 j3; m1 m2 -M) = (-1)^{j1-j2+M}/sqrt(2 j3+1) <j1 m1 j2 m2 | j3 M>
    int M = -m3;
    SurdScalar c = cg(j2, j1, j3 - j2, m2, m1);
    if (c.is_zero()) return c;
    int e = j1 - j2 + M;
    SurdScalar s = c / SurdScalar::sqrt(Rational(2 * j3 + 1));
    return (e % 2 != 0) ? -s : s;
}

}  // namespace gl3
