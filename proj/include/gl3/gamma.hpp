#pragma once

#include "gl3/types.hpp"
#include "gl3/wigner.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gl3 {

class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, cplx location) : std::domain_error(what), location_(location) {}
    cplx location() const { return location_; }

private:
    cplx location_;
};

// distance to the nearest nonpositive integer, or +inf
double pole_distance(cplx z);
bool near_gamma_pole(cplx z, double tol = 1e-12);

cplx complex_gamma(cplx z);
// 1/Gamma, entire; exactly zero at the poles
cplx complex_rgamma(cplx z);
cplx complex_lgamma(cplx z);  // principal branch of log Gamma for Re z > 0, continued by reflection elsewhere
cplx pi_pow(cplx z);

// prod Gamma(num_i) / prod Gamma(den_j); throws PoleError if a numerator sits on a pole
cplx gamma_ratio(const std::vector<cplx>& num, const std::vector<cplx>& den);

// classical W_{kappa,beta}(z), z > 0
cplx whittaker_W(cplx kappa, cplx beta, double z);
// confluent series M_{kappa,+-beta}; 2beta within 1e-6 of an integer averages beta +- 1e-8
cplx whittaker_W_series(cplx kappa, cplx beta, double z);
// the same by the tail integral U(a,b,z) = Gamma(a)^-1 int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt; needs Re a > 0
cplx whittaker_W_integral(cplx kappa, cplx beta, double z);

// the diagonal entry at row m of the classical Whittaker matrix W^d(y,u)
cplx classical_whittaker(int d, int m, double y, cplx u);
CMat classical_whittaker_matrix(int d, double y, cplx u);

struct GammaMatrix {
    int d = 0;
    cplx u{};
    int eps = 1;
    CVec entries;            // NaN at the recorded poles
    std::vector<int> poles;  // rows m whose numerator gamma is singular
    bool regular() const { return poles.empty(); }
    CMat matrix() const;     // throws PoleError if !regular()
};

GammaMatrix gamma_W(int d, cplx u, int eps);

// D^d(diag-form) with entry s^{-m} at row m
CMat dtilde(int d, cplx s);

// T^d(w, mu); products taken through reduced words with T(ww', mu) = T(w, mu) T(w', mu^w)
CMat t_matrix(int d, Weyl w, const SpectralParameter& mu);
// along an explicit word w = word[0] word[1] ...
CMat t_matrix_word(int d, const std::vector<Weyl>& word, const SpectralParameter& mu);

enum class FRow { last, second_to_last };

// F^d_{m',d}(u) or F^d_{m',d-1}(u)
cplx f_matrix_entry(int d, FRow which, int m_prime, cplx u);
// int_{-1}^{1} (1-x^2)^{-1-u/2} d^d_{m',m}(x) dx, for Re u < -1
cplx f_matrix_quadrature(int d, int m_prime, int m, cplx u);

// Which product the intertwined row carries.
//  w3: bu^{d,sign}_{row} D(v-- wl) Gamma_W(u1,+1) D(wl v--)
//  w4: the same followed by Gamma_W(u2,+1)
enum class IntertwinedKind { w3, w4 };

struct IntertwinedParams {
    IntertwinedKind kind = IntertwinedKind::w3;
    int d = 2;
    int sign = 1;        // the parity of bu^{d,sign}
    int row_offset = 0;  // 0 for bu_d, 1 for bu_{d-1}
    cplx u1{}, u2{};
};

// summand index set and the parity of the bu vectors in the result
std::vector<int> intertwined_support(const IntertwinedParams& p);
int intertwined_result_sign(const IntertwinedParams& p);

// printed coefficient s_m (the result is sum_m c_m s_m bu_m); PoleError at singular parameters
cplx intertwined_coefficient(const IntertwinedParams& p, int m);
// s_{m+2}/s_m as the printed rational function, given as numerator and denominator
struct RatioParts {
    cplx num, den;
};
RatioParts intertwined_ratio(const IntertwinedParams& p, int m);

// the row as a vector, by direct summation of the printed coefficients
CVec intertwined_row(const IntertwinedParams& p);
// the row from the matrices themselves
CVec intertwined_row_direct(const IntertwinedParams& p);
// value at possibly removable singularities: symmetric offsets (h, h/2) in (u1, u2) with Richardson extrapolation
cplx intertwined_coefficient_limit(const IntertwinedParams& p, int m, double h = 1e-5);
// anchor coefficient (largest limit) times the printed ratios
CVec intertwined_row_anchored(const IntertwinedParams& p, double h = 1e-5);
CVec intertwined_row_limit(const IntertwinedParams& p, double h = 1e-5);

// the case-3 constant as printed, d = 3 mod 4, kappa = (d+1)/2
double case3_anchor_constant(int d);

}  // namespace gl3
