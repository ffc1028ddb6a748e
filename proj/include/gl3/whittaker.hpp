#pragma once

#include "gl3/types.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gl3 {

class ContourError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Re(s) = (s1, s2), truncated to |Im s_j| <= T; T = 0 picks 30 + 5 max|Im mu|
struct ContourSpec {
    double s1 = 1.0, s2 = 1.0;
    double T = 0.0;
    double panel_width = 2.0;
    int nodes_per_panel = 20;
    bool adaptive = true;   // double T until the change is below target/10
    double target = 1e-10;  // relative to the largest component
    int max_doublings = 3;
};

// psi_n(x) = e(n1 x1 + n2 x2)
struct CharacterParams {
    double n1 = 1.0, n2 = 1.0;
    bool degenerate() const { return n1 * n2 == 0.0; }
};

struct EvalResult {
    cplx value{};
    double error = 0.0;
    long nodes = 0;
};

struct WStarResult {
    int d = 0;
    CVec value;                 // components m' = -d..d
    std::vector<double> error;  // truncation-doubling difference per component
    long nodes = 0;             // integrand evaluations (node pairs)
    double T = 0.0;
    EvalResult component(int mp) const;
};

cplx lambda_alpha(const std::array<int, 3>& alpha, const SpectralParameter& mu);
cplx lambda_star(int d, const SpectralParameter& mu);

// prod Gamma((beta_i+s1-mu_i)/2) Gamma((eta_i+s2+mu_i)/2) / Gamma((s1+s2+sum(beta+eta)-2d)/2)
cplx g_kernel(int d, const std::array<int, 3>& beta, const std::array<int, 3>& eta, const std::array<cplx, 2>& s,
              const SpectralParameter& mu);
// G~^d(l, s, mu) with the d = 0, d = 1 and d >= 2 index maps
cplx g_tilde(int d, int l1, int l2, const std::array<cplx, 2>& s, const SpectralParameter& mu);
cplx g_vector_component(int d, int mp, const std::array<cplx, 2>& s, const SpectralParameter& mu);
CVec g_vector_mellin(int d, const std::array<cplx, 2>& s, const SpectralParameter& mu);

// rightmost s1 and s2 poles of the kernels in G^d
std::array<double, 2> rightmost_poles(int d, const SpectralParameter& mu);
ContourSpec default_contour(int d, const SpectralParameter& mu);
void check_contour(int d, const SpectralParameter& mu, const ContourSpec& c);

// (1/4pi^2) int (pi y1)^{1-s1} (pi y2)^{1-s2} G^d(s, mu) ds/(2 pi i)^2
WStarResult w_star(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c);
WStarResult w_star(int d, double y1, double y2, const SpectralParameter& mu);
// same nodes and summation order, no OpenMP
WStarResult w_star_serial(int d, double y1, double y2, const SpectralParameter& mu, const ContourSpec& c);

std::vector<WStarResult> w_star_grid(int d, const std::vector<std::array<double, 2>>& ys, const SpectralParameter& mu,
                                     const ContourSpec& c, bool parallel = true);

// the same normalization for an arbitrary kernel s -> F(s), at fixed truncation
using MellinKernel = std::function<cplx(const std::array<cplx, 2>&)>;
EvalResult mellin_barnes_2d(const MellinKernel& F, double y1, double y2, const ContourSpec& c);

struct OracleOptions {
    int half_periods = 14;      // per side, before extrapolation
    int nodes = 8;              // Gauss-Legendre nodes per half period
    double de_step = 0.125;     // trapezoid step in the double-exponential tails
    double inner_panel = 1.0;   // widest Gauss-Legendre panel on finite pieces
};

struct OracleResult {
    CMat value;
    long evaluations = 0;
    double extrapolation_error = 0.0;
};

// W^d(y, mu, psi) = int_{U(R)} I^d(w_l u y, mu) conj(psi(u)) du; needs Re(mu1-mu2), Re(mu2-mu3) > 0
OracleResult jacquet_full_matrix(int d, double y1, double y2, const SpectralParameter& mu, const CharacterParams& psi,
                                 const OracleOptions& o = {});
// f W^d(y, mu, psi)
CVec jacquet_full_oracle(int d, double y1, double y2, const SpectralParameter& mu, const CharacterParams& psi,
                         const CVec& f, const OracleOptions& o = {});
// the integrand I^d(w_l u, mu) at u = [[1,x2,x3],[0,1,x1],[0,0,1]]
CMat jacquet_integrand(int d, const SpectralParameter& mu, double x1, double x2, double x3);

// W^d_{row,0}(y, mu, psi_{1,1}) for row = +-d, by the two-dimensional reduction; needs mu1 - mu2 = d - 1
EvalResult jacquet_central_oracle(int d, double y1, double y2, const SpectralParameter& mu, int row,
                                  const OracleOptions& o = {});
// mu = ((d-1)/2+it, -(d-1)/2+it, -2it)
SpectralParameter minimal_line_mu(int d, double t);

struct MellinResidual {
    cplx residual{};
    double scale = 0.0;  // largest term in the identity
};
// which = 1, 2: the transported Delta_1, Delta_2 equation for component m'
MellinResidual mellin_pde_residual(int which, int d, int mp, const std::array<cplx, 2>& s, const SpectralParameter& mu);

struct LadderReport {
    double max_residual = 0.0;  // max |S phi_{m'} - (+-c) phi_{m'+-1}| over the grid
    double scale = 0.0;         // max of |phi_{m'}|, |c phi_{m'+-1}| over the grid
    double coefficient = 0.0;   // sqrt(d(d+1) - m'(m'+-1))
};
LadderReport ladder_check(int d, int mp, int sign, const std::vector<std::array<double, 2>>& ys,
                          const SpectralParameter& mu);

struct BarnesResult {
    cplx lhs{}, rhs{};
    double residual = 0.0;  // |lhs - rhs| / max(1, |rhs|)
    double sigma = 0.0;
};
// sigma = NaN picks the midpoint of the separating strip
BarnesResult barnes_second_lemma_check(cplx a, cplx b, cplx c, cplx d, cplx e,
                                       double sigma = std::numeric_limits<double>::quiet_NaN(), double T = 40.0);

struct GrowthReport {
    double ratio = 0.0;        // |W(y1, y2_small)| / |W(y1, y2_large)|
    double lower_bound = 0.0;  // (y2_large / y2_small)^{d-1-eps}
    double exponent = 0.0;     // -dlog|W|/dlog y2 from y2_small to y2_small/2; tends to d-2
};
// the central entry of W^{d*} at mu = (d-1, 0, 1-d), contour (eps, d-1+eps)
GrowthReport bad_whittaker_growth(int d, double y1, double y2_small, double y2_large, double eps = 0.25);

// singular values of the Gram matrix of the three rows of W^1 sampled on ys
Eigen::VectorXd whittaker_row_gram_singular_values(const SpectralParameter& mu,
                                                   const std::vector<std::array<double, 2>>& ys,
                                                   const OracleOptions& o = {});

}  // namespace gl3
