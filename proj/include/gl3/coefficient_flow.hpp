#pragma once

#include "gl3/lie.hpp"
#include "gl3/surd.hpp"
#include "gl3/types.hpp"
#include "gl3/wigner.hpp"

#include <Eigen/Dense>

#include <vector>

namespace gl3 {

// chi_{(-1)^delta, eps}
struct Parity {
    int delta = 0;  // 0 or 1
    int eps = 1;    // +-1
    VCharacter character() const { return {delta ? -1 : 1, eps}; }
};

// Y^a_mu on C^{2d+1} -> C^{2d+2a+1}, vectors in the bv basis
CVec y_action(int a, const SpectralParameter& mu, const CVec& f);
// the same map as a (2d+2a+1) x (2d+1) matrix acting on column coordinates
Eigen::MatrixXcd y_matrix(int a, int d, const SpectralParameter& mu);

// Coefficient of bv^{d+a}_{j+shift} in Y^a_mu bv^d_j, written c0 + c12 (mu1-mu2) + c3 mu3
struct LinearInMu {
    SurdSum c0, c12, c3;
    cplx eval(const SpectralParameter& mu) const {
        return c0.to_double() + c12.to_double() * (mu.mu1 - mu.mu2) + c3.to_double() * mu.mu3;
    }
    bool operator==(const LinearInMu& o) const { return c0 == o.c0 && c12 == o.c12 && c3 == o.c3; }
};
LinearInMu y_coefficient_exact(int a, int d, int j, int shift);

// Y^hat^a_mu = -(-1)^a sqrt((2d+2a+1)/(2d+1)) Y^{-a}_mu; f has dimension d+a, the result dimension d
CVec adjoint_y(int a, int d, const SpectralParameter& mu, const CVec& f);

// the dual-path oracle: Y^a_mu f from X_0 (a even) or X_1 (a odd) applied to
// sum_m' f_m' p_{rho+mu}(y) D^d_{m',0}(k), projected onto D^{d+a} by sampling in k
double y_action_pointwise_check(int a, const SpectralParameter& mu, const CVec& f, const IwasawaPoint& p);

// R^{d,1}_{mu,j} bu^d_j (variant 1) or R^{d,2}_{mu,j} bu^d_j (variant 2), by composing y_action
CVec raising_R(int variant, int d, const SpectralParameter& mu, int j, int eps);
// the printed two-term right side for the same quantity
CVec raising_R_closed(int variant, int d, const SpectralParameter& mu, int j, int eps);
// conj(R^hat^{d,a}_{mu,j} bu^{d+a}_j) by composing adjoints, and the printed three-term form
CVec raising_R_adjoint(int variant, int d, const SpectralParameter& mu, int j, int eps);
CVec raising_R_adjoint_closed(int variant, int d, const SpectralParameter& mu, int j, int eps);

// indices m >= kappa, m = delta mod 2, m <= d, with bu^{d,eps}_m nonzero
std::vector<int> v_space_indices(int d, Parity chi, int kappa);
int v_space_dim(int d, Parity chi, int kappa);
int minimal_start(Parity chi, int kappa);  // d0
int minimal_index(int d, Parity chi, int kappa);  // j_min

struct GramReport {
    int d0 = 0;
    int d_max = 0;
    bool determined = true;     // every level's form was fixed by the adjoint relations
    double residual = 0.0;      // worst least-squares residual of the adjoint relations
    double max_error = 0.0;     // worst deviation from bu . bu^T
    std::vector<int> dims;      // dim V^d for d = d0..d_max
    std::vector<Eigen::MatrixXcd> gram;  // per level, rows/cols ordered as v_space_indices
};

// Propagates the sesquilinear form on V^d from <bu_min, bu_min> at d0 through the
// adjoint relations <Y^a_mu u, v> = <u, proj Y^hat^a_{-conj mu} v>, a = 0, 1, 2.
GramReport gram_recursion_check(int d_max, const SpectralParameter& mu, Parity chi, int kappa);

struct SpanReport {
    int rank = 0;
    int expected = 0;
    double leak = 0.0;  // largest component outside V^{d_target}
    Eigen::MatrixXcd basis;  // columns, orthonormal
};

// words in Y^0, Y^1, Y^2 applied to bu^{d0}_min
SpanReport generate_minimal_span(int d0, Parity chi, int kappa, const SpectralParameter& mu, int d_target);

// Y^a_mu (f D^d(v-- wl)) + (Y^a_{-mu^wl} f) D^{d+a}(v-- wl)
double duality_check(int a, const SpectralParameter& mu, const CVec& f);

// Y^a_mu (f T^d(w^-1, mu^w)) - (Y^a_{mu^w} f) T^{d+a}(w^-1, mu^w); throws PoleError at integral differences
double intertwining_compatibility_check(int a, const SpectralParameter& mu, Weyl w, const CVec& f);

int multiplicity(int d0, int d);

// bu^{d,eps}_j as a vector
CVec bu(int d, int j, int eps);

}  // namespace gl3
