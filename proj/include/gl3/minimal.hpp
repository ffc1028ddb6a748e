#pragma once

#include "gl3/coefficient_flow.hpp"
#include "gl3/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gl3 {

// (i t1, i t2, -i(t1+t2)) or (x+it, -2it, -x+it)
struct StandardMu {
    enum class Kind { unitary, shifted };
    Kind kind = Kind::unitary;
    double a = 0.0, b = 0.0;  // (t1, t2) or (x, t)

    static StandardMu unitary(double t1, double t2);
    static StandardMu shifted(double x, double t);
    // recognizes either form within tol; throws if mu is in neither
    static StandardMu from_mu(const SpectralParameter& mu, double tol = 1e-9);
    SpectralParameter mu() const;
};

class AmbiguousClassification : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class GFamily { g1, g2, g3, g4 };

CVec g_vector(GFamily which, int d, int delta, int eps, const SpectralParameter& mu);
// g^d_{2,k,m} as the unrolled product; g^d_{2,0,0} = 1/2
cplx g2_coefficient(int d, int k, int m, const SpectralParameter& mu);

struct MinimalClass {
    int case_tag = 1;                 // 1..6
    int d = 0;
    SpectralParameter mu;
    std::vector<CVec> basis;
    std::vector<std::string> labels;  // e.g. "g2^{7,0,-}"
    std::vector<Parity> parities;     // chi_{(-1)^delta, eps} of each basis vector
    VCharacter chi;                   // the character attached to weight d
    double lowering_residual = 0.0;   // max over basis of |Y^-1 v| + |Y^-2 v|, relative
};

MinimalClass classify_minimal(int d, const StandardMu& mu);

// orthonormal columns spanning ker Y^-1_mu cap ker Y^-2_mu
Eigen::MatrixXcd minimal_nullspace(int d, const SpectralParameter& mu, double rel_threshold = 1e-10);

// sine of the largest principal angle; 1 when the dimensions differ
double subspace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd span_of(const std::vector<CVec>& vs);

double lowering_residual(const SpectralParameter& mu, const CVec& f);

// whether f W^d(., mu, psi_11) vanishes identically, by the rule table; mu in standard form
bool whittaker_vanishing(int d, const StandardMu& mu, const CVec& f, double tol = 1e-8);

struct MinimalKType {
    int d0 = 0;
    CVec f;
    std::string family;  // the admissible mu, in words
    // a representative mu for parameters (x, t); x ignored for d0 >= 2
    SpectralParameter mu(double x, double t) const;
};
MinimalKType minimal_ktype_parameters(int d0);

struct Y0Eigen {
    std::string vector;
    cplx eigenvalue;
    double residual = 0.0;
    bool purely_imaginary = false;
};

struct Y0Diagnostic {
    int d = 0;
    std::vector<Y0Eigen> eigen;
    bool excluded = false;  // a real nonzero eigenvalue on an eigenvector
    cplx printed{};         // -(d-1) sqrt(6d(2d-1)) / sqrt((d+1)(2d+3)) for d >= 2
};

Y0Diagnostic y0_skew_exclusion(int d, const SpectralParameter& mu);

struct GDWhittFEReport {
    int which = 1;
    int d = 0;
    double t = 0.0;
    std::vector<std::string> pairs;
    std::vector<double> ratio_spread;  // max relative deviation of component ratios from their mean
    std::vector<double> residual;      // |row - c g| / |row| with the least-squares c
    std::vector<cplx> constants;
    bool ok = true;
};

// the proposition's four cases compared against intertwined rows
GDWhittFEReport verify_gdwhittfes(int which, int d, double t = 0.0);

}  // namespace gl3
