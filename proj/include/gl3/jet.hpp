#pragma once

#include "gl3/types.hpp"

#include <vector>

namespace gl3 {

// Truncated multivariate Taylor expansion of total degree <= 3 with complex
// coefficients. A jet with nvars() == 0 is a plain constant and mixes freely
// with jets of any variable count.
//
// valid_degree() tracks the degree up to which coefficients are exact: it
// drops by one on differentiation, so stacking a third derivative onto a
// degree-3 seed still yields an exact constant term.
class Jet {
public:
    static constexpr int kMaxDegree = 3;
    static constexpr int kMaxVars = 8;

    Jet() : Jet(0.0) {}
    Jet(double v) : Jet(cplx(v, 0.0)) {}
    Jet(cplx v);
    Jet(int nvars, cplx v);
    static Jet variable(int nvars, int index, cplx value);

    int nvars() const { return n_; }
    int valid_degree() const { return deg_; }
    cplx value() const;
    // coefficient of the monomial with the given exponents (length nvars)
    cplx coeff(const std::vector<int>& exponents) const;
    // mixed partial derivative value, e.g. {0,0,1} = d^2/dv0^2 d/dv1
    cplx partial(const std::vector<int>& vars) const;

    Jet d(int var) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);
    Jet operator-() const;

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    // f(a) = sum_k f^{(k)}(a0)/k! (a-a0)^k with derivs = {f(a0), f'(a0), f''(a0), f'''(a0)}
    Jet compose(const cplx derivs[4]) const;

    const std::vector<cplx>& coefficients() const { return c_; }

private:
    void promote(int n);
    int n_ = 0;
    int deg_ = kMaxDegree;
    std::vector<cplx> c_;
};

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, cplx e);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet atan2(const Jet& y, const Jet& x);
Jet conj(const Jet& a);  // coefficientwise, valid for functions of real variables

// number of monomials of total degree <= 3 in n variables
int jet_size(int nvars);

}  // namespace gl3
