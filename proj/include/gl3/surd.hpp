#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>

namespace gl3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// Exact value q * sqrt(r) with r a squarefree nonnegative integer.
class SurdScalar {
public:
    SurdScalar() = default;
    SurdScalar(long long v);
    SurdScalar(Rational q);
    // q * sqrt(radicand); radicand is any nonnegative rational and gets normalized
    SurdScalar(const Rational& q, const Rational& radicand);

    static SurdScalar sqrt(const Rational& r);

    const Rational& coeff() const { return q_; }
    const BigInt& radicand() const { return r_; }
    bool is_zero() const { return q_ == 0; }

    double to_double() const;
    std::string str() const;

    SurdScalar operator-() const;
    SurdScalar operator*(const SurdScalar& o) const;
    SurdScalar operator/(const SurdScalar& o) const;
    // throws std::domain_error when radicands differ and neither side is zero
    SurdScalar operator+(const SurdScalar& o) const;
    SurdScalar operator-(const SurdScalar& o) const;
    bool operator==(const SurdScalar& o) const;

    // sum as a double even when the radicands differ
    static double add_promote(const SurdScalar& a, const SurdScalar& b);

private:
    Rational q_{0};
    BigInt r_{1};
};

// Exact finite sum of surds with distinct squarefree radicands (an element of a
// multiquadratic field).
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(long long v);
    SurdSum(const SurdScalar& s);

    SurdSum operator+(const SurdSum& o) const;
    SurdSum operator-(const SurdSum& o) const;
    SurdSum operator-() const;
    SurdSum operator*(const SurdSum& o) const;
    SurdSum& operator+=(const SurdSum& o);
    bool operator==(const SurdSum& o) const;
    bool is_zero() const { return terms_.empty(); }
    double to_double() const;
    std::string str() const;

private:
    std::map<BigInt, Rational> terms_;  // radicand -> coefficient
    void add_term(const BigInt& r, const Rational& q);
};

// Exact complex number re + i*im over SurdSum.
struct ComplexSurd {
    SurdSum re, im;
    ComplexSurd() = default;
    ComplexSurd(SurdSum r, SurdSum i = SurdSum()) : re(std::move(r)), im(std::move(i)) {}
    static ComplexSurd i_pow(int k);

    ComplexSurd operator+(const ComplexSurd& o) const { return {re + o.re, im + o.im}; }
    ComplexSurd operator-(const ComplexSurd& o) const { return {re - o.re, im - o.im}; }
    ComplexSurd operator-() const { return {-re, -im}; }
    ComplexSurd operator*(const ComplexSurd& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexSurd& operator+=(const ComplexSurd& o) { re += o.re; im += o.im; return *this; }
    ComplexSurd conj() const { return {re, -im}; }
    bool operator==(const ComplexSurd& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace gl3
