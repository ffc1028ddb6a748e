#include "gl3/surd.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gl3 {

namespace mp = boost::multiprecision;

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    static std::mutex mu;
    static std::vector<BigInt> cache{BigInt(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<long long>(cache.size()));
    }
    return cache[n];
}

namespace {

// Split n = s^2 * f with f squarefree over the trial-division factor base;
// a leftover cofactor that is a perfect square is absorbed too.
void square_split(BigInt n, BigInt& s, BigInt& f) {
    s = 1;
    f = 1;
    if (n == 0) { s = 0; return; }
    for (long long p = 2; p <= 1000 && p * p <= n; ++p) {
        long long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (long long i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) f *= p;
    }
    BigInt root = mp::sqrt(n);
    if (root * root == n) s *= root;
    else f *= n;
}

}  // namespace

SurdScalar::SurdScalar(long long v) : q_(v), r_(1) {}
SurdScalar::SurdScalar(Rational q) : q_(std::move(q)), r_(1) {}

SurdScalar::SurdScalar(const Rational& q, const Rational& radicand) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (q == 0 || radicand == 0) { q_ = 0; r_ = 1; return; }
    // sqrt(a/b) = sqrt(a*b)/b
    BigInt a = mp::numerator(radicand), b = mp::denominator(radicand);
    BigInt s, f;
    square_split(a * b, s, f);
    q_ = q * Rational(s, b);
    r_ = f;
}

SurdScalar SurdScalar::sqrt(const Rational& r) { return SurdScalar(Rational(1), r); }

double SurdScalar::to_double() const {
    return q_.convert_to<double>() * std::sqrt(r_.convert_to<double>());
}

std::string SurdScalar::str() const {
    std::ostringstream os;
    os << q_;
    if (r_ != 1 && q_ != 0) os << "*sqrt(" << r_ << ")";
    return os.str();
}

SurdScalar SurdScalar::operator-() const {
    SurdScalar s = *this;
    s.q_ = -s.q_;
    return s;
}

SurdScalar SurdScalar::operator*(const SurdScalar& o) const {
    if (is_zero() || o.is_zero()) return SurdScalar();
    return SurdScalar(q_ * o.q_, Rational(r_ * o.r_));
}

SurdScalar SurdScalar::operator/(const SurdScalar& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero surd");
    if (is_zero()) return SurdScalar();
    // q1 sqrt(r1) / (q2 sqrt(r2)) = (q1/q2) sqrt(r1/r2)
    return SurdScalar(q_ / o.q_, Rational(r_, o.r_));
}

SurdScalar SurdScalar::operator+(const SurdScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (r_ != o.r_) throw std::domain_error("surd addition with unlike radicands");
    SurdScalar s;
    s.q_ = q_ + o.q_;
    s.r_ = s.q_ == 0 ? BigInt(1) : r_;
    return s;
}

SurdScalar SurdScalar::operator-(const SurdScalar& o) const { return *this + (-o); }

bool SurdScalar::operator==(const SurdScalar& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return q_ == o.q_ && r_ == o.r_;
}

double SurdScalar::add_promote(const SurdScalar& a, const SurdScalar& b) {
    return a.to_double() + b.to_double();
}

SurdSum::SurdSum(long long v) {
    if (v != 0) terms_[1] = Rational(v);
}

SurdSum::SurdSum(const SurdScalar& s) {
    if (!s.is_zero()) terms_[s.radicand()] = s.coeff();
}

void SurdSum::add_term(const BigInt& r, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        terms_.emplace(r, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

SurdSum SurdSum::operator+(const SurdSum& o) const {
    SurdSum s = *this;
    s += o;
    return s;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [r, q] : o.terms_) add_term(r, q);
    return *this;
}

SurdSum SurdSum::operator-() const {
    SurdSum s = *this;
    for (auto& [r, q] : s.terms_) q = -q;
    return s;
}

SurdSum SurdSum::operator-(const SurdSum& o) const { return *this + (-o); }

SurdSum SurdSum::operator*(const SurdSum& o) const {
    SurdSum out;
    for (const auto& [r1, q1] : terms_) {
        for (const auto& [r2, q2] : o.terms_) {
            SurdScalar p(q1 * q2, Rational(r1 * r2));
            out.add_term(p.radicand(), p.coeff());
        }
    }
    return out;
}

bool SurdSum::operator==(const SurdSum& o) const { return terms_ == o.terms_; }

double SurdSum::to_double() const {
    double v = 0.0;
    for (const auto& [r, q] : terms_) v += q.convert_to<double>() * std::sqrt(r.convert_to<double>());
    return v;
}

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, q] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << SurdScalar(q, Rational(r)).str();
    }
    return os.str();
}

ComplexSurd ComplexSurd::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {SurdSum(1), SurdSum()};
        case 1: return {SurdSum(), SurdSum(1)};
        case 2: return {SurdSum(-1), SurdSum()};
        default: return {SurdSum(), SurdSum(-1)};
    }
}

}  // namespace gl3
