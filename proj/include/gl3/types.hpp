#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl3 {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;
inline const cplx kI{0.0, 1.0};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Vector of length 2d+1 addressed by m in [-d, d].
template <class T>
class CenterIndexedVector {
public:
    CenterIndexedVector() = default;
    explicit CenterIndexedVector(int d, T fill = T(0)) : d_(d), v_(2 * d + 1, fill) {
        if (d < 0) throw IndexError("negative dimension parameter");
    }
    int d() const { return d_; }
    int size() const { return 2 * d_ + 1; }
    bool in_range(int m) const { return m >= -d_ && m <= d_; }
    T& operator()(int m) { check(m); return v_[m + d_]; }
    const T& operator()(int m) const { check(m); return v_[m + d_]; }
    std::vector<T>& data() { return v_; }
    const std::vector<T>& data() const { return v_; }

private:
    void check(int m) const {
        if (!in_range(m)) throw IndexError("center index " + std::to_string(m) + " outside [-" +
                                           std::to_string(d_) + "," + std::to_string(d_) + "]");
    }
    int d_ = 0;
    std::vector<T> v_{T(0)};
};

// (2d+1)x(2d+1) matrix addressed by (m', m) in [-d, d]^2; rows m' top to bottom from -d.
template <class T>
class CenterIndexedMatrix {
public:
    CenterIndexedMatrix() = default;
    explicit CenterIndexedMatrix(int d, T fill = T(0))
        : d_(d), n_(2 * d + 1), v_(static_cast<size_t>(n_) * n_, fill) {
        if (d < 0) throw IndexError("negative dimension parameter");
    }
    static CenterIndexedMatrix identity(int d) {
        CenterIndexedMatrix M(d);
        for (int m = -d; m <= d; ++m) M(m, m) = T(1);
        return M;
    }
    int d() const { return d_; }
    int size() const { return n_; }
    bool in_range(int m) const { return m >= -d_ && m <= d_; }
    T& operator()(int mp, int m) { check(mp); check(m); return v_[(mp + d_) * n_ + (m + d_)]; }
    const T& operator()(int mp, int m) const {
        check(mp); check(m);
        return v_[(mp + d_) * n_ + (m + d_)];
    }
    CenterIndexedMatrix operator*(const CenterIndexedMatrix& o) const {
        if (o.d_ != d_) throw IndexError("dimension mismatch");
        CenterIndexedMatrix R(d_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& a = v_[i * n_ + k];
                for (int j = 0; j < n_; ++j) R.v_[i * n_ + j] += a * o.v_[k * n_ + j];
            }
        return R;
    }
    CenterIndexedMatrix operator+(const CenterIndexedMatrix& o) const {
        CenterIndexedMatrix R = *this;
        for (size_t i = 0; i < v_.size(); ++i) R.v_[i] += o.v_[i];
        return R;
    }
    CenterIndexedMatrix operator-(const CenterIndexedMatrix& o) const {
        CenterIndexedMatrix R = *this;
        for (size_t i = 0; i < v_.size(); ++i) R.v_[i] = R.v_[i] - o.v_[i];
        return R;
    }
    CenterIndexedVector<T> row(int mp) const {
        CenterIndexedVector<T> r(d_);
        for (int m = -d_; m <= d_; ++m) r(m) = (*this)(mp, m);
        return r;
    }
    std::vector<T>& data() { return v_; }
    const std::vector<T>& data() const { return v_; }

private:
    void check(int m) const {
        if (!in_range(m)) throw IndexError("center index " + std::to_string(m) + " outside [-" +
                                           std::to_string(d_) + "," + std::to_string(d_) + "]");
    }
    int d_ = 0;
    int n_ = 1;
    std::vector<T> v_{T(0)};
};

using CVec = CenterIndexedVector<cplx>;
using CMat = CenterIndexedMatrix<cplx>;

// row vector times matrix
template <class T>
CenterIndexedVector<T> operator*(const CenterIndexedVector<T>& v, const CenterIndexedMatrix<T>& M) {
    if (v.d() != M.d()) throw IndexError("dimension mismatch");
    CenterIndexedVector<T> r(v.d());
    for (int m = -v.d(); m <= v.d(); ++m)
        for (int k = -v.d(); k <= v.d(); ++k) r(m) += v(k) * M(k, m);
    return r;
}

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T s = a[i][0] * b[0][j];
            s += a[i][1] * b[1][j];
            s += a[i][2] * b[2][j];
            c[i][j] = s;
        }
    return c;
}

template <class T>
Mat3<T> transpose(const Mat3<T>& a) {
    Mat3<T> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
    return t;
}

template <class To, class From>
Mat3<To> mat_cast(const Mat3<From>& a) {
    Mat3<To> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = To(a[i][j]);
    return t;
}

struct SpectralParameter {
    cplx mu1, mu2, mu3;
    SpectralParameter() = default;
    SpectralParameter(cplx a, cplx b, cplx c) : mu1(a), mu2(b), mu3(c) {
        if (std::abs(a + b + c) > 1e-12 * (1.0 + std::abs(a) + std::abs(b) + std::abs(c)))
            throw std::invalid_argument("spectral parameter must sum to zero");
    }
    static SpectralParameter from_two(cplx a, cplx b) { return {a, b, -a - b}; }
    cplx operator[](int i) const { return i == 0 ? mu1 : (i == 1 ? mu2 : mu3); }
    SpectralParameter operator-() const { return {-mu1, -mu2, -mu3}; }
    SpectralParameter conj() const { return {std::conj(mu1), std::conj(mu2), std::conj(mu3)}; }
};

}  // namespace gl3
