#pragma once

#include "gl3/types.hpp"

#include <random>

namespace gl3::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611ULL);
    return g;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline cplx random_complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }

inline SpectralParameter random_mu(double r = 2.0) {
    return SpectralParameter::from_two(random_complex(r), random_complex(r));
}

template <class M>
double max_abs_diff(const M& a, const M& b) {
    double e = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i) e = std::max(e, std::abs(a.data()[i] - b.data()[i]));
    return e;
}

}  // namespace gl3::testing
