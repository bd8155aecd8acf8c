#pragma once

#include <complex>
#include <vector>

#include "sglab/grid.hpp"

namespace sglab::fft {

// In-place 2d complex transform of an n x n row-major array.
// sign -1 = forward (unnormalized sum), +1 = inverse (unnormalized).
// Plans are cached per (n, sign) and use FFTW_ESTIMATE so that results are
// reproducible across runs; execution is thread-safe on distinct arrays.
void c2c_2d(cplx* data, int n, int sign);

// In-place 1d complex transform of length len with unit stride.
void c2c_1d(cplx* data, int len, int sign);

// Forward transform producing Fourier coefficients f_hat(k) = (1/n^2) sum_x f(x) e^{-2pi i kx}.
inline void to_modes(cplx* data, int n) {
    c2c_2d(data, n, -1);
    double inv = 1.0 / (double(n) * n);
    for (std::size_t i = 0; i < std::size_t(n) * n; ++i) data[i] *= inv;
}

// Inverse of to_modes: f(x) = sum_k f_hat(k) e^{2pi i kx}.
inline void to_phys(cplx* data, int n) { c2c_2d(data, n, +1); }

}  // namespace sglab::fft
