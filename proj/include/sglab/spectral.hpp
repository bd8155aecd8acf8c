#pragma once

#include "sglab/grid.hpp"

namespace sglab {

// Dissipation rate of mode k for the operator (d/dt - Laplacian/2 + m^2):
// omega_k = m^2 + 2 pi^2 |k|^2.
inline double mode_rate(int kx, int ky, double m2) {
    return m2 + 2.0 * kPi * kPi * (double(kx) * kx + double(ky) * ky);
}

// phi1(z) = (1 - e^{-z})/z, the exponential-integrator weight.
inline double phi1(double z) {
    if (std::abs(z) < 1e-6) return 1.0 - z / 2.0 + z * z / 6.0;
    return (1.0 - std::exp(-z)) / z;
}

// Littlewood-Paley projection onto the dyadic band N. Bands partition the
// grid frequencies: N=1 holds |k| <= 1, band N holds N/2 < |k| <= N, and the
// top band N = n/2 absorbs everything above n/4 (including the corner modes).
FieldSnapshot lp_project(const FieldSnapshot& f, int N);

// Weighted Hoelder-Besov norm sup_N N^alpha ||P_N f||_inf.
double besov_norm(const FieldSnapshot& f, double alpha);

// e^{t(-m^2 + Laplacian/2)} f via the exact spectral multiplier.
FieldSnapshot heat_semigroup(const FieldSnapshot& f, double t, double m2);

// Duhamel integral Duh[F](t) = int_0^t e^{(t-s)(-m^2+Lap/2)} F(s) ds,
// discretized by the exponential-Euler rule per Fourier mode. Frame 0 is 0.
SpaceTimeField duhamel(const SpaceTimeField& F, double m2);

// Solution-space norm: C_t^0 C_x^eta plus a Lipschitz-in-spacetime part
// weighted by s^{(1-eta)/2} at the earlier time s (relative to the window
// start). The supremum is estimated over all nearest-neighbour pairs plus
// `sample_pairs` random pairs drawn from a fixed internal stream.
double s_norm(const SpaceTimeField& theta, double eta, int sample_pairs = 4096);

// Nonlinearity-space norm sup_{t>0,x} t^{(1-eta)/2} |F(t,x)|.
double n_norm(const SpaceTimeField& F, double eta);

double max_abs(const FieldSnapshot& f);
double max_imag_abs(const SpaceTimeField& f);

}  // namespace sglab
