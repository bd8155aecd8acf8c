#include "sglab/grid.hpp"

#include <cmath>

#include "sglab/fft.hpp"
#include "sglab/profiles.hpp"
#include "sglab/rng.hpp"
#include "sglab/spectral.hpp"

namespace sglab {

double bump(double u) {
    double a = std::abs(u);
    if (a >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - a * a));
}

FieldSnapshot profile_bump(int n) {
    FieldSnapshot f(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x = torus_wrap(double(i) / n - 0.5);
            double y = torus_wrap(double(j) / n - 0.5);
            f.at(i, j) = bump(2.0 * std::sqrt(x * x + y * y) / 0.8);
        }
    return f;
}

FieldSnapshot profile_modes(int n) {
    FieldSnapshot f(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x = double(i) / n, y = double(j) / n;
            f.at(i, j) = std::sin(kTwoPi * x) + 0.5 * std::cos(kTwoPi * (x + 2 * y)) +
                         0.25 * std::sin(kTwoPi * (3 * y - x));
        }
    return f;
}

FieldSnapshot profile_rough(int n, std::uint64_t seed, double spectral_decay) {
    FieldSnapshot f(n, 0.0);
    std::uint64_t key = rng::SeedLineage{seed, 0, 101}.key();
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i) {
        int kx = freq_of(i, n);
        for (int j = 0; j < n; ++j) {
            int ky = freq_of(j, n);
            auto [g1, g2] = rng::normal_pair(key, c++);
            double kk = std::sqrt(double(kx) * kx + double(ky) * ky);
            double amp = std::pow(1.0 + kk, -spectral_decay);
            f.at(i, j) = cplx(g1, g2) * amp;
        }
    }
    fft::to_phys(f.values.data(), n);
    // hermitize: keep the real part, a real random field with the same spectrum
    for (auto& v : f.values) v = v.real();
    return f;
}

FieldSnapshot named_profile(const std::string& name, int n, std::uint64_t seed) {
    if (name == "bump") return profile_bump(n);
    if (name == "modes") return profile_modes(n);
    if (name == "rough") return profile_rough(n, seed, 1.5);
    if (name == "zero") return FieldSnapshot(n, 0.0);
    throw std::invalid_argument("unknown profile '" + name + "' (bump|modes|rough|zero)");
}

FieldSnapshot scaled_to_besov(const FieldSnapshot& f, double eta, double target_norm) {
    double norm = besov_norm(f, eta);
    FieldSnapshot out = f;
    if (norm == 0.0) return out;
    double scale = target_norm / norm;
    for (auto& v : out.values) v *= scale;
    return out;
}

}  // namespace sglab
