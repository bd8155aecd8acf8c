#include "sglab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sglab/fft.hpp"
#include "sglab/rng.hpp"

namespace sglab {

namespace {

bool in_band(double kabs, int N, int n) {
    if (N == 1) return kabs <= 1.0 + 1e-12;
    bool top = (2 * N >= n);
    double lo = N / 2.0, hi = N;
    if (top) return kabs > lo + 1e-12;
    return kabs > lo + 1e-12 && kabs <= hi + 1e-12;
}

}  // namespace

FieldSnapshot lp_project(const FieldSnapshot& f, int N) {
    int n = f.n;
    if (N < 1 || (N & (N - 1)) != 0 || N > n / 2)
        throw std::invalid_argument("lp_project: N must be dyadic in [1, n/2]");
    FieldSnapshot out = f;
    fft::to_modes(out.values.data(), n);
    for (int i = 0; i < n; ++i) {
        int kx = freq_of(i, n);
        for (int j = 0; j < n; ++j) {
            int ky = freq_of(j, n);
            double kabs = std::sqrt(double(kx) * kx + double(ky) * ky);
            if (!in_band(kabs, N, n)) out.at(i, j) = 0.0;
        }
    }
    fft::to_phys(out.values.data(), n);
    return out;
}

double max_abs(const FieldSnapshot& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double besov_norm(const FieldSnapshot& f, double alpha) {
    int n = f.n;
    FieldSnapshot modes = f;
    fft::to_modes(modes.values.data(), n);
    double norm = 0.0;
    for (int N = 1; N <= n / 2; N *= 2) {
        FieldSnapshot band(n, f.time);
        for (int i = 0; i < n; ++i) {
            int kx = freq_of(i, n);
            for (int j = 0; j < n; ++j) {
                int ky = freq_of(j, n);
                double kabs = std::sqrt(double(kx) * kx + double(ky) * ky);
                band.at(i, j) = in_band(kabs, N, n) ? modes.at(i, j) : cplx(0.0);
            }
        }
        fft::to_phys(band.values.data(), n);
        norm = std::max(norm, std::pow(double(N), alpha) * max_abs(band));
    }
    return norm;
}

FieldSnapshot heat_semigroup(const FieldSnapshot& f, double t, double m2) {
    if (t < 0.0) throw std::invalid_argument("heat_semigroup: t must be >= 0");
    int n = f.n;
    FieldSnapshot out = f;
    out.time = f.time + t;
    if (t == 0.0) return out;
    fft::to_modes(out.values.data(), n);
    for (int i = 0; i < n; ++i) {
        int kx = freq_of(i, n);
        for (int j = 0; j < n; ++j) {
            int ky = freq_of(j, n);
            out.at(i, j) *= std::exp(-mode_rate(kx, ky, m2) * t);
        }
    }
    fft::to_phys(out.values.data(), n);
    return out;
}

SpaceTimeField duhamel(const SpaceTimeField& F, double m2) {
    const GridSpec& g = F.grid;
    int n = g.n;
    SpaceTimeField out(g);
    std::vector<cplx> acc(g.sites(), cplx(0.0));
    std::vector<cplx> fmodes(g.sites());
    std::vector<double> decay(g.sites()), weight(g.sites());
    for (int i = 0; i < n; ++i) {
        int kx = freq_of(i, n);
        for (int j = 0; j < n; ++j) {
            int ky = freq_of(j, n);
            double w = mode_rate(kx, ky, m2);
            decay[std::size_t(i) * n + j] = std::exp(-w * g.dt);
            weight[std::size_t(i) * n + j] = g.dt * phi1(w * g.dt);
        }
    }
    for (int j = 0; j + 1 < g.steps; ++j) {
        std::copy(F.slice(j), F.slice(j) + g.sites(), fmodes.begin());
        fft::to_modes(fmodes.data(), n);
        for (int s = 0; s < g.sites(); ++s) acc[s] = decay[s] * acc[s] + weight[s] * fmodes[s];
        std::copy(acc.begin(), acc.end(), out.slice(j + 1));
        fft::to_phys(out.slice(j + 1), n);
    }
    return out;
}

double n_norm(const SpaceTimeField& F, double eta) {
    if (eta >= 0.0) throw std::invalid_argument("n_norm: eta must be negative");
    const GridSpec& g = F.grid;
    double w = (1.0 - eta) / 2.0;
    double norm = 0.0;
    for (int j = 1; j < g.steps; ++j) {
        double t = j * g.dt;  // relative to window start
        double m = 0.0;
        const cplx* s = F.slice(j);
        for (int i = 0; i < g.sites(); ++i) m = std::max(m, std::abs(s[i]));
        norm = std::max(norm, std::pow(t, w) * m);
    }
    return norm;
}

double s_norm(const SpaceTimeField& theta, double eta, int sample_pairs) {
    if (eta >= 0.0) throw std::invalid_argument("s_norm: eta must be negative");
    const GridSpec& g = theta.grid;
    if (g.steps < 2) throw std::invalid_argument("s_norm: window must have at least 2 frames");
    double norm = 0.0;
    for (int j = 0; j < g.steps; ++j) norm = std::max(norm, besov_norm(theta.frame(j), eta));

    double w = (1.0 - eta) / 2.0;
    int n = g.n;
    double lip = 0.0;
    auto quotient = [&](int jt, int ix, int iy, int js, int jx, int jy) {
        // z = (t,x) at frame jt, z' = (s,y) at frame js, 0 < s < t required.
        if (js >= jt || js == 0) return;
        double s = js * g.dt;
        double dt = (jt - js) * g.dt;
        double d1 = torus_wrap((ix - jx) * g.dx());
        double d2 = torus_wrap((iy - jy) * g.dx());
        double dist = std::sqrt(dt) + std::sqrt(d1 * d1 + d2 * d2);
        if (dist == 0.0) return;
        double diff = std::abs(theta.at(jt, ix, iy) - theta.at(js, jx, jy));
        lip = std::max(lip, std::pow(s, w) * diff / dist);
    };
    // all nearest-neighbour pairs: one step back in time, 0 or 1 hops in space
    // (the supremum ranges over s < t strictly, so equal-time pairs do not enter)
    for (int j = 2; j < g.steps; ++j) {
        for (int ix = 0; ix < n; ++ix)
            for (int iy = 0; iy < n; ++iy) {
                quotient(j, ix, iy, j - 1, ix, iy);
                quotient(j, ix, iy, j - 1, (ix + 1) % n, iy);
                quotient(j, ix, iy, j - 1, ix, (iy + 1) % n);
            }
    }
    // random long-range pairs from a fixed stream (keeps the norm a pure function)
    std::uint64_t key = rng::SeedLineage{0x5eedbeefULL, 0, 77}.key();
    for (int p = 0; p < sample_pairs; ++p) {
        auto pick = [&](int lim, int c) {
            return int(rng::uniform01(key, std::uint64_t(p) * 8 + c) * lim) % lim;
        };
        int jt = 1 + pick(g.steps - 1, 0);
        int js = 1 + pick(g.steps - 1, 1);
        if (js >= jt) continue;
        quotient(jt, pick(n, 2), pick(n, 3), js, pick(n, 4), pick(n, 5));
    }
    return norm + lip;
}

double max_imag_abs(const SpaceTimeField& f) {
    double m = 0.0;
    for (const auto& v : f.data) m = std::max(m, std::abs(v.imag()));
    return m;
}

}  // namespace sglab
