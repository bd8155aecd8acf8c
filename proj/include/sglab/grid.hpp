#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sglab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Raised when a computation is refused on numeric-range or resolvability
// grounds (CLI exit code 3), as opposed to plain argument validation.
struct numeric_refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform n x n grid on the unit torus with time step dt, window start t0.
struct GridSpec {
    int n = 0;
    double dt = 0.0;
    double t0 = 0.0;
    int steps = 1;

    double dx() const { return 1.0 / n; }
    int sites() const { return n * n; }
    double window() const { return dt * (steps - 1); }

    void validate() const {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridSpec: n must be a power of two, n >= 8");
        if (!(dt > 0.0)) throw std::invalid_argument("GridSpec: dt must be positive");
        if (steps < 1) throw std::invalid_argument("GridSpec: steps must be >= 1");
    }
    bool operator==(const GridSpec&) const = default;
};

// Signed frequency of FFT bin i on an n-grid, in [-n/2, n/2).
inline int freq_of(int i, int n) { return i <= n / 2 - 1 ? i : i - n; }

// Minimal-image displacement on the unit torus, in [-1/2, 1/2).
inline double torus_wrap(double d) {
    d -= std::floor(d + 0.5);
    return d;
}

// Parabolic distance |t|^{1/2} + |x| with torus-wrapped x.
inline double parabolic_norm(double t, double x1, double x2) {
    double w1 = torus_wrap(x1), w2 = torus_wrap(x2);
    return std::sqrt(std::abs(t)) + std::sqrt(w1 * w1 + w2 * w2);
}

// Complex scalar field on the spatial grid at a fixed time.
struct FieldSnapshot {
    int n = 0;
    double time = 0.0;
    std::vector<cplx> values;

    FieldSnapshot() = default;
    FieldSnapshot(int n_, double time_) : n(n_), time(time_), values(std::size_t(n_) * n_) {}

    cplx& at(int i, int j) { return values[std::size_t(i) * n + j]; }
    const cplx& at(int i, int j) const { return values[std::size_t(i) * n + j]; }
};

// Uniformly stepped stack of snapshots sharing one grid; flat storage.
struct SpaceTimeField {
    GridSpec grid;
    std::vector<cplx> data;  // steps * n * n, slice-major

    SpaceTimeField() = default;
    explicit SpaceTimeField(const GridSpec& g) : grid(g) {
        grid.validate();
        data.assign(std::size_t(g.steps) * g.sites(), cplx(0.0, 0.0));
    }

    std::size_t slice_offset(int j) const { return std::size_t(j) * grid.sites(); }
    cplx* slice(int j) { return data.data() + slice_offset(j); }
    const cplx* slice(int j) const { return data.data() + slice_offset(j); }
    double time_of(int j) const { return grid.t0 + j * grid.dt; }
    cplx& at(int j, int ix, int iy) { return data[slice_offset(j) + std::size_t(ix) * grid.n + iy]; }
    const cplx& at(int j, int ix, int iy) const {
        return data[slice_offset(j) + std::size_t(ix) * grid.n + iy];
    }

    FieldSnapshot frame(int j) const {
        FieldSnapshot f(grid.n, time_of(j));
        std::copy(slice(j), slice(j) + grid.sites(), f.values.begin());
        return f;
    }
    void set_frame(int j, const FieldSnapshot& f) {
        if (f.n != grid.n) throw std::invalid_argument("set_frame: grid mismatch");
        std::copy(f.values.begin(), f.values.end(), slice(j));
    }
};

// Model parameters and the derived constants used throughout.
struct ModelParams {
    double beta2 = 0.0;  // absolute beta^2 (configs may specify it in units of pi)
    double m2 = 1.0;
    double eps = 0.0625;
    double kappa = 0.0;
    double beta_bar = 0.0;
    double mu = 0.0;
    double eta = 0.0;

    static ModelParams make(double beta2, double m2, double eps, double eta_opt = 1.0) {
        ModelParams p;
        p.beta2 = beta2;
        p.m2 = m2;
        p.eps = eps;
        if (!(beta2 > 0.0) || !(beta2 < 6.0 * kPi))
            throw std::invalid_argument("unsupported regime: beta^2 must lie in (0, 6*pi)");
        if (!(m2 > 0.0)) throw std::invalid_argument("m^2 must be positive");
        if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must lie in (0, 1]");
        p.kappa = 1e-3 * (6.0 * kPi - beta2);
        p.beta_bar = beta2 / (4.0 * kPi) + p.kappa;
        p.mu = p.beta_bar + p.kappa;
        double lo = p.beta_bar / 2.0 - 1.0;
        if (eta_opt >= 1.0) {
            p.eta = lo / 2.0;  // midpoint of the admissible interval (lo, 0)
        } else {
            if (!(eta_opt > lo) || !(eta_opt < 0.0))
                throw std::invalid_argument("eta must lie in (beta_bar/2 - 1, 0) = (" +
                                            std::to_string(lo) + ", 0)");
            p.eta = eta_opt;
        }
        return p;
    }

    double beta() const { return std::sqrt(beta2); }
};

}  // namespace sglab
