#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "gabor/grid.hpp"

namespace gabor {

// Separable lattice alpha*Z^d x beta*Z^d on the phase space.
struct LatticeParams {
    double alpha = 1.0;
    double beta = 0.5;
    int dim = 1;

    LatticeParams() = default;
    LatticeParams(double a, double b, int d) : alpha(a), beta(b), dim(d) {
        if (!(alpha > 0.0) || !(beta > 0.0) || dim < 1 || dim > kMaxDim)
            throw std::invalid_argument("LatticeParams: need alpha>0, beta>0, 1<=dim<=3");
    }

    // Gaussian-window Gabor systems on this lattice are frames exactly when
    // alpha*beta < 1.
    bool frame_valid() const { return alpha * beta < 1.0; }
};

// Integer lattice indices; the physical point is (alpha*m_idx, beta*n_idx).
struct LatticeIndex {
    int dim = 1;
    std::array<int, kMaxDim> m{};  // spatial indices
    std::array<int, kMaxDim> n{};  // frequency indices

    static LatticeIndex d1(int m0, int n0) { return {1, {m0, 0, 0}, {n0, 0, 0}}; }

    std::array<double, kMaxDim> phys_m(const LatticeParams& p) const {
        std::array<double, kMaxDim> r{};
        for (int a = 0; a < dim; ++a) r[a] = p.alpha * m[a];
        return r;
    }
    std::array<double, kMaxDim> phys_n(const LatticeParams& p) const {
        std::array<double, kMaxDim> r{};
        for (int a = 0; a < dim; ++a) r[a] = p.beta * n[a];
        return r;
    }

    bool operator==(const LatticeIndex&) const = default;
};

// Euclidean distance between two lattice points in phase space,
// |(m-m', n-n')| with physical coordinates.
double phase_space_distance(const LatticeIndex& lambda, const LatticeIndex& nu, const LatticeParams& p);

// The window g(x) = exp(-pi |x|^2); value 1 at the origin, even, and its
// own Fourier transform under the 2*pi-in-exponent convention.
struct GaussianWindow {
    int dim = 1;

    double operator()(const std::array<double, kMaxDim>& x) const {
        double s = 0.0;
        for (int a = 0; a < dim; ++a) s += x[a] * x[a];
        return std::exp(-M_PI * s);
    }
};

}  // namespace gabor
