#pragma once

#include <utility>
#include <vector>

#include "gabor/grid.hpp"
#include "gabor/lattice.hpp"

namespace gabor {

// ---------------------------------------------------------------------------
// Time-frequency shifts
// ---------------------------------------------------------------------------

// Samples of pi(lambda)g = M_n T_m g, i.e. exp(2*pi*i n.x) exp(-pi|x-m|^2)
// with m = alpha*m_idx, n = beta*n_idx. Throws SupportTruncation when the
// grid misses more than 1e-12 of the shifted Gaussian's mass.
SampledFunction tf_shift_sample(const LatticeIndex& lambda, const LatticeParams& params, const Grid& grid);

// Same with arbitrary real phase-space shift (used by the STFT, which scans
// off-lattice points).
SampledFunction tf_shift_sample_real(const std::array<double, kMaxDim>& m,
                                     const std::array<double, kMaxDim>& n,
                                     int dim, const Grid& grid);

// Fraction of the shifted Gaussian's mass falling outside the grid
// (per-axis union bound, via erfc).
double tf_shift_mass_outside(const std::array<double, kMaxDim>& m, int dim, const Grid& grid);

// ---------------------------------------------------------------------------
// Quadrature inner products
// ---------------------------------------------------------------------------

// <f,g> = integral of f * conj(g), composite trapezoid. Grids must match.
cplx inner_product(const SampledFunction& f, const SampledFunction& g);

// ---------------------------------------------------------------------------
// Continuous Fourier transform via dense quadrature
// ---------------------------------------------------------------------------
//
// Convention: Ff(w) = integral f(t) exp(-2*pi*i t.w) dt. The transform is
// evaluated on out_grid (defaults to the input grid) by per-axis dense
// passes, so it is exact up to trapezoid error for Schwartz-type samples.
// If truncation_bound is non-null it receives a crude estimate of the error
// contributed by grid truncation (boundary magnitude times boundary measure).

SampledFunction continuous_ft(const SampledFunction& f, const Grid* out_grid = nullptr,
                              double* truncation_bound = nullptr);
SampledFunction inverse_ft(const SampledFunction& fhat, const Grid* out_grid = nullptr,
                           double* truncation_bound = nullptr);

// ---------------------------------------------------------------------------
// Spectrogram
// ---------------------------------------------------------------------------

struct Spectrogram {
    std::vector<double> time_grid;
    std::vector<double> freq_grid;
    // magnitudes[i*freq_grid.size() + j] = |<f, M_{w_j} T_{x_i} g>|
    std::vector<double> magnitudes;

    double at(std::size_t i, std::size_t j) const { return magnitudes[i * freq_grid.size() + j]; }
};

// STFT magnitude grid with Gaussian window; dimension 1 only.
Spectrogram stft_grid(const SampledFunction& f, const GaussianWindow& window,
                      const std::vector<double>& t_grid, const std::vector<double>& w_grid);

// ---------------------------------------------------------------------------
// Frame bounds of the truncated frame operator
// ---------------------------------------------------------------------------
//
// Estimates the extreme eigenvalues of S f = sum_{lambda} <f, g_lambda>
// g_lambda with lattice indices truncated to max-norm <= index_radius,
// restricted to a phase-space-concentrated (Hermite) trial subspace so the
// estimate is not polluted by grid-boundary null directions. Dimension 1.

struct FrameBounds {
    double a_est = 0.0;
    double b_est = 0.0;
};

FrameBounds frame_bounds_estimate(const LatticeParams& params, int index_radius, const Grid& grid);

// Truncated frame operator application (exposed for the dual-window solver).
SampledFunction frame_operator_apply(const SampledFunction& f, const LatticeParams& params,
                                     int index_radius);

// All lattice indices with max-norm at most radius (row-major order,
// deterministic).
std::vector<LatticeIndex> lattice_ball(const LatticeParams& params, int radius);

}  // namespace gabor
