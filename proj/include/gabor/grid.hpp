#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "gabor/errors.hpp"

namespace gabor {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 3;

// Uniform tensor grid covering [-extent, extent]^dim, endpoints included,
// n points per axis. Step is 2*extent/(n-1) on every axis.
struct Grid {
    int dim = 1;
    double extent = 8.0;
    int n = 1024;

    double step() const { return 2.0 * extent / static_cast<double>(n - 1); }
    double coord(int i) const { return -extent + step() * static_cast<double>(i); }
    std::size_t total_points() const {
        std::size_t t = 1;
        for (int a = 0; a < dim; ++a) t *= static_cast<std::size_t>(n);
        return t;
    }
    // Trapezoid quadrature weight along one axis.
    double axis_weight(int i) const { return (i == 0 || i == n - 1) ? 0.5 * step() : step(); }

    bool operator==(const Grid&) const = default;

    // Reference quadrature grids from the project defaults: d=1 uses
    // L=8, N=1024; d=2 uses L=6, N=256 per axis.
    static Grid reference(int dim);
    // Grid whose step divides unit translations exactly (h = 1/64), so
    // integer lattice shifts of sampled data are index shifts. Used by the
    // frame synthesis machinery.
    static Grid aligned_1d(int extent_units);
};

// Complex samples of a function on a Grid, immutable by convention after
// construction. Row-major over axes.
struct SampledFunction {
    Grid grid;
    std::vector<cplx> values;

    SampledFunction() = default;
    explicit SampledFunction(const Grid& g) : grid(g), values(g.total_points(), cplx{0.0, 0.0}) {}

    std::size_t size() const { return values.size(); }
};

void require_same_grid(const SampledFunction& f, const SampledFunction& g);

// Composite trapezoid weight of a flat (row-major) point index.
double quad_weight(const Grid& g, std::size_t flat);

// Decode a flat index into per-axis indices.
std::array<int, kMaxDim> decode_index(const Grid& g, std::size_t flat);

// max |f| over the boundary hull of the grid, as a fraction of max |f|
// overall; the truncation heuristics key off this.
double boundary_decay_ratio(const SampledFunction& f);

// Translate samples by an integer number of grid steps per axis,
// zero-filling what shifts in from outside. Requested physical shifts must
// be step-commensurate to 1e-9; otherwise IncompatibleGrids is thrown.
SampledFunction translate_samples(const SampledFunction& f, const std::array<double, kMaxDim>& shift);

double l2_norm(const SampledFunction& f);

}  // namespace gabor
