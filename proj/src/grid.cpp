#include "gabor/grid.hpp"

#include <cmath>
#include <cstdlib>

namespace gabor {

Grid Grid::reference(int dim) {
    if (dim == 1) return Grid{1, 8.0, 1024};
    if (dim == 2) return Grid{2, 6.0, 256};
    throw std::invalid_argument("Grid::reference: sampled grids support dim 1 or 2");
}

Grid Grid::aligned_1d(int extent_units) {
    // h = 1/64 exactly: 2L/(N-1) with N-1 = 128*L.
    return Grid{1, static_cast<double>(extent_units), 128 * extent_units + 1};
}

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
    if (!(f.grid == g.grid))
        throw IncompatibleGrids("operands sampled on different grids");
}

double quad_weight(const Grid& g, std::size_t flat) {
    double w = 1.0;
    for (int a = g.dim - 1; a >= 0; --a) {
        int i = static_cast<int>(flat % static_cast<std::size_t>(g.n));
        flat /= static_cast<std::size_t>(g.n);
        w *= g.axis_weight(i);
    }
    return w;
}

std::array<int, kMaxDim> decode_index(const Grid& g, std::size_t flat) {
    std::array<int, kMaxDim> idx{};
    for (int a = g.dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % static_cast<std::size_t>(g.n));
        flat /= static_cast<std::size_t>(g.n);
    }
    return idx;
}

double boundary_decay_ratio(const SampledFunction& f) {
    double peak = 0.0, edge = 0.0;
    const std::size_t total = f.size();
    for (std::size_t i = 0; i < total; ++i) {
        const double a = std::abs(f.values[i]);
        if (a > peak) peak = a;
        const auto idx = decode_index(f.grid, i);
        for (int ax = 0; ax < f.grid.dim; ++ax)
            if (idx[ax] == 0 || idx[ax] == f.grid.n - 1) {
                if (a > edge) edge = a;
                break;
            }
    }
    return peak > 0.0 ? edge / peak : 0.0;
}

SampledFunction translate_samples(const SampledFunction& f, const std::array<double, kMaxDim>& shift) {
    const Grid& g = f.grid;
    const double h = g.step();
    std::array<int, kMaxDim> steps{};
    for (int a = 0; a < g.dim; ++a) {
        const double s = shift[a] / h;
        const double r = std::round(s);
        if (std::abs(s - r) > 1e-9)
            throw IncompatibleGrids("translate_samples: shift not commensurate with grid step");
        steps[a] = static_cast<int>(r);
    }
    SampledFunction out(g);
    const std::size_t total = g.total_points();
    for (std::size_t i = 0; i < total; ++i) {
        auto idx = decode_index(g, i);
        bool inside = true;
        std::size_t src = 0;
        for (int a = 0; a < g.dim; ++a) {
            const int j = idx[a] - steps[a];
            if (j < 0 || j >= g.n) { inside = false; break; }
            src = src * static_cast<std::size_t>(g.n) + static_cast<std::size_t>(j);
        }
        out.values[i] = inside ? f.values[src] : cplx{0.0, 0.0};
    }
    return out;
}

double l2_norm(const SampledFunction& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += quad_weight(f.grid, i) * std::norm(f.values[i]);
    return std::sqrt(s);
}

}  // namespace gabor
