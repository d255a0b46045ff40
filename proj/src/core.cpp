#include "gabor/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gabor/linalg.hpp"

namespace gabor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSupportMassTol = 1e-12;

// Per-axis samples of exp(2*pi*i n x) exp(-pi (x-m)^2).
std::vector<cplx> axis_shift_samples(double m, double n, const Grid& g) {
    std::vector<cplx> c(static_cast<std::size_t>(g.n));
    for (int j = 0; j < g.n; ++j) {
        const double x = g.coord(j);
        const double amp = std::exp(-kPi * (x - m) * (x - m));
        c[j] = std::polar(amp, kTwoPi * n * x);
    }
    return c;
}

}  // namespace

double tf_shift_mass_outside(const std::array<double, kMaxDim>& m, int dim, const Grid& grid) {
    // One axis loses 0.5*(erfc(sqrt(pi)(L-m)) + erfc(sqrt(pi)(L+m))) of unit
    // mass; a union bound over axes covers the tensor product.
    const double sp = std::sqrt(kPi);
    double out = 0.0;
    for (int a = 0; a < dim; ++a)
        out += 0.5 * (std::erfc(sp * (grid.extent - m[a])) + std::erfc(sp * (grid.extent + m[a])));
    return out;
}

SampledFunction tf_shift_sample_real(const std::array<double, kMaxDim>& m,
                                     const std::array<double, kMaxDim>& n,
                                     int dim, const Grid& grid) {
    if (dim != grid.dim) throw IncompatibleGrids("tf_shift_sample: dim mismatch with grid");
    const double outside = tf_shift_mass_outside(m, dim, grid);
    if (outside > kSupportMassTol)
        throw SupportTruncation("tf_shift_sample: grid misses " + std::to_string(outside) +
                                " of the shifted Gaussian's mass");

    std::array<std::vector<cplx>, kMaxDim> axis;
    for (int a = 0; a < dim; ++a) axis[a] = axis_shift_samples(m[a], n[a], grid);

    SampledFunction f(grid);
    if (dim == 1) {
        f.values = std::move(axis[0]);
        return f;
    }
    const std::size_t total = grid.total_points();
    for (std::size_t i = 0; i < total; ++i) {
        const auto idx = decode_index(grid, i);
        cplx v = axis[0][static_cast<std::size_t>(idx[0])];
        for (int a = 1; a < dim; ++a) v *= axis[a][static_cast<std::size_t>(idx[a])];
        f.values[i] = v;
    }
    return f;
}

SampledFunction tf_shift_sample(const LatticeIndex& lambda, const LatticeParams& params,
                                const Grid& grid) {
    return tf_shift_sample_real(lambda.phys_m(params), lambda.phys_n(params), lambda.dim, grid);
}

cplx inner_product(const SampledFunction& f, const SampledFunction& g) {
    require_same_grid(f, g);
    const Grid& gr = f.grid;
    if (gr.dim == 1) {
        const double h = gr.step();
        cplx s{0.0, 0.0};
        for (int j = 0; j < gr.n; ++j)
            s += f.values[static_cast<std::size_t>(j)] * std::conj(g.values[static_cast<std::size_t>(j)]);
        // endpoint correction for the trapezoid rule
        s -= 0.5 * (f.values.front() * std::conj(g.values.front()) +
                    f.values.back() * std::conj(g.values.back()));
        return h * s;
    }
    cplx s{0.0, 0.0};
    const std::size_t total = f.size();
    for (std::size_t i = 0; i < total; ++i)
        s += quad_weight(gr, i) * f.values[i] * std::conj(g.values[i]);
    return s;
}

namespace {

// One dense pass of the transform along `axis`:
//   out[k] = sum_j w_j in[j] exp(sign * 2*pi*i x_j w_k)
// The unimodular factors come from a phase recurrence that is re-seeded every
// 64 steps to keep drift at roundoff level.
void axis_pass(const std::vector<cplx>& in, const Grid& gin, std::vector<cplx>& out,
               const Grid& gout, int axis, double sign) {
    const int nin = gin.n, nout = gout.n;
    const double h = gin.step();

    std::size_t suffix = 1;
    for (int a = axis + 1; a < gin.dim; ++a) suffix *= static_cast<std::size_t>(gin.n);
    std::size_t prefix = 1;
    for (int a = 0; a < axis; ++a) prefix *= static_cast<std::size_t>(gout.n);
    // prefix axes already hold out-grid extents (transformed in order 0..dim-1)

    std::vector<cplx> kern(static_cast<std::size_t>(nin));
    for (int k = 0; k < nout; ++k) {
        const double w = gout.coord(k);
        const cplx stepph = std::polar(1.0, sign * kTwoPi * h * w);
        cplx p{0.0, 0.0};
        for (int j = 0; j < nin; ++j) {
            if (j % 64 == 0) p = std::polar(1.0, sign * kTwoPi * gin.coord(j) * w);
            kern[static_cast<std::size_t>(j)] = gin.axis_weight(j) * p;
            p *= stepph;
        }
        for (std::size_t pre = 0; pre < prefix; ++pre)
            for (std::size_t suf = 0; suf < suffix; ++suf) {
                const cplx* src = in.data() + (pre * static_cast<std::size_t>(nin)) * suffix + suf;
                cplx acc{0.0, 0.0};
                for (int j = 0; j < nin; ++j) acc += kern[static_cast<std::size_t>(j)] * src[static_cast<std::size_t>(j) * suffix];
                out[(pre * static_cast<std::size_t>(nout) + static_cast<std::size_t>(k)) * suffix + suf] = acc;
            }
    }
}

SampledFunction dense_transform(const SampledFunction& f, const Grid* out_grid, double sign,
                                double* truncation_bound) {
    const Grid& gin = f.grid;
    Grid gout = out_grid ? *out_grid : gin;
    if (gout.dim != gin.dim) throw IncompatibleGrids("continuous_ft: output grid dim mismatch");

    if (truncation_bound) {
        // boundary magnitude times the measure of the boundary shell
        double edge = 0.0;
        const std::size_t total = f.size();
        for (std::size_t i = 0; i < total; ++i) {
            const auto idx = decode_index(gin, i);
            for (int a = 0; a < gin.dim; ++a)
                if (idx[a] == 0 || idx[a] == gin.n - 1) {
                    edge = std::max(edge, std::abs(f.values[i]));
                    break;
                }
        }
        double shell = 1.0;
        for (int a = 0; a < gin.dim; ++a) shell *= 2.0 * gin.extent;
        *truncation_bound = edge * shell;
    }

    std::vector<cplx> cur = f.values;
    for (int axis = 0; axis < gin.dim; ++axis) {
        // shape before pass: axes < axis have gout.n, axes >= axis have gin.n
        std::size_t sz = 1;
        for (int a = 0; a < gin.dim; ++a) sz *= static_cast<std::size_t>(a <= axis ? gout.n : gin.n);
        std::vector<cplx> next(sz);
        axis_pass(cur, gin, next, gout, axis, sign);
        cur = std::move(next);
    }
    SampledFunction r(gout);
    r.values = std::move(cur);
    return r;
}

}  // namespace

SampledFunction continuous_ft(const SampledFunction& f, const Grid* out_grid, double* truncation_bound) {
    return dense_transform(f, out_grid, -1.0, truncation_bound);
}

SampledFunction inverse_ft(const SampledFunction& fhat, const Grid* out_grid, double* truncation_bound) {
    return dense_transform(fhat, out_grid, +1.0, truncation_bound);
}

Spectrogram stft_grid(const SampledFunction& f, const GaussianWindow& window,
                      const std::vector<double>& t_grid, const std::vector<double>& w_grid) {
    if (f.grid.dim != 1 || window.dim != 1)
        throw std::invalid_argument("stft_grid: spectrograms are one-dimensional");
    const Grid& g = f.grid;
    const double h = g.step();

    Spectrogram sp;
    sp.time_grid = t_grid;
    sp.freq_grid = w_grid;
    sp.magnitudes.assign(t_grid.size() * w_grid.size(), 0.0);

    std::vector<double> win(static_cast<std::size_t>(g.n));
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        for (int j = 0; j < g.n; ++j) {
            const double x = g.coord(j) - t_grid[ti];
            win[static_cast<std::size_t>(j)] = std::exp(-kPi * x * x);
        }
        for (std::size_t wi = 0; wi < w_grid.size(); ++wi) {
            const double w = w_grid[wi];
            const cplx stepph = std::polar(1.0, -kTwoPi * h * w);
            cplx p{0.0, 0.0};
            cplx acc{0.0, 0.0};
            for (int j = 0; j < g.n; ++j) {
                if (j % 64 == 0) p = std::polar(1.0, -kTwoPi * g.coord(j) * w);
                const double aw = g.axis_weight(j);
                acc += aw * win[static_cast<std::size_t>(j)] * f.values[static_cast<std::size_t>(j)] * p;
                p *= stepph;
            }
            sp.magnitudes[ti * w_grid.size() + wi] = std::abs(acc);
        }
    }
    return sp;
}

std::vector<LatticeIndex> lattice_ball(const LatticeParams& params, int radius) {
    std::vector<LatticeIndex> out;
    const int d = params.dim;
    // odometer over 2d coordinates, each in [-radius, radius]
    std::array<int, 2 * kMaxDim> c{};
    c.fill(-radius);
    const int ncoord = 2 * d;
    while (true) {
        LatticeIndex li;
        li.dim = d;
        for (int a = 0; a < d; ++a) { li.m[a] = c[a]; li.n[a] = c[d + a]; }
        out.push_back(li);
        int a = ncoord - 1;
        while (a >= 0 && c[a] == radius) { c[a] = -radius; --a; }
        if (a < 0) break;
        ++c[a];
    }
    return out;
}

double phase_space_distance(const LatticeIndex& lambda, const LatticeIndex& nu, const LatticeParams& p) {
    double s = 0.0;
    for (int a = 0; a < lambda.dim; ++a) {
        const double dm = p.alpha * (lambda.m[a] - nu.m[a]);
        const double dn = p.beta * (lambda.n[a] - nu.n[a]);
        s += dm * dm + dn * dn;
    }
    return std::sqrt(s);
}

SampledFunction frame_operator_apply(const SampledFunction& f, const LatticeParams& params,
                                     int index_radius) {
    SampledFunction acc(f.grid);
    for (const auto& li : lattice_ball(params, index_radius)) {
        const SampledFunction atom = tf_shift_sample(li, params, f.grid);
        const cplx c = inner_product(f, atom);
        for (std::size_t i = 0; i < acc.size(); ++i) acc.values[i] += c * atom.values[i];
    }
    return acc;
}

namespace {

// Hermite functions of the pi-normalized Gaussian: phi_k(u) = psi_k(sqrt(2*pi) u)
// where psi_k are the orthonormal Hermite functions for weight exp(-x^2/2).
// phi_k is concentrated in the phase-space ball of radius ~sqrt((2k+1)/(2*pi)).
std::vector<std::vector<double>> hermite_dictionary(int count, const Grid& g) {
    std::vector<std::vector<double>> phi(static_cast<std::size_t>(count),
                                         std::vector<double>(static_cast<std::size_t>(g.n)));
    const double c0 = std::pow(kPi, -0.25);
    for (int j = 0; j < g.n; ++j) {
        const double x = std::sqrt(kTwoPi) * g.coord(j);
        double pm2 = 0.0;
        double pm1 = c0 * std::exp(-0.5 * x * x);
        phi[0][static_cast<std::size_t>(j)] = pm1;
        for (int k = 1; k < count; ++k) {
            const double pk = std::sqrt(2.0 / k) * x * pm1 - std::sqrt((k - 1.0) / k) * pm2;
            phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = pk;
            pm2 = pm1;
            pm1 = pk;
        }
    }
    return phi;
}

}  // namespace

FrameBounds frame_bounds_estimate(const LatticeParams& params, int index_radius, const Grid& grid) {
    if (params.dim != 1 || grid.dim != 1)
        throw std::invalid_argument("frame_bounds_estimate: implemented for dimension 1");
    if (index_radius < 1) throw std::invalid_argument("frame_bounds_estimate: index_radius >= 1");

    // Trial subspace: Hermite functions concentrated strictly inside the
    // phase-space region the truncated lattice covers, so the estimate sees
    // the frame operator rather than the truncation boundary.
    const double cov = std::max(0.5, std::min(params.alpha, params.beta) * index_radius - 1.2);
    const double grid_cov = std::max(0.5, grid.extent - 2.0);
    int count = static_cast<int>(kPi * std::min(cov, grid_cov) * std::min(cov, grid_cov));
    count = std::clamp(count, 6, 240);

    const auto phi = hermite_dictionary(count, grid);
    const auto ball = lattice_ball(params, index_radius);
    const double h = grid.step();

    // Coefficients c[i][lambda] = <phi_i, g_lambda>; then
    // M = C C^H reproduces <S phi_i, phi_j> without forming S.
    std::vector<std::vector<cplx>> coef(static_cast<std::size_t>(count),
                                        std::vector<cplx>(ball.size()));
    for (std::size_t li = 0; li < ball.size(); ++li) {
        const SampledFunction atom = tf_shift_sample(ball[li], params, grid);
        for (int i = 0; i < count; ++i) {
            cplx s{0.0, 0.0};
            for (int j = 0; j < grid.n; ++j)
                s += phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     std::conj(atom.values[static_cast<std::size_t>(j)]);
            s -= 0.5 * (phi[static_cast<std::size_t>(i)].front() * std::conj(atom.values.front()) +
                        phi[static_cast<std::size_t>(i)].back() * std::conj(atom.values.back()));
            coef[static_cast<std::size_t>(i)][li] = h * s;
        }
    }

    Mat m(count, count), g(count, count);
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t li = 0; li < ball.size(); ++li)
                s += coef[static_cast<std::size_t>(i)][li] * std::conj(coef[static_cast<std::size_t>(j)][li]);
            m(i, j) = m(j, i) = s.real();

            double q = 0.0;
            for (int x = 0; x < grid.n; ++x)
                q += grid.axis_weight(x) * phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] *
                     phi[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
            g(i, j) = g(j, i) = q;
        }

    const EigExtremes ex = generalized_sym_extremes(m, g);
    return {ex.min_ev, ex.max_ev};
}

}  // namespace gabor
