#include "gabor/metaplectic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gabor {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Mat SymplecticMatrix::full() const {
    const int d = dim;
    Mat m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            m(i, j) = A(i, j);
            m(i, d + j) = B(i, j);
            m(d + i, j) = C(i, j);
            m(d + i, d + j) = D(i, j);
        }
    return m;
}

SymplecticMatrix SymplecticMatrix::from_full(const Mat& m) {
    const int d = m.rows / 2;
    SymplecticMatrix s;
    s.dim = d;
    s.A = Mat(d, d); s.B = Mat(d, d); s.C = Mat(d, d); s.D = Mat(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            s.A(i, j) = m(i, j);
            s.B(i, j) = m(i, d + j);
            s.C(i, j) = m(d + i, j);
            s.D(i, j) = m(d + i, d + j);
        }
    return s;
}

bool SymplecticMatrix::is_symplectic(double tol) const {
    const int d = dim;
    Mat j(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        j(i, d + i) = 1.0;
        j(d + i, i) = -1.0;
    }
    const Mat m = full();
    return max_abs_diff(transpose(m) * j * m, j) <= tol;
}

SymplecticGenerator repulsor_generator(int dim) {
    SymplecticGenerator g;
    g.dim = dim;
    g.matrix = Mat(2 * dim, 2 * dim);
    for (int i = 0; i < dim; ++i) {
        g.matrix(i, dim + i) = 1.0;
        g.matrix(dim + i, i) = 1.0;
    }
    return g;
}

SymplecticMatrix symplectic_exp(const SymplecticGenerator& gen, double t) {
    return SymplecticMatrix::from_full(mat_exp(t * gen.matrix));
}

namespace {

// out[x_k] = sum_j w_j in[w_j] exp(2 pi i (scale x_k) w_j), one axis at a
// time; `scale` is the diagonal entry of A^-1 for that axis.
void warped_inverse_axis_pass(const std::vector<cplx>& in, const Grid& gin, std::vector<cplx>& out,
                              const Grid& gout, int axis, double scale) {
    const int nin = gin.n, nout = gout.n;
    const double h = gin.step();
    std::size_t suffix = 1;
    for (int a = axis + 1; a < gin.dim; ++a) suffix *= static_cast<std::size_t>(gin.n);
    std::size_t prefix = 1;
    for (int a = 0; a < axis; ++a) prefix *= static_cast<std::size_t>(gout.n);

    std::vector<cplx> kern(static_cast<std::size_t>(nin));
    for (int k = 0; k < nout; ++k) {
        const double y = scale * gout.coord(k);
        const cplx stepph = std::polar(1.0, kTwoPi * h * y);
        cplx p{0.0, 0.0};
        for (int j = 0; j < nin; ++j) {
            if (j % 64 == 0) p = std::polar(1.0, kTwoPi * gin.coord(j) * y);
            kern[static_cast<std::size_t>(j)] = gin.axis_weight(j) * p;
            p *= stepph;
        }
        for (std::size_t pre = 0; pre < prefix; ++pre)
            for (std::size_t suf = 0; suf < suffix; ++suf) {
                const cplx* src = in.data() + (pre * static_cast<std::size_t>(nin)) * suffix + suf;
                cplx acc{0.0, 0.0};
                for (int j = 0; j < nin; ++j)
                    acc += kern[static_cast<std::size_t>(j)] * src[static_cast<std::size_t>(j) * suffix];
                out[(pre * static_cast<std::size_t>(nout) + static_cast<std::size_t>(k)) * suffix + suf] = acc;
            }
    }
}

bool diagonal_within(const Mat& m, double tol) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j && std::abs(m(i, j)) > tol) return false;
    return true;
}

}  // namespace

SampledFunction mu_apply(const SymplecticMatrix& s, const SampledFunction& f, PhaseConvention conv) {
    const int d = s.dim;
    if (f.grid.dim != d) throw IncompatibleGrids("mu_apply: grid dimension mismatch");
    const double det_a = lu_det(s.A);
    if (std::abs(det_a) <= 1e-8)
        throw SingularBlock("mu_apply: block A not invertible, integral formula unavailable");

    const Mat ainv = lu_inverse(s.A);
    const Mat ca = s.C * ainv;
    const Mat ab = ainv * s.B;
    if (d > 1 && (!diagonal_within(ainv, 1e-12) || !diagonal_within(ca, 1e-12) ||
                  !diagonal_within(ab, 1e-12)))
        throw std::invalid_argument("mu_apply: non-separable blocks unsupported for dim > 1");

    const double s1 = conv == PhaseConvention::kPropagator ? +1.0 : -1.0;
    const double s2 = -s1;

    SampledFunction fhat = continuous_ft(f);
    const Grid& g = f.grid;

    // fold the w-chirp exp(s2 pi i w.A^-1B w) into the integrand
    const std::size_t total = fhat.size();
    for (std::size_t i = 0; i < total; ++i) {
        const auto idx = decode_index(g, i);
        double q = 0.0;
        for (int a = 0; a < d; ++a) {
            const double w = g.coord(idx[a]);
            q += ab(a, a) * w * w;
        }
        fhat.values[i] *= std::polar(1.0, s2 * kPi * q);
    }

    std::vector<cplx> cur = std::move(fhat.values);
    for (int axis = 0; axis < d; ++axis) {
        std::vector<cplx> next(total);
        warped_inverse_axis_pass(cur, g, next, g, axis, ainv(axis, axis));
        cur = std::move(next);
    }

    // x-chirp and principal branch of (det A)^{-1/2}
    const cplx pref = 1.0 / std::sqrt(cplx(det_a, 0.0));
    SampledFunction out(g);
    for (std::size_t i = 0; i < total; ++i) {
        const auto idx = decode_index(g, i);
        double q = 0.0;
        for (int a = 0; a < d; ++a) {
            const double x = g.coord(idx[a]);
            q += ca(a, a) * x * x;
        }
        out.values[i] = pref * std::polar(1.0, s1 * kPi * q) * cur[i];
    }
    return out;
}

cplx GaussianChirpDescriptor::eval(const std::array<double, kMaxDim>& x) const {
    cplx e = constant;
    for (int a = 0; a < dim; ++a) e += -kPi * quad * x[a] * x[a] + lin[a] * x[a];
    return std::exp(e);
}

SampledFunction GaussianChirpDescriptor::sample(const Grid& grid) const {
    if (grid.dim != dim) throw IncompatibleGrids("descriptor sample: grid dimension mismatch");
    SampledFunction f(grid);
    const std::size_t total = grid.total_points();
    for (std::size_t i = 0; i < total; ++i) {
        const auto idx = decode_index(grid, i);
        std::array<double, kMaxDim> x{};
        for (int a = 0; a < dim; ++a) x[a] = grid.coord(idx[a]);
        f.values[i] = eval(x);
    }
    return f;
}

GaussianChirpDescriptor repulsor_apply_shifted_gaussian(const LatticeIndex& lambda, double t,
                                                        const LatticeParams& params) {
    const int d = lambda.dim;
    const cplx w{std::cosh(t), std::sinh(t)};
    const auto m = lambda.phys_m(params);
    const auto n = lambda.phys_n(params);

    GaussianChirpDescriptor desc;
    desc.dim = d;
    desc.quad = std::conj(w) / w;

    cplx u2{0.0, 0.0};  // (m+in).(m+in)
    double nn = 0.0, mn = 0.0;
    for (int a = 0; a < d; ++a) {
        const cplx u{m[a], n[a]};
        desc.lin[a] = kTwoPi * u / w;
        u2 += u * u;
        nn += n[a] * n[a];
        mn += m[a] * n[a];
    }
    // log C_t - pi (m+in)^2 cosh(t)/w, with C_t = w^{-d/2} e^{-pi|n|^2 + 2 pi i m.n}
    desc.constant = -0.5 * static_cast<double>(d) * std::log(w) +
                    cplx{-kPi * nn, kTwoPi * mn} - kPi * u2 * std::cosh(t) / w;
    return desc;
}

}  // namespace gabor
