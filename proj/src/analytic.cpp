#include "gabor/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gabor {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const EvolutionOperatorSpec& op) {
    if (const auto* h = std::get_if<HeatOp>(&op)) {
        if (!(h->rho > 0.0)) throw std::invalid_argument("heat: rho must be positive");
        if (!(h->t >= 0.0)) throw std::invalid_argument("heat: t must be >= 0 (diffusion direction)");
        if (h->dim < 1 || h->dim > kMaxDim) throw std::invalid_argument("heat: dim in {1,2,3}");
    } else if (const auto* gh = std::get_if<GenHeatOp>(&op)) {
        if (gh->k < 1) throw std::invalid_argument("genheat: k >= 1");
        if (!(gh->t > 0.0)) throw std::invalid_argument("genheat: t must be positive");
    } else if (const auto* r = std::get_if<RepulsorOp>(&op)) {
        if (r->dim < 1 || r->dim > kMaxDim) throw std::invalid_argument("repulsor: dim in {1,2,3}");
        if (!std::isfinite(r->t)) throw std::invalid_argument("repulsor: t must be finite");
    }
}

int operator_dim(const EvolutionOperatorSpec& op) {
    if (std::holds_alternative<GenHeatOp>(op)) return 1;
    if (const auto* h = std::get_if<HeatOp>(&op)) return h->dim;
    return std::get<RepulsorOp>(op).dim;
}

std::string operator_name(const EvolutionOperatorSpec& op) {
    if (std::holds_alternative<HeatOp>(op)) return "heat";
    if (std::holds_alternative<GenHeatOp>(op)) return "genheat";
    return "repulsor";
}

double DecayBoundSpec::envelope(double r) const {
    return C * std::exp(-eps * std::pow(r, inv_s));
}

double DecayBoundSpec::inverse(double value) const {
    if (!(value > 0.0) || value >= C) return 0.0;
    return std::pow(std::log(C / value) / eps, 1.0 / inv_s);
}

double heat_entry_modulus(const LatticeIndex& lambda, const LatticeIndex& nu, double rho, double t,
                          int dim, const LatticeParams& params) {
    const double p = 2.0 + 4.0 * kPi * rho * t;
    const auto m = lambda.phys_m(params), n = lambda.phys_n(params);
    const auto mp = nu.phys_m(params), np = nu.phys_n(params);
    double n2 = 0.0, np2 = 0.0, dm2 = 0.0, sn2 = 0.0;
    for (int a = 0; a < dim; ++a) {
        n2 += n[a] * n[a];
        np2 += np[a] * np[a];
        dm2 += (m[a] - mp[a]) * (m[a] - mp[a]);
        sn2 += (n[a] + np[a]) * (n[a] + np[a]);
    }
    return std::pow(p, -0.5 * dim) * std::exp(-kPi * (n2 + np2 + (dm2 - sn2) / p));
}

double genheat_epsilon_tilde(int k, double t) {
    const double kk = static_cast<double>(k);
    return ((2.0 * kk - 1.0) / (2.0 * kk)) * std::pow(1.0 / (2.0 * kk * t), 1.0 / (2.0 * kk - 1.0)) *
           std::pow(2.0, -kk / (2.0 * kk - 1.0));
}

DecayBoundSpec genheat_constants(int k, double t) {
    if (k < 1 || !(t > 0.0)) throw std::invalid_argument("genheat_constants: k >= 1, t > 0");
    const double kk = static_cast<double>(k);
    const double inv_s = (2.0 * kk - 1.0) / (2.0 * kk);
    DecayBoundSpec b;
    b.C = std::pow(2.0 * kk * t, (kk - 1.0) / (2.0 * kk - 1.0));
    b.eps = genheat_epsilon_tilde(k, t) * std::pow(2.0, -inv_s);
    b.inv_s = inv_s;
    return b;
}

double genheat_entry_bound(const LatticeIndex& lambda, const LatticeIndex& nu, int k, double t,
                           const LatticeParams& params) {
    if (lambda.dim != 1 || nu.dim != 1)
        throw std::invalid_argument("genheat_entry_bound: dimension 1");
    return genheat_constants(k, t).envelope(phase_space_distance(lambda, nu, params));
}

double repulsor_entry_modulus(const LatticeIndex& lambda, const LatticeIndex& nu, double t, int dim,
                              const LatticeParams& params) {
    const double ch = std::cosh(t), th = std::tanh(t);
    const auto m = lambda.phys_m(params), n = lambda.phys_n(params);
    const auto mp = nu.phys_m(params), np = nu.phys_n(params);
    double sq = 0.0, mn = 0.0, mpnp = 0.0, mmp = 0.0, nnp = 0.0;
    for (int a = 0; a < dim; ++a) {
        sq += m[a] * m[a] + n[a] * n[a] + mp[a] * mp[a] + np[a] * np[a];
        mn += m[a] * n[a];
        mpnp += mp[a] * np[a];
        mmp += m[a] * mp[a];
        nnp += n[a] * np[a];
    }
    const double bracket = sq + 2.0 * th * (mn - mpnp) - (2.0 / ch) * (mmp + nnp);
    return std::pow(2.0 * ch, -0.5 * dim) * std::exp(-0.5 * kPi * bracket);
}

DecayBoundSpec superexp_ft_bound(int k, double alpha_coeff) {
    if (k < 1 || !(alpha_coeff > 0.0))
        throw std::invalid_argument("superexp_ft_bound: k >= 1, alpha > 0");
    const double kk = static_cast<double>(k);
    const double q = 2.0 * kk - 1.0;
    DecayBoundSpec b;
    b.C = std::pow(2.0 * kk * alpha_coeff, (kk - 1.0) / q) / std::pow(2.0 * kPi, 2.0 * kk * (kk - 1.0) / q);
    b.eps = std::pow(2.0 * kPi, 2.0 * kk / q) * (q / (2.0 * kk)) *
            std::pow(1.0 / (2.0 * kk * alpha_coeff), 1.0 / q);
    b.inv_s = 2.0 * kk / q;
    return b;
}

double heat_domination_epsilon(double rho, double t) {
    // From the chain |n+n'|^2 <= 2(|n|^2+|n'|^2) and |n-n'|^2 <= 2(|n|^2+|n'|^2):
    // frequency rate pi^2 rho t/(1+2 pi rho t), space rate pi/(2(1+2 pi rho t)).
    const double denom = 1.0 + 2.0 * kPi * rho * t;
    return std::min(kPi * kPi * rho * t, 0.5 * kPi) / denom;
}

std::pair<std::vector<double>, std::vector<double>> weight_convolution_check(
    double s, double eps, const std::vector<double>& z_grid) {
    if (!(s > 0.5)) throw std::invalid_argument("weight_convolution_check: s > 1/2");
    if (!(eps > 0.0)) throw std::invalid_argument("weight_convolution_check: eps > 0");

    // Integration half-width where the weight drops below 1e-12; the
    // integrand decays at least that fast beyond both centers.
    const double cutoff = std::pow(std::log(1e12) / eps, s);
    const double h = 0.02;
    const double rate = eps * std::pow(2.0, -1.0 / s);

    std::vector<double> lhs(z_grid.size()), rhs(z_grid.size());
    for (std::size_t zi = 0; zi < z_grid.size(); ++zi) {
        const double z = z_grid[zi];
        const double lo = std::min(0.0, z) - cutoff;
        const double hi = std::max(0.0, z) + cutoff;
        const int nsteps = static_cast<int>(std::ceil((hi - lo) / h));
        double acc = 0.0;
        for (int j = 0; j <= nsteps; ++j) {
            const double x = lo + (hi - lo) * j / nsteps;
            const double v = std::exp(-eps * std::pow(std::abs(x), 1.0 / s)) *
                             std::exp(-eps * std::pow(std::abs(z - x), 1.0 / s));
            acc += (j == 0 || j == nsteps) ? 0.5 * v : v;
        }
        lhs[zi] = acc * (hi - lo) / nsteps;
        rhs[zi] = std::exp(-rate * std::pow(std::abs(z), 1.0 / s));
    }
    return {std::move(lhs), std::move(rhs)};
}

double entry_modulus(const EvolutionOperatorSpec& op, const LatticeIndex& lambda,
                     const LatticeIndex& nu, const LatticeParams& params) {
    if (const auto* h = std::get_if<HeatOp>(&op))
        return heat_entry_modulus(lambda, nu, h->rho, h->t, h->dim, params);
    if (const auto* gh = std::get_if<GenHeatOp>(&op))
        return genheat_entry_bound(lambda, nu, gh->k, gh->t, params);
    const auto& r = std::get<RepulsorOp>(op);
    return repulsor_entry_modulus(lambda, nu, r.t, r.dim, params);
}

GaborMatrixWindow analytic_matrix_window(const EvolutionOperatorSpec& op,
                                         const LatticeParams& params, int radius) {
    validate(op);
    const auto ball = lattice_ball(params, radius);
    if (ball.size() * ball.size() > 4000000)
        throw std::invalid_argument("analytic_matrix_window: pair window too large, use the column builder");
    GaborMatrixWindow w;
    w.params = params;
    w.radius = radius;
    w.entries.reserve(ball.size() * ball.size());
    for (const auto& lambda : ball)
        for (const auto& nu : ball)
            w.entries.push_back({lambda, nu, entry_modulus(op, lambda, nu, params)});
    return w;
}

GaborMatrixWindow analytic_matrix_column(const EvolutionOperatorSpec& op,
                                         const LatticeParams& params, int radius,
                                         const LatticeIndex& nu) {
    validate(op);
    GaborMatrixWindow w;
    w.params = params;
    w.radius = radius;
    const auto ball = lattice_ball(params, radius);
    w.entries.reserve(ball.size());
    for (const auto& lambda : ball) w.entries.push_back({lambda, nu, entry_modulus(op, lambda, nu, params)});
    return w;
}

}  // namespace gabor
