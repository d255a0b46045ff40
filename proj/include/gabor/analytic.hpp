#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gabor/lattice.hpp"

namespace gabor {

// ---------------------------------------------------------------------------
// Evolution operators
// ---------------------------------------------------------------------------

// Heat flow u_t = rho Laplacian(u); Fourier symbol exp(-4 pi^2 rho t |w|^2).
struct HeatOp {
    double rho = 1.0;
    double t = 0.1;
    int dim = 1;
};

// Generalized heat flow u_t = -(-Laplacian)^k u in dimension 1 (dissipative
// orientation); symbol exp(-t (2 pi w)^{2k}).
struct GenHeatOp {
    int k = 1;
    double t = 1.0;
};

// Harmonic repulsor: metaplectic flow of the generator [0 I; I 0].
struct RepulsorOp {
    double t = 0.5;
    int dim = 1;
};

using EvolutionOperatorSpec = std::variant<HeatOp, GenHeatOp, RepulsorOp>;

void validate(const EvolutionOperatorSpec& op);
int operator_dim(const EvolutionOperatorSpec& op);
std::string operator_name(const EvolutionOperatorSpec& op);

// ---------------------------------------------------------------------------
// Decay envelopes
// ---------------------------------------------------------------------------

// envelope(r) = C exp(-eps r^{inv_s}); positive, strictly decreasing.
struct DecayBoundSpec {
    double C = 1.0;
    double eps = 1.0;
    double inv_s = 1.0;

    double envelope(double r) const;
    // r* with envelope(r*) = value; envelope(r) > value iff r < r*.
    double inverse(double value) const;
};

// ---------------------------------------------------------------------------
// Exact entry moduli and bounds
// ---------------------------------------------------------------------------

// |<sigma_rho(t,D) pi(lambda)g, pi(nu)g>| in closed form:
//   (2+4 pi rho t)^{-d/2} exp(-pi [ |n|^2+|n'|^2
//     + (|m-m'|^2 - |n+n'|^2)/(2+4 pi rho t) ])
// The minus sign on |n+n'|^2 comes from the modulus of a Gaussian evaluated
// at a complex point, |e^{-c(u+iv)^2}| = e^{-c(u^2-v^2)}; the quadrature
// oracle pins it (see the acceptance suite).
double heat_entry_modulus(const LatticeIndex& lambda, const LatticeIndex& nu, double rho, double t,
                          int dim, const LatticeParams& params);

// Raw rate constant of the generalized-heat envelope:
//   ((2k-1)/(2k)) (1/(2kt))^{1/(2k-1)} 2^{-k/(2k-1)}
double genheat_epsilon_tilde(int k, double t);

// Full envelope of the generalized-heat Gabor-matrix bound:
//   C = |2kt|^{(k-1)/(2k-1)}, eps = eps_tilde * 2^{-1/s}, inv_s = (2k-1)/(2k)
DecayBoundSpec genheat_constants(int k, double t);

// Envelope evaluated at r = |lambda - nu| (physical phase-space distance).
// Upper bound up to an absolute constant, calibrated in the test suite.
double genheat_entry_bound(const LatticeIndex& lambda, const LatticeIndex& nu, int k, double t,
                           const LatticeParams& params);

// |<T_t pi(lambda)g, pi(nu)g>| for the repulsor flow:
//   (2 cosh t)^{-d/2} exp(-(pi/2)[ |m|^2+|n|^2+|m'|^2+|n'|^2
//     + 2 tanh(t)(m.n - m'.n') - (2/cosh t)(m.m' + n.n') ])
// Derived by expanding the closed-form flow of a shifted Gaussian against
// pi(nu)g; reduces to the exact |<pi(lambda)g, pi(nu)g>| at t=0 and is
// verified against the quadrature oracle.
double repulsor_entry_modulus(const LatticeIndex& lambda, const LatticeIndex& nu, double t, int dim,
                              const LatticeParams& params);

// Super-exponential bound on the Fourier transform of exp(-a x^{2k}):
//   |fhat(w)| <= C exp(-eps |w|^{2k/(2k-1)})
//   C = |2ka|^{(k-1)/(2k-1)} / (2 pi)^{2k(k-1)/(2k-1)}
//   eps = (2 pi)^{2k/(2k-1)} ((2k-1)/(2k)) (1/(2ka))^{1/(2k-1)}
DecayBoundSpec superexp_ft_bound(int k, double alpha_coeff);

// A valid rate for dominating the heat entries by
// (2+4 pi rho t)^{-d/2} exp(-eps (|m-m'|^2 + |n-n'|^2)).
double heat_domination_epsilon(double rho, double t);

// Numeric convolution of w(z) = exp(-eps |z|^{1/s}) with itself on z_grid
// (lhs) next to the envelope exp(-eps 2^{-1/s} |z|^{1/s}) (rhs). s > 1/2.
std::pair<std::vector<double>, std::vector<double>> weight_convolution_check(
    double s, double eps, const std::vector<double>& z_grid);

// ---------------------------------------------------------------------------
// Matrix windows
// ---------------------------------------------------------------------------

struct GaborMatrixWindow {
    LatticeParams params;
    int radius = 0;
    struct Entry {
        LatticeIndex lambda;
        LatticeIndex nu;
        double modulus;
    };
    std::vector<Entry> entries;
};

// Closed-form modulus (or, for GenHeat, the theorem envelope) of one entry.
double entry_modulus(const EvolutionOperatorSpec& op, const LatticeIndex& lambda,
                     const LatticeIndex& nu, const LatticeParams& params);

// All (lambda, nu) pairs with indices within max-norm radius. Guarded
// against blowup; use the column builder in higher dimension.
GaborMatrixWindow analytic_matrix_window(const EvolutionOperatorSpec& op,
                                         const LatticeParams& params, int radius);

// lambda sweeps the window, nu held fixed.
GaborMatrixWindow analytic_matrix_column(const EvolutionOperatorSpec& op,
                                         const LatticeParams& params, int radius,
                                         const LatticeIndex& nu);

}  // namespace gabor
