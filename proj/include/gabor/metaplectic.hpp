#pragma once

#include <array>
#include <complex>

#include "gabor/core.hpp"
#include "gabor/linalg.hpp"

namespace gabor {

// 2d x 2d symplectic matrix in block form [A B; C D].
struct SymplecticMatrix {
    int dim = 1;
    Mat A, B, C, D;

    Mat full() const;
    static SymplecticMatrix from_full(const Mat& m);

    // |t(M) J M - J| <= tol entrywise, J the standard form.
    bool is_symplectic(double tol = 1e-10) const;
};

struct SymplecticGenerator {
    int dim = 1;
    Mat matrix;  // 2d x 2d
};

// Generator of the harmonic repulsor flow, [0 I; I 0]; its exponential is
// the hyperbolic block matrix [cosh I, sinh I; sinh I, cosh I].
SymplecticGenerator repulsor_generator(int dim);

SymplecticMatrix symplectic_exp(const SymplecticGenerator& gen, double t);

// Sign convention of the quadratic phases in the metaplectic integral.
// kPropagator matches the repulsor propagator (positive x^2 chirp, negative
// w^2 chirp), which is what the closed forms downstream are derived from;
// kTextbook flips both quadratic phases.
enum class PhaseConvention { kPropagator, kTextbook };

// mu(S) f (x) = (det A)^{-1/2} Integral exp(+-pi i x.CA^-1 x) exp(2 pi i w.A^-1 x)
//               exp(-+ pi i w.A^-1B w) fhat(w) dw
// Requires |det A| > 1e-8. Dimension 1 general; in higher dimension the
// derived blocks CA^-1, A^-1, A^-1B must be diagonal (the integral then
// factorizes per axis), which covers the repulsor family.
SampledFunction mu_apply(const SymplecticMatrix& s, const SampledFunction& f,
                         PhaseConvention conv = PhaseConvention::kPropagator);

// Complex quadratic-exponential exp(-pi q |x|^2 + l.x + c); closed-form
// description of the repulsor flow applied to a shifted Gaussian.
struct GaussianChirpDescriptor {
    int dim = 1;
    cplx quad{1.0, 0.0};
    std::array<cplx, kMaxDim> lin{};
    cplx constant{0.0, 0.0};

    cplx eval(const std::array<double, kMaxDim>& x) const;
    SampledFunction sample(const Grid& grid) const;
};

// e^{t A_repulsor} applied to pi(lambda)g, expanded in closed form.
GaussianChirpDescriptor repulsor_apply_shifted_gaussian(const LatticeIndex& lambda, double t,
                                                        const LatticeParams& params);

}  // namespace gabor
