#pragma once

#include <vector>

namespace gabor {

// Minimal dense real matrix for the small problems in this project
// (symplectic blocks up to 6x6, Rayleigh-Ritz Gram matrices up to ~250).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n);
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(double s, const Mat& x);
Mat transpose(const Mat& x);
double max_abs_diff(const Mat& x, const Mat& y);

// Infinity norm (max absolute row sum).
double inf_norm(const Mat& x);

// LU with partial pivoting.
double lu_det(Mat x);
Mat lu_inverse(Mat x);  // throws SingularBlock when the pivot collapses

// exp(X) by scaling-and-squaring with a Taylor kernel on the scaled matrix;
// accurate to ~1e-14 for the desk-scale norms used here.
Mat mat_exp(const Mat& x);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
// Throws IterationLimit if the off-diagonal mass fails to vanish.
std::vector<double> jacobi_eigenvalues(Mat sym, int max_sweeps = 64);

// Extreme eigenvalues of the pencil (M, G) with G symmetric positive
// definite: Cholesky-reduce and run Jacobi.
struct EigExtremes {
    double min_ev;
    double max_ev;
};
EigExtremes generalized_sym_extremes(const Mat& m, Mat g);

}  // namespace gabor
