#include "gabor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gabor/errors.hpp"

namespace gabor {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat multiply: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

Mat operator+(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

Mat operator*(double s, const Mat& x) {
    Mat r = x;
    for (double& v : r.a) v *= s;
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

double max_abs_diff(const Mat& x, const Mat& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

double inf_norm(const Mat& x) {
    double m = 0.0;
    for (int i = 0; i < x.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < x.cols; ++j) s += std::abs(x(i, j));
        m = std::max(m, s);
    }
    return m;
}

namespace {

// LU decomposition with partial pivoting; returns the permutation sign, or 0
// if a pivot degenerated.
int lu_factor(Mat& x, std::vector<int>& perm) {
    const int n = x.rows;
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(x(r, c)) > std::abs(x(p, c))) p = r;
        if (x(p, c) == 0.0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(x(p, j), x(c, j));
            std::swap(perm[p], perm[c]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            x(r, c) /= x(c, c);
            for (int j = c + 1; j < n; ++j) x(r, j) -= x(r, c) * x(c, j);
        }
    }
    return sign;
}

}  // namespace

double lu_det(Mat x) {
    std::vector<int> perm;
    const int sign = lu_factor(x, perm);
    if (sign == 0) return 0.0;
    double d = sign;
    for (int i = 0; i < x.rows; ++i) d *= x(i, i);
    return d;
}

Mat lu_inverse(Mat x) {
    const int n = x.rows;
    std::vector<int> perm;
    if (lu_factor(x, perm) == 0)
        throw SingularBlock("lu_inverse: singular matrix");
    Mat inv(n, n);
    std::vector<double> col(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = perm[i] == c ? 1.0 : 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) col[i] -= x(i, j) * col[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) col[i] -= x(i, j) * col[j];
            col[i] /= x(i, i);
        }
        for (int i = 0; i < n; ++i) inv(i, c) = col[i];
    }
    return inv;
}

Mat mat_exp(const Mat& x) {
    const int n = x.rows;
    int squarings = 0;
    double nrm = inf_norm(x);
    while (nrm > 0.5) {
        nrm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    Mat b = scale * x;

    // Taylor on the scaled matrix; ||b|| <= 0.5 so 24 terms reach ~1e-17.
    Mat term = Mat::identity(n);
    Mat sum = term;
    for (int k = 1; k <= 24; ++k) {
        term = (1.0 / k) * (term * b);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

std::vector<double> jacobi_eigenvalues(Mat s, int max_sweeps) {
    const int n = s.rows;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += s(i, j) * s(i, j);
        if (off < 1e-26 * static_cast<double>(n) * n) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = s(i, i);
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
    }
    throw IterationLimit("jacobi_eigenvalues: off-diagonal mass did not converge");
}

EigExtremes generalized_sym_extremes(const Mat& m, Mat g) {
    const int n = g.rows;
    // Cholesky of G with a roundoff-scale diagonal lift if needed.
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += g(i, i);
    for (int attempt = 0;; ++attempt) {
        Mat l(n, n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = g(i, j);
                for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
                if (i == j) {
                    if (s <= 0.0) { ok = false; break; }
                    l(i, i) = std::sqrt(s);
                } else {
                    l(i, j) = s / l(j, j);
                }
            }
        }
        if (!ok) {
            if (attempt >= 8) throw SingularBlock("generalized_sym_extremes: Gram matrix not PD");
            const double lift = std::ldexp(1e-14, 4 * attempt) * (tr / n);
            for (int i = 0; i < n; ++i) g(i, i) += lift;
            continue;
        }
        // B = L^-1 M L^-T by two triangular solves.
        Mat b = m;
        for (int c = 0; c < n; ++c) {  // solve L Y = M columnwise
            for (int i = 0; i < n; ++i) {
                double s = b(i, c);
                for (int k = 0; k < i; ++k) s -= l(i, k) * b(k, c);
                b(i, c) = s / l(i, i);
            }
        }
        for (int r = 0; r < n; ++r) {  // solve B L^T = Y rowwise
            for (int i = 0; i < n; ++i) {
                double s = b(r, i);
                for (int k = 0; k < i; ++k) s -= l(i, k) * b(r, k);
                b(r, i) = s / l(i, i);
            }
        }
        for (int i = 0; i < n; ++i)  // symmetrize roundoff
            for (int j = i + 1; j < n; ++j) {
                const double v = 0.5 * (b(i, j) + b(j, i));
                b(i, j) = b(j, i) = v;
            }
        const auto ev = jacobi_eigenvalues(std::move(b));
        return {ev.front(), ev.back()};
    }
}

}  // namespace gabor
