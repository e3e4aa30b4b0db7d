#include "psombor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "psombor/tolerances.hpp"

namespace psombor {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

// Flip so the component sum is non-negative; ties go to the first non-negligible entry.
void orient(std::vector<double>& v) {
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    bool flip = sum < -1e-12;
    if (std::abs(sum) <= 1e-12) {
        for (double x : v) {
            if (std::abs(x) > 1e-12) {
                flip = x < 0.0;
                break;
            }
        }
    }
    if (flip)
        for (double& x : v) x = -x;
}

}  // namespace

SpectralDecomposition eigen_decompose(const SymMatrix& m, bool want_vectors, MatrixKind kind,
                                      std::optional<double> p) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double x = m(i, j);
            if (!std::isfinite(x)) throw std::invalid_argument("eigen_decompose: non-finite matrix entry");
            a[i * n + j] = x;
        }
    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    SpectralDecomposition dec;
    dec.kind = kind;
    dec.p = p;
    dec.matrix_norm = m.frobenius_norm();
    const double target = tol::jacobi_off_diagonal * std::max(1.0, dec.matrix_norm);

    double off = off_diagonal_norm(a, n);
    std::size_t sweep = 0;
    while (off > target) {
        if (sweep == tol::jacobi_max_sweeps) {
            throw ConvergenceError("Jacobi did not converge after " + std::to_string(sweep) +
                                       " sweeps (off-diagonal norm " + std::to_string(off) + ")",
                                   off);
        }
        ++sweep;
        for (std::size_t pi = 0; pi < n; ++pi) {
            for (std::size_t qi = pi + 1; qi < n; ++qi) {
                const double apq = a[pi * n + qi];
                if (apq == 0.0) continue;
                const double app = a[pi * n + pi];
                const double aqq = a[qi * n + qi];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + pi];
                    const double akq = a[k * n + qi];
                    a[k * n + pi] = c * akp - s * akq;
                    a[k * n + qi] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[pi * n + k];
                    const double aqk = a[qi * n + k];
                    a[pi * n + k] = c * apk - s * aqk;
                    a[qi * n + k] = s * apk + c * aqk;
                }
                a[pi * n + qi] = 0.0;
                a[qi * n + pi] = 0.0;
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[k * n + pi];
                        const double vkq = v[k * n + qi];
                        v[k * n + pi] = c * vkp - s * vkq;
                        v[k * n + qi] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = off_diagonal_norm(a, n);
    }
    dec.sweeps = sweep;
    dec.residual = off;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });
    dec.values.reserve(n);
    for (std::size_t k : order) dec.values.push_back(a[k * n + k]);

    if (want_vectors) {
        std::vector<std::vector<double>> cols;
        cols.reserve(n);
        for (std::size_t k : order) {
            std::vector<double> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
            orient(col);
            cols.push_back(std::move(col));
        }
        dec.vectors = std::move(cols);
    }

    const double zero = tol::inertia_zero * std::max(1.0, dec.matrix_norm);
    for (double x : dec.values) {
        if (x > zero) {
            ++dec.inertia.positive;
        } else if (x < -zero) {
            ++dec.inertia.negative;
        } else {
            ++dec.inertia.zero;
        }
    }

    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        double sum = dec.values[i];
        while (j < n && dec.values[j - 1] - dec.values[j] <=
                            tol::distinct_gap * std::max(1.0, std::abs(dec.values[j - 1]))) {
            sum += dec.values[j];
            ++j;
        }
        dec.distinct.push_back({sum / static_cast<double>(j - i), j - i});
        i = j;
    }
    return dec;
}

SpectralDecomposition adjacency_spectrum(const Graph& g, bool want_vectors) {
    return eigen_decompose(adjacency_matrix(g), want_vectors, MatrixKind::adjacency);
}

SpectralDecomposition sombor_spectrum(const Graph& g, double p, bool want_vectors) {
    return eigen_decompose(sombor_matrix(g, p), want_vectors, MatrixKind::p_sombor, p);
}

SpectralDecomposition laplacian_spectrum(const Graph& g, double p, bool want_vectors) {
    return eigen_decompose(sombor_laplacian(g, p), want_vectors, MatrixKind::p_laplacian, p);
}

double abs_determinant(const SpectralDecomposition& dec) {
    if (dec.inertia.zero > 0) return 0.0;
    double d = 1.0;
    for (double x : dec.values) d *= std::abs(x);
    return d;
}

}  // namespace psombor
