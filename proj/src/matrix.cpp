#include "psombor/spectral.hpp"

#include <cmath>

namespace psombor {

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

std::vector<double> SymMatrix::row_sums() const {
    std::vector<double> sums(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) sums[i] += (*this)(i, j);
    return sums;
}

double SymMatrix::half_total() const {
    double s = 0.0;
    for (double x : data_) s += x;
    return 0.5 * s;
}

double sombor_weight(double du, double dv, double p) {
    if (p == 0.0) throw DomainError("p-Sombor weight undefined for p = 0");
    return std::pow(std::pow(du, p) + std::pow(dv, p), 1.0 / p);
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
    return a;
}

SymMatrix sombor_matrix(const Graph& g, double p) {
    if (p == 0.0) throw DomainError("p-Sombor matrix undefined for p = 0");
    SymMatrix s(g.order());
    const auto& d = g.degrees();
    for (const Edge& e : g.edges()) {
        s.set(e.u, e.v, sombor_weight(static_cast<double>(d[e.u]), static_cast<double>(d[e.v]), p));
    }
    return s;
}

SymMatrix sombor_laplacian(const Graph& g, double p) {
    const SymMatrix s = sombor_matrix(g, p);
    const auto sums = s.row_sums();
    SymMatrix l(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        l.set(i, i, sums[i]);
        for (std::size_t j = i + 1; j < g.order(); ++j) {
            if (s(i, j) != 0.0) l.set(i, j, -s(i, j));
        }
    }
    return l;
}

const char* to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::p_sombor: return "p_sombor";
        case MatrixKind::p_laplacian: return "p_laplacian";
    }
    return "unknown";
}

}  // namespace psombor
