#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psombor/graph.hpp"

namespace psombor {

// Dense symmetric matrix, row-major full storage.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t order() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    // Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value) {
        data_[i * n_ + j] = value;
        data_[j * n_ + i] = value;
    }

    double trace() const;
    double frobenius_norm() const;
    std::vector<double> row_sums() const;
    // Half of the sum of all entries.
    double half_total() const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ((du)^p + (dv)^p)^(1/p); p must be non-zero.
double sombor_weight(double du, double dv, double p);

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix sombor_matrix(const Graph& g, double p);
// D_p - S_p where D_p holds the row sums of S_p.
SymMatrix sombor_laplacian(const Graph& g, double p);

enum class MatrixKind { adjacency, p_sombor, p_laplacian };
const char* to_string(MatrixKind kind);

struct Inertia {
    std::size_t positive = 0;
    std::size_t zero = 0;
    std::size_t negative = 0;
};

struct EigenCluster {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

struct SpectralDecomposition {
    MatrixKind kind = MatrixKind::adjacency;
    std::optional<double> p;
    std::vector<double> values;                             // descending
    std::optional<std::vector<std::vector<double>>> vectors;  // vectors[k] pairs with values[k]
    Inertia inertia;
    std::vector<EigenCluster> distinct;  // descending, multiplicities sum to n
    double matrix_norm = 0.0;            // ||M||_F
    double residual = 0.0;               // off-diagonal norm at convergence
    std::size_t sweeps = 0;

    std::size_t order() const { return values.size(); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Cyclic Jacobi on a copy of m, sweeping the upper triangle row by row.
SpectralDecomposition eigen_decompose(const SymMatrix& m, bool want_vectors,
                                      MatrixKind kind = MatrixKind::adjacency,
                                      std::optional<double> p = std::nullopt);

SpectralDecomposition adjacency_spectrum(const Graph& g, bool want_vectors = false);
SpectralDecomposition sombor_spectrum(const Graph& g, double p, bool want_vectors = false);
SpectralDecomposition laplacian_spectrum(const Graph& g, double p, bool want_vectors = false);

// Product of |λ_i|, or exactly 0 when any eigenvalue is inside the zero tolerance.
double abs_determinant(const SpectralDecomposition& dec);

// ---- moments ---------------------------------------------------------------

struct MomentSet {
    double p = 0.0;
    std::array<double, 5> n{};  // N_0 .. N_4

    double operator[](std::size_t k) const { return n.at(k); }
};

// Trace moments from the degree data alone: edge weights, triangle sums and
// the Frobenius norm of S_p^2.
MomentSet moments_closed_form(const Graph& g, double p);

// Σ λ_i^k.
double moment_from_spectrum(const SpectralDecomposition& dec, int k);

// Number of paths with two edges, M1(G)/2 - m.
std::size_t two_path_count(const Graph& g);

}  // namespace psombor
