#pragma once

#include <optional>

#include "psombor/graph.hpp"
#include "psombor/spectral.hpp"

namespace psombor {

struct IndexBundle {
    double p = 0.0;
    double so_p = 0.0;
    double m1 = 0.0;      // first Zagreb, Σ d_i^2
    double isi = 0.0;     // Σ_{ij ∈ E} d_i d_j / (d_i + d_j)
    double randic = 0.0;  // Σ_{ij ∈ E} (d_i d_j)^(-1/2)
    std::optional<double> sigma_sq;  // variance of the edge weights; empty when m = 0
};

struct SpectralInvariants {
    double radius = 0.0;   // largest eigenvalue
    double spread = 0.0;   // largest - smallest
    double energy = 0.0;   // Σ |λ|
    double estrada = 0.0;  // Σ exp(λ)
    double abs_det = 0.0;
    bool estrada_overflow_risk = false;
};

double sombor_index(const Graph& g, double p);

// m1, isi and randic only; so_p and sigma_sq are left at their defaults.
IndexBundle classical_indices(const Graph& g);
IndexBundle index_bundle(const Graph& g, double p);

// Population variance of the p-Sombor edge weights.
std::optional<double> weight_variance(const Graph& g, double p);

SpectralInvariants spectral_invariants(const SpectralDecomposition& dec);

}  // namespace psombor
