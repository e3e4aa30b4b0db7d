#pragma once

#include <cstddef>

namespace psombor::tol {

// Jacobi stops once the off-diagonal Frobenius norm is below this times max(1, ||M||_F).
inline constexpr double jacobi_off_diagonal = 1e-12;
inline constexpr std::size_t jacobi_max_sweeps = 100;

// Eigenvalue counted as zero when |λ| <= inertia_zero * max(1, ||M||_F).
inline constexpr double inertia_zero = 1e-8;

// Adjacent sorted eigenvalues are merged when the gap is <= distinct_gap * max(1, |λ|).
inline constexpr double distinct_gap = 1e-7;

// Relative slack allowed when asserting an inequality, and when declaring equality.
inline constexpr double bound_holds = 1e-8;
inline constexpr double bound_equality = 1e-8;

// Estrada sums are evaluated directly; exp() starts to overflow past ~709.
inline constexpr double estrada_overflow_warning = 700.0;

}  // namespace psombor::tol
