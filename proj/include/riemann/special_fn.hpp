#pragma once

#include <complex>
#include <cstddef>
#include <numbers>

#include "riemann/rational.hpp"

namespace riemann {

using Complex = std::complex<double>;

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
// Gauss' lemniscate constant, Gamma(1/4)^2 / (2 sqrt(2 pi)).
inline constexpr double lemniscate = 2.622057554292119810464839589891119413682754951431623162816821703;
inline constexpr double ln2 = std::numbers::ln2;
}  // namespace constants

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// Log-gamma on the standard branch: analytic on C \ (-inf, 0], real on the
/// positive axis, continuous in Im z (so Im log_gamma(1/4 + it/2) grows like
/// t log t rather than wrapping). Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

Complex gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// Weierstrass product 1/Gamma(z) = z e^{gamma z} prod_{k<=n} (1 + z/k) e^{-z/k},
/// inverted. Slow; used as an oracle against log_gamma.
Complex gamma_weierstrass(Complex z, std::size_t n_terms);

/// sin(pi x) from the truncated product pi x prod_{k<=n} (1 - x^2/k^2).
double sin_pi_product(double x, std::size_t n_terms);

/// sin(pi z) with exact argument reduction, so integers give exact zeros.
Complex sin_pi(Complex z);

/// log sin(pi z) up to a multiple of 2 pi i; stays finite for large |Im z|.
Complex log_sin_pi(Complex z);

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

// ---------------------------------------------------------------------------
// Exponential integral
// ---------------------------------------------------------------------------

namespace ei_detail {
// Near the positive real axis: power series below the cutoff, asymptotic
// expansion above. Elsewhere the continued fraction for E1(-z).
inline constexpr double asymptotic_cutoff = 40.0;
}  // namespace ei_detail

/// Principal-branch Ei(z) = gamma + log z + sum z^n/(n n!), cut along the
/// negative real axis. On the cut the +i pi side is returned.
Complex exp_integral_ei(Complex z);

/// Real Ei(x) for x != 0 (Cauchy principal value for x > 0; -E1(-x) for x < 0).
double exp_integral_ei(double x);

/// E1(x) for real x > 0.
double exp_integral_e1(double x);

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

/// Exact B_n with B_1 = -1/2. Throws OverflowError once the int64 budget is
/// exhausted (n > 34 or so).
Rational bernoulli(unsigned n);

// ---------------------------------------------------------------------------
// Jacobi theta-type sums
// ---------------------------------------------------------------------------

/// psi(x) = sum_{n>=1} exp(-pi n^2 x), x > 0. Small arguments are mapped
/// through 2 psi(x) + 1 = x^{-1/2} (2 psi(1/x) + 1).
double jacobi_psi(double x, double tol = 1e-17);

/// psi'(x) = -sum pi n^2 exp(-pi n^2 x).
double jacobi_psi_deriv(double x, double tol = 1e-17);

/// Theta(x) = 2 psi(x) + 1 = sum_{n in Z} exp(-pi n^2 x).
double jacobi_theta(double x, double tol = 1e-17);

/// d/dx [x^{3/2} psi'(x)] = sum (n^4 pi^2 x - 3/2 n^2 pi) x^{1/2} exp(-n^2 pi x), x >= 1.
double jacobi_psi_weighted_deriv(double x, double tol = 1e-17);

}  // namespace riemann
