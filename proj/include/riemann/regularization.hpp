#pragma once

#include <span>

#include "riemann/special_fn.hpp"

namespace riemann {

// Units: hbar = c = 1 throughout. Only the formatters reintroduce hbar c.

/// Ideal parallel plates: separation a, area A.
struct CasimirConfig {
  double a = 1.0;
  double area = 1.0;

  void validate() const;
};

/// hbar c in J m, for display.
inline constexpr double kHbarC = 3.16152677332e-26;

/// Spectral zeta of -Box_E between the plates, per unit normalization volume A T_E:
///   (4 pi/(2 pi)^3) (pi/a)^{3-2s} zeta(2s-3) Gamma(3/2) Gamma(s-3/2) / Gamma(s).
/// Includes the factor 2 for photon polarizations; a single scalar field gives half.
/// Throws PoleError at s = 2 and where Gamma(s - 3/2) has a pole.
Complex operator_zeta(Complex s, const CasimirConfig& cfg);

/// d/ds of operator_zeta at s = 0, per unit A T_E: pi^2 / (360 a^3).
double operator_zeta_prime_at_zero(const CasimirConfig& cfg);

/// Vacuum energy shift -zeta'(0) A / 2 = -pi^2 A / (720 a^3).
double casimir_energy(const CasimirConfig& cfg);

/// F/A = -pi^2 / (240 a^4).
double casimir_force_per_area(double a);

/// F/A = -(1/A) d(energy)/da by a central difference of casimir_energy.
double casimir_force_per_area_fd(double a, double h = 1e-4);

/// Finite spectral zeta sum lambda^{-s} over positive eigenvalues.
Complex spectral_zeta(std::span<const double> eigenvalues, Complex s);

/// exp(-zeta_A'(0)), with the derivative taken by a complex step on
/// spectral_zeta. Equals the product of the eigenvalues.
double zeta_regularized_determinant(std::span<const double> eigenvalues);

}  // namespace riemann
