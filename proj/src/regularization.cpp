#include "riemann/regularization.hpp"

#include <cmath>

#include "riemann/errors.hpp"
#include "riemann/zeta.hpp"

namespace riemann {
namespace {

using constants::pi;

// 4 pi / (2 pi)^3
const double kMomentumMeasure = 4.0 * pi / std::pow(2.0 * pi, 3);

}  // namespace

void CasimirConfig::validate() const {
  if (!(a > 0.0)) throw DomainError("casimir: plate separation must be positive");
  if (!(area > 0.0)) throw DomainError("casimir: plate area must be positive");
}

Complex operator_zeta(Complex s, const CasimirConfig& cfg) {
  cfg.validate();
  if (s == Complex(2.0, 0.0)) throw PoleError("operator_zeta: pole of zeta(2s-3) at s=2");
  const Complex shifted = s - 1.5;
  if (shifted.imag() == 0.0 && shifted.real() <= 0.0 && shifted.real() == std::floor(shifted.real())) {
    throw PoleError("operator_zeta: pole of Gamma(s-3/2)");
  }
  const Complex recip = rgamma(s);
  if (recip == Complex(0.0, 0.0)) return 0.0;
  const Complex scale = std::exp((3.0 - 2.0 * s) * std::log(pi / cfg.a));
  return kMomentumMeasure * scale * zeta(2.0 * s - 3.0) * gamma(Complex(1.5, 0.0)) * gamma(shifted) * recip;
}

double operator_zeta_prime_at_zero(const CasimirConfig& cfg) {
  cfg.validate();
  // Only d/ds 1/Gamma(s) = 1 survives at s = 0.
  const double zeta_m3 = zeta(Complex(-3.0, 0.0)).real();
  const double gammas = gamma(Complex(1.5, 0.0)).real() * gamma(Complex(-1.5, 0.0)).real();
  return kMomentumMeasure * std::pow(pi / cfg.a, 3) * zeta_m3 * gammas;
}

double casimir_energy(const CasimirConfig& cfg) { return -0.5 * operator_zeta_prime_at_zero(cfg) * cfg.area; }

double casimir_force_per_area(double a) {
  if (!(a > 0.0)) throw DomainError("casimir: plate separation must be positive");
  return -pi * pi / (240.0 * a * a * a * a);
}

double casimir_force_per_area_fd(double a, double h) {
  if (!(a > h) || !(h > 0.0)) throw DomainError("casimir_force_per_area_fd: need 0 < h < a");
  const double up = casimir_energy({a + h, 1.0});
  const double down = casimir_energy({a - h, 1.0});
  return -(up - down) / (2.0 * h);
}

Complex spectral_zeta(std::span<const double> eigenvalues, Complex s) {
  Complex sum = 0.0;
  for (double lambda : eigenvalues) {
    if (!(lambda > 0.0)) throw DomainError("spectral_zeta: eigenvalues must be positive");
    sum += std::exp(-s * std::log(lambda));
  }
  return sum;
}

double zeta_regularized_determinant(std::span<const double> eigenvalues) {
  constexpr double h = 1e-20;
  const double derivative = spectral_zeta(eigenvalues, Complex(0.0, h)).imag() / h;
  return std::exp(-derivative);
}

}  // namespace riemann
