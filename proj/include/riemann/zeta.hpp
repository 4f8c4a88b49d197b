#pragma once

#include <cstddef>

#include "riemann/special_fn.hpp"

namespace riemann {

struct ZeroTable;

enum class DomainRegion {
  RightHalf,      // Re s > 1
  CriticalStrip,  // 0 < Re s <= 1, s != 1
  LeftHalf,       // Re s <= 0
};

/// Throws PoleError for s = 1.
DomainRegion classify(Complex s);

struct EvalOptions {
  double tol = 1e-13;
  std::size_t max_terms = 4096;
  double eta_singularity_guard = 1e-3;

  void validate() const;
};

/// Value together with an a-priori absolute error estimate.
struct ZetaValue {
  Complex value;
  double error = 0.0;
};

/// Dirichlet eta, sum (-1)^{n+1} n^{-s}, for Re s > 0. Borwein-weighted
/// partial sums; the term count follows from the published error bound, so
/// it grows linearly with |Im s|.
Complex eta(Complex s, const EvalOptions& opts = {});
ZetaValue eta_with_error(Complex s, const EvalOptions& opts = {});

/// Riemann zeta on C \ {1}.
///   Re s <= 0          reflect through the functional equation
///   0 < Re s, near s_k  alternative series closed by Bernoulli remainders
///   0 < Re s            eta(s) / (1 - 2^{1-s}), or the plain Dirichlet
///                       series once its tail bound meets tol
/// For |Im s| > 50 the error estimate is widened rather than failing.
Complex zeta(Complex s, const EvalOptions& opts = {});
ZetaValue zeta_with_error(Complex s, const EvalOptions& opts = {});

/// (s - 1) zeta(s); analytic at s = 1 where it equals 1.
Complex zeta_times_s_minus_1(Complex s, const EvalOptions& opts = {});

/// The points s_k = 1 + 2 pi i k / ln 2 where 1 - 2^{1-s} vanishes (k != 0).
Complex eta_denominator_zero(long k);

/// prod_{p <= p_max} (1 - p^{-s})^{-1}, Re s > 1.
Complex euler_product(Complex s, std::size_t p_max);

/// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s); entire.
Complex xi(Complex s, const EvalOptions& opts = {});

/// Xi(t) = xi(1/2 + it), real. Throws ConsistencyError if the imaginary
/// residual exceeds 1e-10 (1 + |Xi|).
double xi_big(double t, const EvalOptions& opts = {});

/// Xi(t) = 1/2 - (t^2 + 1/4) int_1^inf psi(x) x^{-3/4} cos(t/2 log x) dx.
double xi_big_integral(double t, double tol = 1e-12);

/// Xi(t) = 8 int_0^inf Phi(u) cos(2ut) du,
/// Phi(u) = sum pi n^2 (2 n^2 pi e^{4u} - 3) e^{5u - n^2 pi e^{4u}}.
double xi_big_fourier(double t, double tol = 1e-12);

/// The kernel Phi(u) of xi_big_fourier.
double xi_fourier_kernel(double u);

/// Truncated Hadamard product over paired zeros rho, 1 - rho (rho = 1/2 + i t_k):
///   zeta(s) = pi^{s/2} / (2 (s-1) Gamma(1 + s/2)) prod (1 - s/rho)(1 - s/(1-rho)).
Complex hadamard_zeta(Complex s, const ZeroTable& zeros);

/// xi(0) prod over paired zeros.
Complex xi_product(Complex s, const ZeroTable& zeros);

}  // namespace riemann
