#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "riemann/critical_line.hpp"
#include "riemann/primes.hpp"

namespace riemann {

/// A zero-sum evaluation split into its parts; value is their sum.
struct ExplicitResult {
  double value = 0.0;
  std::size_t n_zero_pairs = 0;
  double smooth_part = 0.0;
  double oscillatory_part = 0.0;
  double tail_part = 0.0;
};

inline constexpr std::size_t kAllZeros = std::numeric_limits<std::size_t>::max();

/// Principal value of int_0^x dt / log t, x > 0, x != 1.
double li(double x);

/// Li(x^rho) := Ei(rho log x), x > 1, Im rho != 0.
Complex li_complex(double x, Complex rho);

/// int_x^inf dt / (t (t^2 - 1) log t), x > 1.
double tail_integral(double x, double tol = 1e-13);

/// Pi(x) = Li(x) - sum_rho Li(x^rho) - log 2 + int_x^inf dt/(t(t^2-1) log t),
/// zeros summed in pairs rho, 1 - rho in increasing height. x > 2.
ExplicitResult riemann_big_pi_explicit(double x, const ZeroTable& zeros, std::size_t pairs = kAllZeros);

/// psi(x) = x - log 2pi - 1/2 log(1 - x^{-2}) - sum_rho x^rho / rho. x > 1.
ExplicitResult von_mangoldt_psi_explicit(double x, const ZeroTable& zeros, std::size_t pairs = kAllZeros);

/// pi(x) = sum_n mu(n)/n Pi_explicit(x^{1/n}) over x^{1/n} >= 2. x > 2.
double pi_explicit(double x, const ZeroTable& zeros, std::size_t pairs = kAllZeros);

/// 2 x^{-1/2} cos(alpha log x) = x^{rho-1} + x^{-rho} for rho = 1/2 + i alpha. x > 1.
double density_term(double x, double alpha);

struct StaircaseSample {
  double x = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  std::size_t n_zeros_used = 0;
};

enum class Staircase { Psi, BigPi, Pi };

struct StaircaseOptions {
  Staircase kind = Staircase::Psi;
  std::size_t pairs = kAllZeros;
  // Shift exact prime-power abscissae by +1e-9 unless midpoint values are wanted.
  bool midpoint_at_jumps = false;
};

/// One row per grid point, in grid order.
std::vector<StaircaseSample> staircase_report(std::span<const double> x_grid, const ZeroTable& zeros,
                                              const PrimeSieve& sieve, const StaircaseOptions& opts = {});

}  // namespace riemann
