#include "riemann/explicit_formula.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <string>

#include "riemann/errors.hpp"

namespace riemann {
namespace {

using constants::pi;

std::size_t pairs_used(const ZeroTable& zeros, std::size_t pairs) { return std::min(pairs, zeros.size()); }

// Pi(x) explicit formula without the x > 2 guard; pi_explicit needs x = 2.
ExplicitResult big_pi_explicit_unchecked(double x, const ZeroTable& zeros, std::size_t pairs) {
  const double log_x = std::log(x);
  const std::size_t k_max = pairs_used(zeros, pairs);
  double oscillatory = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    // Li(x^rho) + Li(x^{1-rho}) = 2 Re Ei(rho log x) on the critical line.
    const Complex rho(0.5, zeros.zeros[k].t);
    oscillatory -= 2.0 * exp_integral_ei(rho * log_x).real();
  }
  ExplicitResult r;
  r.n_zero_pairs = k_max;
  r.smooth_part = li(x) - constants::ln2;
  r.oscillatory_part = oscillatory;
  r.tail_part = tail_integral(x);
  r.value = r.smooth_part + r.oscillatory_part + r.tail_part;
  return r;
}

}  // namespace

double li(double x) {
  if (!(x > 0.0)) throw DomainError("li: x must be positive");
  if (std::abs(x - 1.0) < 1e-12) throw DomainError("li: logarithmic singularity at x=1");
  return exp_integral_ei(std::log(x));
}

Complex li_complex(double x, Complex rho) {
  if (!(x > 1.0)) throw DomainError("li_complex: x must be > 1");
  if (rho.imag() == 0.0) throw DomainError("li_complex: rho must be non-real");
  return exp_integral_ei(rho * std::log(x));
}

double tail_integral(double x, double tol) {
  if (!(x > 1.0)) throw DomainError("tail_integral: x must be > 1");
  // t = e^u: the integrand becomes 1 / ((e^{2u} - 1) u), decaying like e^{-2u}.
  const double lower = std::log(x);
  auto integrand = [lower](double v) {
    const double u = lower + v;
    return 1.0 / (std::expm1(2.0 * u) * u);
  };
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  const double value = integrator.integrate(integrand, 1e-14, &error);
  if (!(error <= std::max(tol, 1e-14 * value))) throw ConvergenceError("tail_integral: quadrature did not converge");
  return value;
}

ExplicitResult riemann_big_pi_explicit(double x, const ZeroTable& zeros, std::size_t pairs) {
  if (!(x > 2.0)) throw DomainError("riemann_big_pi_explicit: x must be > 2");
  if (zeros.empty()) throw DomainError("riemann_big_pi_explicit: empty zero table");
  return big_pi_explicit_unchecked(x, zeros, pairs);
}

ExplicitResult von_mangoldt_psi_explicit(double x, const ZeroTable& zeros, std::size_t pairs) {
  if (!(x > 1.0)) throw DomainError("von_mangoldt_psi_explicit: x must be > 1");
  const double log_x = std::log(x);
  const std::size_t k_max = pairs_used(zeros, pairs);
  double oscillatory = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    const Complex rho(0.5, zeros.zeros[k].t);
    oscillatory -= 2.0 * (std::exp(rho * log_x) / rho).real();
  }
  ExplicitResult r;
  r.n_zero_pairs = k_max;
  r.smooth_part = x - std::log(2.0 * pi) - 0.5 * std::log1p(-1.0 / (x * x));
  r.oscillatory_part = oscillatory;
  r.tail_part = 0.0;
  r.value = r.smooth_part + r.oscillatory_part + r.tail_part;
  return r;
}

double pi_explicit(double x, const ZeroTable& zeros, std::size_t pairs) {
  if (!(x > 2.0)) throw DomainError("pi_explicit: x must be > 2");
  if (zeros.empty()) throw DomainError("pi_explicit: empty zero table");
  double sum = 0.0;
  for (unsigned n = 1;; ++n) {
    const double root = std::pow(x, 1.0 / n);
    if (root < 2.0) break;
    const int mu = mobius(n);
    if (mu == 0) continue;
    sum += mu * big_pi_explicit_unchecked(root, zeros, pairs).value / n;
  }
  return sum;
}

double density_term(double x, double alpha) {
  if (!(x > 1.0)) throw DomainError("density_term: x must be > 1");
  return 2.0 / std::sqrt(x) * std::cos(alpha * std::log(x));
}

std::vector<StaircaseSample> staircase_report(std::span<const double> x_grid, const ZeroTable& zeros,
                                              const PrimeSieve& sieve, const StaircaseOptions& opts) {
  std::vector<StaircaseSample> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) {
    if (!(x > 2.0)) throw DomainError("staircase_report: grid values must be > 2");
    if (x > static_cast<double>(sieve.limit())) {
      throw DomainError("staircase_report: x=" + std::to_string(x) + " beyond sieve limit");
    }
    if (!opts.midpoint_at_jumps && prime_power(x, sieve)) x += std::max(1e-9, 8.0 * x * 1e-16);

    StaircaseSample row;
    row.x = x;
    switch (opts.kind) {
      case Staircase::Psi: {
        row.exact = chebyshev_psi(x, sieve);
        const ExplicitResult r = von_mangoldt_psi_explicit(x, zeros, opts.pairs);
        row.approx = r.value;
        row.n_zeros_used = r.n_zero_pairs;
        break;
      }
      case Staircase::BigPi: {
        row.exact = big_pi(x, sieve);
        const ExplicitResult r = riemann_big_pi_explicit(x, zeros, opts.pairs);
        row.approx = r.value;
        row.n_zeros_used = r.n_zero_pairs;
        break;
      }
      case Staircase::Pi:
        row.exact = prime_pi(x, sieve);
        row.approx = pi_explicit(x, zeros, opts.pairs);
        row.n_zeros_used = pairs_used(zeros, opts.pairs);
        break;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace riemann
