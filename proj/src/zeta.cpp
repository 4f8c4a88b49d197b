#include "riemann/zeta.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "riemann/critical_line.hpp"
#include "riemann/errors.hpp"
#include "riemann/primes.hpp"

namespace riemann {
namespace {

using constants::ln2;
using constants::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLogBorweinRate = std::log(3.0 + std::sqrt(8.0));
const double kLogPi = std::log(pi);

// Beyond this height the a-priori error estimate is widened.
constexpr double kWideningHeight = 50.0;

// Bernoulli B_2, B_4, ..., B_20 as doubles, for remainder terms.
const std::array<double, 10>& even_bernoulli() {
  static const std::array<double, 10> table = [] {
    std::array<double, 10> out{};
    for (unsigned j = 1; j <= out.size(); ++j) out[j - 1] = bernoulli(2 * j).to_double();
    return out;
  }();
  return table;
}

// Borwein weights w_k = (d_n - d_k) / d_n, k = 0..n-1, computed in log space.
std::vector<double> borwein_weights(std::size_t n) {
  const double nd = static_cast<double>(n);
  std::vector<double> log_c(n + 1);
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= n; ++i) {
    const double id = static_cast<double>(i);
    // c_i = n (n+i-1)! 4^i / ((n-i)! (2i)!)
    log_c[i] = std::log(nd) + std::lgamma(nd + id) - std::lgamma(nd - id + 1.0) + id * std::log(4.0) -
               std::lgamma(2.0 * id + 1.0);
    max_log = std::max(max_log, log_c[i]);
  }
  std::vector<double> tail(n + 1);
  double running = 0.0;
  for (std::size_t i = n + 1; i-- > 0;) {
    running += std::exp(log_c[i] - max_log);
    tail[i] = running;
  }
  const double total = running;
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = tail[k + 1] / total;
  return w;
}

std::size_t borwein_terms(Complex s, double tol) {
  const double t = std::abs(s.imag());
  double log_bound = 0.5 * pi * t + std::log(3.0 * (1.0 + 2.0 * t));
  if (s.real() >= 0.5) log_bound = std::max(log_bound, std::log(2.0) - log_gamma(s).real());
  const double n = (log_bound - std::log(tol)) / kLogBorweinRate;
  return static_cast<std::size_t>(std::max(16.0, std::ceil(n) + 2.0));
}

// Error widening for heights where accumulated rounding in the long sums
// starts to dominate the a-priori bound.
double widen(double error, double height) {
  if (height <= kWideningHeight) return error;
  const double r = height / kWideningHeight;
  return error * r * r;
}

int nearest_guard_index(Complex s) {
  return static_cast<int>(std::nearbyint(s.imag() * ln2 / (2.0 * pi)));
}

// 1 - 2^{1-s}
Complex eta_factor(Complex s) { return -expm1((1.0 - s) * ln2); }

// Plain Dirichlet series when its tail bound N^{1-sigma}/(sigma-1) fits.
bool direct_series_viable(Complex s, const EvalOptions& opts, std::size_t* n_out) {
  const double sigma = s.real();
  if (sigma <= 1.5) return false;
  const double n = std::pow(0.5 * opts.tol * (sigma - 1.0), 1.0 / (1.0 - sigma));
  if (!(n < static_cast<double>(opts.max_terms))) return false;
  *n_out = static_cast<std::size_t>(std::max(2.0, std::ceil(n)));
  return true;
}

ZetaValue zeta_direct(Complex s, std::size_t n) {
  Complex sum = 0.0;
  for (std::size_t k = n; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const double sigma = s.real();
  const double tail = std::pow(static_cast<double>(n), 1.0 - sigma) / (sigma - 1.0);
  return {sum, tail + 4 * kEps * std::abs(sum)};
}

// zeta via sum_{n<=N} [n (n+1)^{-s} - (n - s) n^{-s}] / (s - 1), with the
// remainder closed by Bernoulli (Euler-Maclaurin) terms.
ZetaValue zeta_alternative_series(Complex s) {
  const auto n_terms = static_cast<std::size_t>(std::max(20.0, std::ceil(std::abs(s)) + 20.0));
  const double big_n = static_cast<double>(n_terms);

  Complex partial = 0.0;
  for (std::size_t n = n_terms; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    partial += nd * std::exp(-s * std::log(nd + 1.0)) - (nd - s) * std::exp(-s * std::log(nd));
  }
  partial /= (s - 1.0);

  // sum_{n>N} n^{-s} = N^{1-s}/(s-1) - N^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1} + ...
  const Complex n_pow = std::exp(-s * std::log(big_n));
  Complex tail = big_n * n_pow / (s - 1.0) - 0.5 * n_pow;
  Complex rising = s;  // (s)_{2j-1}
  Complex power = n_pow / big_n;
  double factorial = 2.0;
  double last = 0.0;
  const auto& b = even_bernoulli();
  for (std::size_t j = 1; j <= b.size(); ++j) {
    const Complex term = b[j - 1] / factorial * rising * power;
    tail += term;
    last = std::abs(term);
    const double jd = static_cast<double>(j);
    rising *= (s + 2.0 * jd - 1.0) * (s + 2.0 * jd);
    power /= big_n * big_n;
    factorial *= (2.0 * jd + 1.0) * (2.0 * jd + 2.0);
  }
  // The string of formulae partial sum already contains ((N+1)^{1-s} - (N+1)^{-s})/(s-1).
  const double np1 = big_n + 1.0;
  const Complex included = (std::exp((1.0 - s) * std::log(np1)) - std::exp(-s * std::log(np1))) / (s - 1.0);
  const Complex value = partial + (tail - included);
  return {value, last + 8 * kEps * (1.0 + std::abs(value))};
}

ZetaValue zeta_right(Complex s, const EvalOptions& opts) {
  const int k = nearest_guard_index(s);
  if (k != 0 && std::abs(s - eta_denominator_zero(k)) < opts.eta_singularity_guard) {
    return zeta_alternative_series(s);
  }
  std::size_t n = 0;
  if (direct_series_viable(s, opts, &n)) return zeta_direct(s, n);
  const ZetaValue e = eta_with_error(s, opts);
  const Complex denom = eta_factor(s);
  return {e.value / denom, e.error / std::abs(denom)};
}

// 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), in log form so large |Im s| cannot overflow.
Complex reflection_factor(Complex s) {
  return std::exp(s * ln2 + (s - 1.0) * kLogPi + log_sin_pi(0.5 * s) + log_gamma(1.0 - s));
}

}  // namespace

// ---------------------------------------------------------------------------

DomainRegion classify(Complex s) {
  if (s == Complex(1.0, 0.0)) throw PoleError("pole at s=1");
  if (s.real() > 1.0) return DomainRegion::RightHalf;
  if (s.real() > 0.0) return DomainRegion::CriticalStrip;
  return DomainRegion::LeftHalf;
}

void EvalOptions::validate() const {
  if (!(tol > 0.0)) throw DomainError("EvalOptions: tol must be positive");
  if (max_terms < 16) throw DomainError("EvalOptions: max_terms must be >= 16");
  if (!(eta_singularity_guard >= 0.0)) throw DomainError("EvalOptions: eta_singularity_guard must be >= 0");
}

Complex eta_denominator_zero(long k) { return {1.0, 2.0 * pi * static_cast<double>(k) / ln2}; }

ZetaValue eta_with_error(Complex s, const EvalOptions& opts) {
  opts.validate();
  if (!(s.real() > 0.0)) throw DomainError("eta: requires Re s > 0");
  const std::size_t n = borwein_terms(s, opts.tol);
  if (n > opts.max_terms) {
    throw ConvergenceError("eta: needs " + std::to_string(n) + " terms, max_terms is " +
                           std::to_string(opts.max_terms));
  }
  const std::vector<double> w = borwein_weights(n);
  Complex sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    const Complex term = w[k] * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? term : -term;
    magnitude += std::abs(term);
  }
  const double error = opts.tol + 4 * kEps * magnitude;
  return {sum, widen(error, std::abs(s.imag()))};
}

Complex eta(Complex s, const EvalOptions& opts) { return eta_with_error(s, opts).value; }

ZetaValue zeta_with_error(Complex s, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("zeta: non-finite argument");
  switch (classify(s)) {
    case DomainRegion::RightHalf:
    case DomainRegion::CriticalStrip:
      return zeta_right(s, opts);
    case DomainRegion::LeftHalf:
      break;
  }
  if (s == Complex(0.0, 0.0)) return {-0.5, kEps};
  if (s.imag() == 0.0 && sin_pi(0.5 * s) == Complex(0.0, 0.0)) return {0.0, 0.0};  // trivial zeros
  const ZetaValue mirrored = zeta_right(1.0 - s, opts);
  const Complex factor = reflection_factor(s);
  const Complex value = factor * mirrored.value;
  return {value, std::abs(factor) * mirrored.error + 16 * kEps * std::abs(value)};
}

Complex zeta(Complex s, const EvalOptions& opts) { return zeta_with_error(s, opts).value; }

Complex zeta_times_s_minus_1(Complex s, const EvalOptions& opts) {
  if (std::abs(s - 1.0) > 0.25) return (s - 1.0) * zeta(s, opts);
  // (s-1)/(1-2^{1-s}) = (1/ln2) w/expm1(w) with w = (1-s) ln 2.
  const Complex w = (1.0 - s) * ln2;
  const Complex ratio = (w == Complex(0.0, 0.0)) ? Complex(1.0 / ln2) : w / expm1(w) / ln2;
  return eta(s, opts) * ratio;
}

Complex euler_product(Complex s, std::size_t p_max) {
  if (!(s.real() > 1.0)) throw DomainError("euler_product: requires Re s > 1");
  if (p_max < 2) throw DomainError("euler_product: p_max must be >= 2");
  const PrimeSieve sieve(p_max);
  Complex product = 1.0;
  for (std::size_t p = 2; p <= p_max; ++p) {
    if (sieve.is_prime(p)) product /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
  }
  return product;
}

// ---------------------------------------------------------------------------

Complex xi(Complex s, const EvalOptions& opts) {
  if (std::abs(s - 1.0) < 1e-8) return xi(1.0 - s, opts);
  if (std::abs(s) < 0.5) {
    // Pole-cancelled form (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s).
    return (s - 1.0) * std::exp(-0.5 * s * kLogPi + log_gamma(1.0 + 0.5 * s)) * zeta(s, opts);
  }
  const Complex half = 0.5 * s;
  if (half.imag() == 0.0 && half.real() <= 0.0 && half.real() == std::floor(half.real())) {
    // Gamma(s/2) pole against a trivial zero.
    return xi(1.0 - s, opts);
  }
  return 0.5 * s * zeta_times_s_minus_1(s, opts) * std::exp(-half * kLogPi + log_gamma(half));
}

double xi_big(double t, const EvalOptions& opts) {
  const Complex v = xi(Complex(0.5, t), opts);
  if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real()))) {
    throw ConsistencyError("xi_big: imaginary residual " + std::to_string(v.imag()) + " at t=" + std::to_string(t));
  }
  return v.real();
}

double xi_big_integral(double t, double tol) {
  if (!std::isfinite(t)) throw DomainError("xi_big_integral: t must be finite");
  const double half_t = 0.5 * t;
  auto integrand = [half_t](double x) {
    return jacobi_psi(x) * std::pow(x, -0.75) * std::cos(half_t * std::log(x));
  };
  // psi(x) < 2 e^{-pi x}; past x = 1 + 45/pi the integrand is below 1e-19.
  double error = 0.0;
  const double upper = 1.0 + 45.0 / pi;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 1.0, upper, 12, 1e-13, &error);
  const double scale = t * t + 0.25;
  if (error * scale > std::max(tol, 1e-8)) throw ConvergenceError("xi_big_integral: quadrature did not converge");
  return 0.5 - scale * integral;
}

double xi_fourier_kernel(double u) {
  const double e4u = std::exp(4.0 * u);
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double nn = static_cast<double>(n) * n;
    const double exponent = 5.0 * u - nn * pi * e4u;
    const double term = pi * nn * (2.0 * nn * pi * e4u - 3.0) * std::exp(exponent);
    sum += term;
    if (exponent < -60.0) break;
  }
  return sum;
}

double xi_big_fourier(double t, double tol) {
  if (!std::isfinite(t)) throw DomainError("xi_big_fourier: t must be finite");
  auto integrand = [t](double u) { return xi_fourier_kernel(u) * std::cos(2.0 * u * t); };
  // Phi decays like exp(-pi e^{4u}); by u = 1.25 it is below 1e-60.
  double error = 0.0;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.25, 12, 1e-13, &error);
  if (8.0 * error > std::max(tol, 1e-6)) throw ConvergenceError("xi_big_fourier: quadrature did not converge");
  return 8.0 * integral;
}

// ---------------------------------------------------------------------------

namespace {

// prod over pairs (1 - s/rho)(1 - s/(1-rho)) = prod (1 + s(s-1)/(1/4 + t^2)).
Complex paired_product(Complex s, const ZeroTable& zeros) {
  if (zeros.zeros.empty()) throw DomainError("empty zero table");
  const Complex ss1 = s * (s - 1.0);
  Complex product = 1.0;
  for (const auto& z : zeros.zeros) product *= 1.0 + ss1 / (0.25 + z.t * z.t);
  return product;
}

}  // namespace

Complex hadamard_zeta(Complex s, const ZeroTable& zeros) {
  if (s == Complex(1.0, 0.0)) throw PoleError("pole at s=1");
  const Complex product = paired_product(s, zeros);
  const Complex prefactor = std::exp(0.5 * s * kLogPi) * rgamma(1.0 + 0.5 * s) / (2.0 * (s - 1.0));
  return prefactor * product;
}

Complex xi_product(Complex s, const ZeroTable& zeros) { return 0.5 * paired_product(s, zeros); }

}  // namespace riemann
