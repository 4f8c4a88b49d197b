#include "riemann/primes.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "riemann/errors.hpp"
#include "riemann/zeta.hpp"

namespace riemann {
namespace {

// p^k as long double, exact while it stays below 2^64.
long double ipow(std::uint64_t base, unsigned k) {
  long double r = 1.0L;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<long double>(base);
  return r;
}

bool is_integer(double x) { return x == std::floor(x); }

void require_covered(double x, const PrimeSieve& sieve, const char* who) {
  if (x > static_cast<double>(sieve.limit())) {
    throw DomainError(std::string(who) + ": sieve too small (limit " + std::to_string(sieve.limit()) +
                      ", x = " + std::to_string(x) + ")");
  }
}

// Count of primes <= x^{1/n}, with the jump convention applied when the root
// is an exact prime. Zero once the root drops below 2.
struct RootCount {
  std::uint64_t count = 0;
  bool half = false;  // subtract 1/2
};

RootCount pi_of_root(double x, unsigned n, const PrimeSieve& sieve, JumpConvention c) {
  const std::uint64_t r = integer_root(x, n);
  if (r < 2) return {};
  RootCount out{sieve.count_up_to(r), false};
  if (c == JumpConvention::Midpoint && is_integer(x) && ipow(r, n) == static_cast<long double>(x) &&
      sieve.is_prime(r)) {
    out.half = true;
  }
  return out;
}

double as_double(const RootCount& rc) { return static_cast<double>(rc.count) - (rc.half ? 0.5 : 0.0); }

Rational as_rational(const RootCount& rc) {
  return rc.half ? Rational(2 * static_cast<std::int64_t>(rc.count) - 1, 2)
                 : Rational(static_cast<std::int64_t>(rc.count));
}

// Pi(x^{1/n}) = sum_m pi(x^{1/(nm)}) / m, with exactness judged on x itself.
double big_pi_of_root(double x, unsigned n, const PrimeSieve& sieve, JumpConvention c) {
  double sum = 0.0;
  for (unsigned m = 1;; ++m) {
    const RootCount rc = pi_of_root(x, n * m, sieve, c);
    if (rc.count == 0) break;
    sum += as_double(rc) / m;
  }
  return sum;
}

Rational big_pi_of_root_exact(double x, unsigned n, const PrimeSieve& sieve, JumpConvention c) {
  Rational sum(0);
  for (unsigned m = 1;; ++m) {
    const RootCount rc = pi_of_root(x, n * m, sieve, c);
    if (rc.count == 0) break;
    sum += as_rational(rc) / Rational(m);
  }
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------

PrimeSieve::PrimeSieve(std::size_t limit, std::size_t budget_bits) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve: limit must be >= 2");
  if (limit > budget_bits) {
    throw CapacityError("sieve: limit " + std::to_string(limit) + " exceeds memory budget of " +
                        std::to_string(budget_bits) + " bits");
  }
  const std::size_t words = limit / 64 + 1;
  bits_.assign(words, ~std::uint64_t{0});
  const std::size_t used = limit % 64 + 1;
  if (used < 64) bits_.back() &= (std::uint64_t{1} << used) - 1;
  bits_[0] &= ~std::uint64_t{3};
  for (std::size_t p = 2; p * p <= limit; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t m = p * p; m <= limit; m += p) bits_[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
  }
  prefix_.resize(words + 1);
  prefix_[0] = 0;
  for (std::size_t i = 0; i < words; ++i) {
    prefix_[i + 1] = prefix_[i] + static_cast<std::uint32_t>(std::popcount(bits_[i]));
  }
}

std::size_t PrimeSieve::count_up_to(std::size_t n) const {
  if (n > limit_) throw DomainError("sieve: count beyond limit " + std::to_string(limit_));
  const std::size_t word = n >> 6;
  const unsigned bit = n & 63;
  const std::uint64_t mask = bit == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bit + 1)) - 1);
  return prefix_[word] + static_cast<std::size_t>(std::popcount(bits_[word] & mask));
}

std::vector<std::size_t> PrimeSieve::primes() const {
  std::vector<std::size_t> out;
  out.reserve(prefix_.back());
  for (std::size_t n = 2; n <= limit_; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: n must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<int> mobius_table(std::size_t limit) {
  std::vector<int> mu(limit + 1, 0);
  if (limit == 0) return mu;
  mu[1] = 1;
  std::vector<std::size_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::size_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t p : primes) {
      if (i * p > limit) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::uint64_t integer_root(double x, unsigned n) {
  if (n == 0) throw DomainError("integer_root: n must be >= 1");
  if (!(x >= 1.0)) return 0;
  auto r = static_cast<std::uint64_t>(std::floor(std::pow(x, 1.0 / n)));
  const auto lx = static_cast<long double>(x);
  while (ipow(r + 1, n) <= lx) ++r;
  while (r > 0 && ipow(r, n) > lx) --r;
  return r;
}

bool prime_power(double x, const PrimeSieve& sieve, std::uint64_t* p, unsigned* k) {
  if (!(x >= 2.0) || !is_integer(x)) return false;
  require_covered(x, sieve, "prime_power");
  for (unsigned n = 1;; ++n) {
    const std::uint64_t r = integer_root(x, n);
    if (r < 2) return false;
    if (ipow(r, n) == static_cast<long double>(x) && sieve.is_prime(r)) {
      if (p) *p = r;
      if (k) *k = n;
      return true;
    }
  }
}

double prime_pi(double x, const PrimeSieve& sieve, JumpConvention c) {
  if (!(x >= 0.0)) throw DomainError("prime_pi: x must be >= 0");
  require_covered(x, sieve, "prime_pi");
  return as_double(pi_of_root(x, 1, sieve, c));
}

double big_pi(double x, const PrimeSieve& sieve, JumpConvention c) {
  if (!(x >= 0.0)) throw DomainError("big_pi: x must be >= 0");
  require_covered(x, sieve, "big_pi");
  return big_pi_of_root(x, 1, sieve, c);
}

Rational big_pi_exact(std::uint64_t x, const PrimeSieve& sieve, JumpConvention c) {
  const auto xd = static_cast<double>(x);
  require_covered(xd, sieve, "big_pi_exact");
  return big_pi_of_root_exact(xd, 1, sieve, c);
}

double mobius_invert_pi(double x, const PrimeSieve& sieve, JumpConvention c) {
  if (!(x >= 0.0)) throw DomainError("mobius_invert_pi: x must be >= 0");
  require_covered(x, sieve, "mobius_invert_pi");
  double sum = 0.0;
  for (unsigned n = 1; integer_root(x, n) >= 2; ++n) {
    const int mu = mobius(n);
    if (mu != 0) sum += mu * big_pi_of_root(x, n, sieve, c) / n;
  }
  return sum;
}

Rational mobius_invert_pi_exact(std::uint64_t x, const PrimeSieve& sieve, JumpConvention c) {
  const auto xd = static_cast<double>(x);
  require_covered(xd, sieve, "mobius_invert_pi_exact");
  Rational sum(0);
  for (unsigned n = 1; integer_root(xd, n) >= 2; ++n) {
    const int mu = mobius(n);
    if (mu != 0) sum += Rational(mu, n) * big_pi_of_root_exact(xd, n, sieve, c);
  }
  return sum;
}

double chebyshev_psi(double x, const PrimeSieve& sieve, JumpConvention c) {
  if (!(x >= 0.0)) throw DomainError("chebyshev_psi: x must be >= 0");
  require_covered(x, sieve, "chebyshev_psi");
  if (x < 2.0) return 0.0;
  const auto top = static_cast<std::size_t>(std::floor(x));
  const auto lx = static_cast<long double>(x);
  double sum = 0.0;
  for (std::size_t p = top; p >= 2; --p) {
    if (!sieve.is_prime(p)) continue;
    const double lp = std::log(static_cast<double>(p));
    long double power = static_cast<long double>(p);
    while (power <= lx) {
      sum += (c == JumpConvention::Midpoint && power == lx) ? 0.5 * lp : lp;
      power *= static_cast<long double>(p);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------

GoldenCheck golden_formula_check(Complex s, const PrimeSieve& sieve, double x_max) {
  if (!(s.real() > 1.0)) throw DomainError("golden_formula_check: requires Re s > 1");
  if (!(x_max >= 2.0)) throw DomainError("golden_formula_check: x_max must be >= 2");
  require_covered(x_max, sieve, "golden_formula_check");

  const auto top = static_cast<std::size_t>(std::floor(x_max));
  const auto lx = static_cast<long double>(x_max);
  // Jumps of 1/n at p^n; each contributes (1/n) int_{p^n}^inf x^{-s-1} dx = p^{-ns}/(n s).
  Complex sum = 0.0;
  for (std::size_t p = top; p >= 2; --p) {
    if (!sieve.is_prime(p)) continue;
    const double lp = std::log(static_cast<double>(p));
    long double power = static_cast<long double>(p);
    for (unsigned n = 1; power <= lx; ++n, power *= static_cast<long double>(p)) {
      sum += std::exp(-static_cast<double>(n) * lp * s) / static_cast<double>(n);
    }
  }
  const Complex rhs = sum / s;
  const Complex lhs = std::log(zeta(s)) / s;

  const double sigma = s.real();
  GoldenCheck out;
  out.residual = std::abs(lhs - rhs);
  out.tail_bound = std::pow(static_cast<double>(top), 1.0 - sigma) / ((sigma - 1.0) * std::abs(s));
  return out;
}

AppendixCheck appendix_pi_integral_check(double s, const PrimeSieve& sieve, double x_max) {
  if (!(s > 1.0)) throw DomainError("appendix_pi_integral_check: requires s > 1");
  if (!(x_max >= 2.0)) throw DomainError("appendix_pi_integral_check: x_max must be >= 2");
  require_covered(x_max, sieve, "appendix_pi_integral_check");

  // Antiderivative of 1/(x (x^s - 1)).
  auto g = [s](double x) { return std::log1p(-std::pow(x, -s)) / s; };

  const auto top = static_cast<std::size_t>(std::floor(x_max));
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p <= top; ++p) {
    if (sieve.is_prime(p)) ps.push_back(p);
  }
  // pi(x) = k on [p_k, p_{k+1}); summed from the far end where pieces are smallest.
  double pieces = 0.0;
  for (std::size_t k = ps.size(); k >= 1; --k) {
    const double a = static_cast<double>(ps[k - 1]);
    const double b = (k < ps.size()) ? static_cast<double>(ps[k]) : x_max;
    pieces += static_cast<double>(k) * (g(b) - g(a));
  }

  AppendixCheck out;
  out.tail_estimate = -static_cast<double>(ps.size()) * g(x_max) + exp_integral_e1((s - 1.0) * std::log(x_max)) / s;
  const double lhs = std::log(zeta(Complex(s, 0.0)).real()) / s;
  out.residual = std::abs(lhs - (pieces + out.tail_estimate));
  return out;
}

}  // namespace riemann
