#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "riemann/rational.hpp"
#include "riemann/special_fn.hpp"

namespace riemann {

/// Value of a staircase function exactly at one of its jumps.
enum class JumpConvention {
  Midpoint,         // halfway up the jump, where explicit formulas converge
  RightContinuous,  // the usual "count of p <= x"
};

/// Eratosthenes bitmap over [0, limit] with per-word prefix counts, so
/// pi(x) is O(1) after construction.
class PrimeSieve {
 public:
  static constexpr std::size_t kDefaultBudgetBits = 100'000'000;

  /// Throws CapacityError if limit exceeds budget_bits; callers that really
  /// want more pass a larger budget explicitly.
  explicit PrimeSieve(std::size_t limit, std::size_t budget_bits = kDefaultBudgetBits);

  std::size_t limit() const { return limit_; }
  bool is_prime(std::size_t n) const {
    return n <= limit_ && ((bits_[n >> 6] >> (n & 63)) & 1u) != 0;
  }

  /// Number of primes <= n (n <= limit).
  std::size_t count_up_to(std::size_t n) const;

  std::vector<std::size_t> primes() const;

 private:
  std::size_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> prefix_;  // primes strictly below word i
};

/// mu(n) by trial division.
int mobius(std::uint64_t n);

/// mu(0..limit) by a linear sieve; entry 0 is 0.
std::vector<int> mobius_table(std::size_t limit);

/// floor(x^{1/n}) with an integer correction, so exact powers are detected.
std::uint64_t integer_root(double x, unsigned n);

/// True iff x is an integer equal to p^k for a prime p; reports p and k.
bool prime_power(double x, const PrimeSieve& sieve, std::uint64_t* p = nullptr, unsigned* k = nullptr);

/// pi(x) with the chosen jump convention.
double prime_pi(double x, const PrimeSieve& sieve, JumpConvention c = JumpConvention::Midpoint);

/// Pi(x) = sum_n pi(x^{1/n}) / n.
double big_pi(double x, const PrimeSieve& sieve, JumpConvention c = JumpConvention::Midpoint);

/// Pi(x) as an exact rational, for integer x.
Rational big_pi_exact(std::uint64_t x, const PrimeSieve& sieve, JumpConvention c = JumpConvention::Midpoint);

/// pi(x) = sum_n mu(n)/n Pi(x^{1/n}), terminating when x^{1/n} < 2.
double mobius_invert_pi(double x, const PrimeSieve& sieve, JumpConvention c = JumpConvention::Midpoint);
Rational mobius_invert_pi_exact(std::uint64_t x, const PrimeSieve& sieve,
                                JumpConvention c = JumpConvention::Midpoint);

/// psi(x) = sum_{p^k <= x} log p.
double chebyshev_psi(double x, const PrimeSieve& sieve, JumpConvention c = JumpConvention::Midpoint);

struct GoldenCheck {
  double residual = 0.0;    // |log zeta(s)/s - (1/s) sum_{p^n <= x_max} p^{-ns}/n|
  double tail_bound = 0.0;  // analytic bound on the omitted prime powers
};

/// log zeta(s) / s against the Mellin transform of Pi, which telescopes to
/// (1/s) sum_{p^n} p^{-ns}/n. Re s > 1.
GoldenCheck golden_formula_check(Complex s, const PrimeSieve& sieve, double x_max);

struct AppendixCheck {
  double residual = 0.0;       // |ln zeta(s)/s - (pieces + tail_estimate)|
  // Integral beyond x_max: the exact boundary term -pi(x_max) g(x_max) plus
  // (1/s) E1((s-1) ln x_max) from the prime density 1/ln x.
  double tail_estimate = 0.0;
};

/// ln zeta(s)/s against int_2^inf pi(x) / (x (x^s - 1)) dx, integrated
/// exactly piece by piece between primes up to x_max. s > 1.
AppendixCheck appendix_pi_integral_check(double s, const PrimeSieve& sieve, double x_max);

}  // namespace riemann
