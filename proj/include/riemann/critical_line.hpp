#pragma once

#include <cstddef>
#include <vector>

#include "riemann/zeta.hpp"

namespace riemann {

/// One nontrivial zero rho = 1/2 + i t, bracketed by [t - err, t + err].
struct ZeroOrdinate {
  std::size_t index = 0;  // 1-based
  double t = 0.0;
  double err = 0.0;

  friend bool operator==(const ZeroOrdinate&, const ZeroOrdinate&) = default;
};

struct ZeroTable {
  std::vector<ZeroOrdinate> zeros;
  double t_max_scanned = 0.0;

  std::size_t size() const { return zeros.size(); }
  bool empty() const { return zeros.empty(); }

  /// Table restricted to its first n zeros (t_max_scanned shrinks to match).
  ZeroTable first(std::size_t n) const;

  /// Number of zeros with t <= T.
  std::size_t count_up_to(double T) const;

  /// Throws CorruptionError unless t is strictly increasing, indices run
  /// 1..n and every err is non-negative.
  void validate() const;

  friend bool operator==(const ZeroTable&, const ZeroTable&) = default;
};

/// theta(t) ~ (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t); error O(t^-3).
double theta_rs(double t);

/// Bound on |theta_rs(t) - theta(t)|: 7/(2880 t^3) for t >= 5, infinite below,
/// where the asymptotic series stops being informative.
double theta_rs_error(double t);

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi. Odd in t.
double theta_exact(double t);

/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real; throws ConsistencyError if
/// |Im| exceeds 1e-8 (1 + |Z|).
double z_function(double t, const EvalOptions& opts = {});

struct ScanOptions {
  double step = 0.05;
  double tol = 1e-9;
  unsigned workers = 0;  // 0: hardware concurrency
  bool verify = true;    // throw MissedZerosError when the count check fails
  EvalOptions eval{};
};

/// Sign-change scan of Z on the grid t_min + k*step, bisection to half-width
/// <= tol. Deterministic for fixed inputs regardless of worker count.
ZeroTable find_zeros(double t_min, double t_max, const ScanOptions& opts = {});

/// Scan (t_min, t_max] and append the zeros found to an existing table.
void extend_zeros(ZeroTable& table, double t_max, const ScanOptions& opts = {});

/// (T/2pi) log(T/2pi) - T/2pi + 7/8, T >= 3.
double count_zeros_formula(double T);

/// (T/2pi)(log(T/2pi) - 1), the leading term without the 7/8.
double count_zeros_main(double T);

/// arg zeta(1/2 + iT) / pi, continued from sigma = 3 along Im s = T.
double argument_term(double T, const EvalOptions& opts = {});

/// theta(T)/pi + 1 + argument_term(T); an integer up to rounding whenever
/// T is not a zero ordinate.
double zero_count_from_argument(double T, const EvalOptions& opts = {});

struct CountReport {
  double T = 0.0;
  std::size_t table_count = 0;
  double theta_term = 0.0;     // theta(T)/pi + 1
  double argument_term = 0.0;  // S(T)
  long expected = 0;           // round(theta_term + argument_term)
  bool pass = false;
};

/// Compare the table count at T against N(T). Requires T <= t_max_scanned.
CountReport verify_count(const ZeroTable& zeros, double T, const EvalOptions& opts = {});

}  // namespace riemann
