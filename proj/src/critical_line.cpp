#include "riemann/critical_line.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "riemann/errors.hpp"

namespace riemann {
namespace {

using constants::pi;

const double kLogPi = std::log(pi);

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Apply fn(i) for i in [0, n) across contiguous chunks; results land by index
// so the output is independent of scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  workers = resolve_workers(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    tasks.push_back(std::async(std::launch::async, [begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }));
  }
  for (auto& t : tasks) t.get();
}

ZeroOrdinate bisect(double a, double b, double za, const ScanOptions& opts) {
  int sa = sign_of(za);
  while (0.5 * (b - a) > opts.tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const int sm = sign_of(z_function(m, opts.eval));
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return {0, 0.5 * (a + b), 0.5 * (b - a)};
}

}  // namespace

// ---------------------------------------------------------------------------

ZeroTable ZeroTable::first(std::size_t n) const {
  ZeroTable out;
  const std::size_t k = std::min(n, zeros.size());
  out.zeros.assign(zeros.begin(), zeros.begin() + static_cast<std::ptrdiff_t>(k));
  out.t_max_scanned = (k < zeros.size()) ? zeros[k].t - zeros[k].err : t_max_scanned;
  return out;
}

std::size_t ZeroTable::count_up_to(double T) const {
  return static_cast<std::size_t>(
      std::upper_bound(zeros.begin(), zeros.end(), T, [](double v, const ZeroOrdinate& z) { return v < z.t; }) -
      zeros.begin());
}

void ZeroTable::validate() const {
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const auto& z = zeros[i];
    if (z.index != i + 1) throw CorruptionError("zero table: indices not contiguous at row " + std::to_string(i + 1));
    if (!(z.t > 0.0) || !std::isfinite(z.t)) throw CorruptionError("zero table: non-positive ordinate");
    if (!(z.err >= 0.0)) throw CorruptionError("zero table: negative error");
    if (i > 0 && !(z.t > zeros[i - 1].t)) throw CorruptionError("zero table: ordinates not increasing");
  }
  if (!zeros.empty() && zeros.back().t > t_max_scanned) {
    throw CorruptionError("zero table: zero beyond t_max_scanned");
  }
}

// ---------------------------------------------------------------------------

double theta_rs(double t) {
  if (!(t > 0.0)) throw DomainError("theta_rs: t must be positive");
  return 0.5 * t * std::log(t / (2.0 * pi)) - 0.5 * t - pi / 8.0 + 1.0 / (48.0 * t);
}

double theta_rs_error(double t) {
  if (!(t > 0.0)) throw DomainError("theta_rs_error: t must be positive");
  // Twice the first omitted Stirling term; below t = 5 the series is no guide.
  if (t < 5.0) return std::numeric_limits<double>::infinity();
  return 2.0 * 7.0 / (5760.0 * t * t * t);
}

double theta_exact(double t) {
  if (!std::isfinite(t)) throw DomainError("theta_exact: t must be finite");
  if (t == 0.0) return 0.0;
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * kLogPi;
}

double z_function(double t, const EvalOptions& opts) {
  const Complex rotated = std::polar(1.0, theta_exact(t)) * zeta(Complex(0.5, t), opts);
  if (std::abs(rotated.imag()) > 1e-8 * (1.0 + std::abs(rotated.real()))) {
    throw ConsistencyError("z_function: imaginary residual " + std::to_string(rotated.imag()) +
                           " at t=" + std::to_string(t));
  }
  return rotated.real();
}

// ---------------------------------------------------------------------------

double count_zeros_formula(double T) {
  if (!(T >= 3.0)) throw DomainError("count_zeros_formula: T must be >= 3");
  const double u = T / (2.0 * pi);
  return u * std::log(u) - u + 7.0 / 8.0;
}

double count_zeros_main(double T) {
  if (!(T >= 3.0)) throw DomainError("count_zeros_main: T must be >= 3");
  const double u = T / (2.0 * pi);
  return u * (std::log(u) - 1.0);
}

double argument_term(double T, const EvalOptions& opts) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("argument_term: T must be positive");
  constexpr double sigma_start = 3.0;  // Re zeta > 0 for sigma >= 2
  constexpr double sigma_end = 0.5;
  double sigma = sigma_start;
  Complex prev = zeta(Complex(sigma, T), opts);
  double phase = std::arg(prev);
  double h = 0.05;
  while (sigma > sigma_end) {
    const double next_sigma = std::max(sigma_end, sigma - h);
    const Complex next = zeta(Complex(next_sigma, T), opts);
    const double delta = std::arg(next / prev);
    if (std::abs(delta) > pi / 8.0) {
      h *= 0.5;
      if (h < 1e-9) throw ConvergenceError("argument_term: phase tracking step underflow");
      continue;
    }
    phase += delta;
    prev = next;
    sigma = next_sigma;
    if (std::abs(delta) < pi / 64.0) h = std::min(0.2, 2.0 * h);
  }
  return phase / pi;
}

double zero_count_from_argument(double T, const EvalOptions& opts) {
  return theta_exact(T) / pi + 1.0 + argument_term(T, opts);
}

CountReport verify_count(const ZeroTable& zeros, double T, const EvalOptions& opts) {
  if (!(T > 0.0) || T > zeros.t_max_scanned * (1.0 + 1e-12)) {
    throw DomainError("verify_count: T=" + std::to_string(T) + " beyond scanned range " +
                      std::to_string(zeros.t_max_scanned));
  }
  CountReport r;
  r.T = T;
  r.table_count = zeros.count_up_to(T);
  r.theta_term = theta_exact(T) / pi + 1.0;
  r.argument_term = argument_term(T, opts);
  const double total = r.theta_term + r.argument_term;
  r.expected = std::lround(total);
  r.pass = std::abs(total - static_cast<double>(r.expected)) < 0.25 &&
           r.expected == static_cast<long>(r.table_count);
  return r;
}

// ---------------------------------------------------------------------------

ZeroTable find_zeros(double t_min, double t_max, const ScanOptions& opts) {
  if (!(opts.step > 0.0)) throw DomainError("find_zeros: step must be positive");
  if (!(opts.tol > 0.0)) throw DomainError("find_zeros: tol must be positive");
  ZeroTable table;
  table.t_max_scanned = t_max;
  if (t_min == t_max) return table;
  if (!(t_min > 0.0) || !(t_min < t_max)) throw DomainError("find_zeros: need 0 < t_min < t_max");

  const auto steps = static_cast<std::size_t>(std::floor((t_max - t_min) / opts.step));
  std::vector<double> grid;
  grid.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) grid.push_back(t_min + static_cast<double>(k) * opts.step);
  if (grid.back() < t_max) grid.push_back(t_max);

  std::vector<double> values(grid.size());
  parallel_for(grid.size(), opts.workers, [&](std::size_t i) { values[i] = z_function(grid[i], opts.eval); });

  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (sign_of(values[i]) != sign_of(values[i + 1])) brackets.push_back(i);
  }
  table.zeros.resize(brackets.size());
  parallel_for(brackets.size(), opts.workers, [&](std::size_t j) {
    const std::size_t i = brackets[j];
    table.zeros[j] = bisect(grid[i], grid[i + 1], values[i], opts);
  });
  for (std::size_t j = 0; j < table.zeros.size(); ++j) table.zeros[j].index = j + 1;

  if (opts.verify) {
    const double upper = zero_count_from_argument(t_max, opts.eval);
    const double lower = t_min < 10.0 ? 0.0 : zero_count_from_argument(t_min, opts.eval);
    const long expected = std::lround(upper) - std::lround(lower);
    if (expected != static_cast<long>(table.zeros.size())) {
      throw MissedZerosError("find_zeros: found " + std::to_string(table.zeros.size()) + " zeros in [" +
                             std::to_string(t_min) + ", " + std::to_string(t_max) + "], N(T) predicts " +
                             std::to_string(expected) + "; reduce the step");
    }
  }
  return table;
}

void extend_zeros(ZeroTable& table, double t_max, const ScanOptions& opts) {
  if (t_max <= table.t_max_scanned) return;
  const double start = table.t_max_scanned > 0.0 ? table.t_max_scanned : std::min(1.0, t_max);
  if (start < t_max) {
    const ZeroTable fresh = find_zeros(start, t_max, opts);
    for (ZeroOrdinate z : fresh.zeros) {
      if (!table.zeros.empty() && z.t <= table.zeros.back().t + table.zeros.back().err + z.err) continue;
      z.index = table.zeros.size() + 1;
      table.zeros.push_back(z);
    }
  }
  table.t_max_scanned = t_max;
}

}  // namespace riemann
