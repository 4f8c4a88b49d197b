#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "riemann/critical_line.hpp"
#include "riemann/errors.hpp"

using namespace riemann;

namespace {

const ZeroTable& zeros_to_200() {
  static const ZeroTable table = find_zeros(1.0, 200.0);
  return table;
}

}  // namespace

TEST_CASE("theta_rs against theta_exact") {
  CHECK(std::abs(theta_rs(14.134725) - theta_exact(14.134725)) < 1e-4);
  CHECK(std::abs(theta_rs(100.0) - theta_exact(100.0)) < 1e-6);
  for (double t = 20.0; t <= 1000.0; t += 7.3) CHECK(std::abs(theta_rs(t) - theta_exact(t)) < 1e-5);
  CHECK_THROWS_AS(theta_rs(0.0), DomainError);
  CHECK_THROWS_AS(theta_rs(-2.0), DomainError);
}

TEST_CASE("theta_rs error bound") {
  for (double t : {5.0, 7.5, 10.0, 14.134725, 20.0, 60.0, 100.0, 500.0}) {
    CHECK(std::abs(theta_rs(t) - static_cast<double>(oracle::theta(t))) <= theta_rs_error(t));
  }
  // Small t: the asymptotic form is off by ~2e-2 and the bound says so.
  CHECK(std::abs(theta_rs(1.0) - theta_exact(1.0)) > 1e-2);
  CHECK(std::isinf(theta_rs_error(1.0)));
}

TEST_CASE("theta_exact") {
  CHECK(theta_exact(0.0) == 0.0);
  CHECK(theta_exact(-7.0) == -theta_exact(7.0));
  // Stirling-series oracle: -1.728670...
  const double ref = static_cast<double>(oracle::theta(14.134725L));
  CHECK(std::abs(theta_exact(14.134725) - ref) < 2e-3);
  CHECK(std::abs(theta_exact(14.134725) + 1.72867) < 1e-5);
  for (double t : {0.5, 3.0, 17.0, 99.5, 543.2, 1419.0}) {
    CHECK(std::abs(theta_exact(t) - static_cast<double>(oracle::theta(t))) < 1e-11 * (1.0 + std::abs(t)));
  }
}

TEST_CASE("Z function") {
  CHECK(std::abs(z_function(0.0) + 1.4603545088) < 1e-9);
  CHECK(std::abs(z_function(14.134725)) < 1e-6);
  CHECK(z_function(10.0) < 0.0);
  CHECK(z_function(18.0) > 0.0);
  for (double t : {3.3, 12.0, 22.7, 48.0, 100.1, 250.5}) {
    const double z = z_function(t);
    CHECK(std::abs(z - static_cast<double>(oracle::z_function(t))) < 1e-11);
    CHECK(std::abs(std::abs(z) - std::abs(zeta(Complex(0.5, t)))) < 1e-12);
  }
}

TEST_CASE("Z is real to 1e-8 along the line") {
  for (double t = 0.0; t < 300.0; t += 0.37) CHECK_NOTHROW(z_function(t));
}

TEST_CASE("find_zeros on [10, 30]") {
  ScanOptions opts;
  opts.tol = 1e-6;
  const ZeroTable table = find_zeros(10.0, 30.0, opts);
  REQUIRE(table.size() == 3);
  const double refs[3] = {oracle::zero_in(14.0, 14.3), oracle::zero_in(20.9, 21.1), oracle::zero_in(24.9, 25.1)};
  for (int i = 0; i < 3; ++i) {
    CHECK(table.zeros[i].index == static_cast<std::size_t>(i + 1));
    CHECK(std::abs(table.zeros[i].t - refs[i]) < 1e-5);
    CHECK(table.zeros[i].err <= 1e-6);
  }
  CHECK(std::abs(table.zeros[0].t - 14.134725) < 1e-5);
  CHECK(std::abs(table.zeros[1].t - 21.022040) < 1e-5);
  CHECK(std::abs(table.zeros[2].t - 25.010858) < 1e-5);
  CHECK(std::floor(table.zeros[0].t * 1000) / 1000 == doctest::Approx(14.134));
  CHECK(std::floor(table.zeros[1].t * 1000) / 1000 == doctest::Approx(21.022));
}

TEST_CASE("find_zeros edge cases") {
  CHECK(find_zeros(1.0, 10.0).empty());
  CHECK(find_zeros(20.0, 20.0).empty());
  CHECK_THROWS_AS(find_zeros(0.0, 10.0), DomainError);
  CHECK_THROWS_AS(find_zeros(30.0, 10.0), DomainError);
  ScanOptions bad;
  bad.step = 0.0;
  CHECK_THROWS_AS(find_zeros(10.0, 30.0, bad), DomainError);
  bad = {};
  bad.tol = -1.0;
  CHECK_THROWS_AS(find_zeros(10.0, 30.0, bad), DomainError);
}

TEST_CASE("coarse scans are caught by the count check") {
  ScanOptions coarse;
  coarse.step = 2.5;
  CHECK_THROWS_AS(find_zeros(10.0, 100.0, coarse), MissedZerosError);
  coarse.verify = false;
  CHECK(find_zeros(10.0, 100.0, coarse).size() < 29);
}

TEST_CASE("every zero brackets a sign change and is a zero of Xi") {
  for (const auto& z : zeros_to_200().zeros) {
    CHECK(z_function(z.t - z.err) * z_function(z.t + z.err) < 0.0);
    CHECK(std::abs(xi_big(z.t)) < 1e-5);
  }
}

TEST_CASE("step halving leaves the table unchanged") {
  ScanOptions a;
  ScanOptions b;
  b.step = a.step / 2.0;
  const ZeroTable ta = find_zeros(10.0, 100.0, a);
  const ZeroTable tb = find_zeros(10.0, 100.0, b);
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) CHECK(std::abs(ta.zeros[i].t - tb.zeros[i].t) <= 2.0 * a.tol);
}

TEST_CASE("scan is independent of worker count") {
  ScanOptions one;
  one.workers = 1;
  ScanOptions four;
  four.workers = 4;
  CHECK(find_zeros(10.0, 120.0, one) == find_zeros(10.0, 120.0, four));
}

TEST_CASE("extend_zeros matches a single scan") {
  ZeroTable table = find_zeros(1.0, 30.0);
  extend_zeros(table, 60.0);
  const ZeroTable whole = find_zeros(1.0, 60.0);
  REQUIRE(table.size() == whole.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table.zeros[i].index == i + 1);
    CHECK(std::abs(table.zeros[i].t - whole.zeros[i].t) < 1e-9);
  }
  CHECK(table.t_max_scanned == 60.0);
  extend_zeros(table, 50.0);
  CHECK(table.t_max_scanned == 60.0);
}

TEST_CASE("ZeroTable helpers") {
  const ZeroTable& table = zeros_to_200();
  CHECK(table.count_up_to(14.0) == 0);
  CHECK(table.count_up_to(30.0) == 3);
  CHECK(table.count_up_to(100.0) == 29);
  const ZeroTable three = table.first(3);
  CHECK(three.size() == 3);
  CHECK(three.zeros.back() == table.zeros[2]);
  CHECK(three.t_max_scanned < table.zeros[3].t);
  CHECK(three.t_max_scanned >= table.zeros[2].t);

  ZeroTable broken = three;
  broken.zeros[1].t = broken.zeros[0].t;
  CHECK_THROWS_AS(broken.validate(), CorruptionError);
  broken = three;
  broken.zeros[2].index = 7;
  CHECK_THROWS_AS(broken.validate(), CorruptionError);
  broken = three;
  broken.zeros[0].err = -1.0;
  CHECK_THROWS_AS(broken.validate(), CorruptionError);
}

TEST_CASE("zero counting formula") {
  CHECK(std::abs(count_zeros_formula(100.0) - 29.0) < 0.05);
  CHECK(std::abs(count_zeros_main(100.0) - 28.13) < 0.01);
  CHECK(count_zeros_formula(14.0) < 1.0);
  CHECK(count_zeros_formula(123.0) == doctest::Approx(count_zeros_main(123.0) + 0.875));
  CHECK_THROWS_AS(count_zeros_formula(2.0), DomainError);
}

TEST_CASE("the log T form of the count approaches 1 slowly") {
  auto ratio = [](double T) { return count_zeros_formula(T) / (T / (2.0 * constants::pi) * std::log(T)); };
  double previous = 0.0;
  for (double T : {1e3, 1e4, 1e6, 1e9, 1e15}) {
    const double r = ratio(T);
    CHECK(r > previous);
    CHECK(r < 1.0);
    previous = r;
  }
  // The ratio is 1 - log(2 pi e)/log T + O(1/T).
  CHECK(std::abs(ratio(1e3) - (1.0 - std::log(2.0 * constants::pi * std::exp(1.0)) / std::log(1e3))) < 1e-2);
}

TEST_CASE("table count tracks the formula") {
  const ZeroTable& table = zeros_to_200();
  std::size_t previous = 0;
  for (double T = 20.0; T <= 200.0; T += 2.5) {
    const std::size_t n = table.count_up_to(T);
    CHECK(n >= previous);
    CHECK(std::abs(static_cast<double>(n) - count_zeros_formula(T)) <= 1.0);
    CHECK(std::abs(static_cast<double>(n) - (theta_exact(T) / constants::pi + 1.0)) <= 1.0);
    previous = n;
  }
}

TEST_CASE("verify_count") {
  const ZeroTable& table = zeros_to_200();
  for (auto [T, expected] : {std::pair{100.0, 29}, {30.0, 3}, {13.0, 0}, {50.0, 10}}) {
    const CountReport r = verify_count(table, T);
    CHECK(r.table_count == static_cast<std::size_t>(expected));
    CHECK(r.expected == expected);
    CHECK(r.pass);
  }
  ZeroTable missing = table;
  missing.zeros.erase(missing.zeros.begin() + 5);
  for (std::size_t i = 0; i < missing.zeros.size(); ++i) missing.zeros[i].index = i + 1;
  CHECK_FALSE(verify_count(missing, 100.0).pass);
  CHECK_THROWS_AS(verify_count(table, 250.0), DomainError);
}

TEST_CASE("argument count is an integer away from zeros") {
  for (double T : {13.0, 30.0, 77.7, 150.0}) {
    const double n = zero_count_from_argument(T);
    CHECK(std::abs(n - std::round(n)) < 1e-6);
    CHECK(static_cast<std::size_t>(std::lround(n)) == zeros_to_200().count_up_to(T));
  }
}
