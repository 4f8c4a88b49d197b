#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "riemann/critical_line.hpp"
#include "riemann/errors.hpp"
#include "riemann/explicit_formula.hpp"
#include "riemann/io.hpp"
#include "riemann/primes.hpp"
#include "riemann/regularization.hpp"
#include "riemann/zeta.hpp"

namespace riemann::cli {
namespace {

using nlohmann::json;

enum class Format { Plain, Csv, Json };

std::string plain10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string complex_plain(Complex z) {
  const double im = z.imag();
  return plain10(z.real()) + (im < 0.0 ? " - " : " + ") + plain10(std::abs(im)) + "i";
}

std::filesystem::path cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') return env;
  return kDefaultCache;
}

// Smallest round height whose N(T) estimate covers n zeros, with margin.
double height_for(std::size_t n) {
  double T = 20.0;
  while (count_zeros_formula(T) < static_cast<double>(n) + 2.0) T *= 1.05;
  return std::ceil(T / 10.0) * 10.0;
}

struct Settings {
  Format format = Format::Plain;

  struct {
    double re = 0.0, im = 0.0, tol = 1e-10;
  } zeta;

  struct {
    double t_max = 0.0, step = 0.05, tol = 1e-9;
    std::string cache;
  } scan;

  struct {
    std::string kind;
    double x = 0.0;
  } primes;

  struct {
    std::string kind;
    double x = 0.0;
    std::size_t pairs = 100;
    std::string cache;
  } expl;

  struct {
    double a = 1.0, area = 1.0;
  } casimir;
};

int cmd_zeta_eval(const Settings& cfg, std::ostream& out, std::ostream& err) {
  const Complex s(cfg.zeta.re, cfg.zeta.im);
  if (s == Complex(1.0, 0.0)) {
    err << "error: pole at s=1\n";
    return kUsage;
  }
  EvalOptions opts;
  opts.tol = cfg.zeta.tol;
  const ZetaValue z = zeta_with_error(s, opts);
  switch (cfg.format) {
    case Format::Plain:
      out << "zeta(" << complex_plain(s) << ") = " << complex_plain(z.value) << "\n";
      out << "error <= " << plain10(z.error) << "\n";
      break;
    case Format::Csv:
      out << "s_re,s_im,re,im,error\n";
      out << io::format15(s.real()) << ',' << io::format15(s.imag()) << ',' << io::format15(z.value.real()) << ','
          << io::format15(z.value.imag()) << ',' << io::format15(z.error) << "\n";
      break;
    case Format::Json:
      out << json{{"s_re", io::round15(s.real())},
                  {"s_im", io::round15(s.imag())},
                  {"re", io::round15(z.value.real())},
                  {"im", io::round15(z.value.imag())},
                  {"error", io::round15(z.error)}}
                 .dump()
          << "\n";
      break;
  }
  return kOk;
}

int cmd_zeros_scan(const Settings& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.scan.t_max > 0.0)) throw DomainError("zeros scan: --t-max must be positive");
  const auto path = cache_path(cfg.scan.cache);
  ZeroTable table = io::load_zero_cache(path);
  const std::size_t before = table.size();

  ScanOptions opts;
  opts.step = cfg.scan.step;
  opts.tol = cfg.scan.tol;
  opts.verify = false;  // reported below instead
  if (cfg.scan.t_max > table.t_max_scanned) {
    extend_zeros(table, cfg.scan.t_max, opts);
    for (auto& z : table.zeros) {
      z.t = io::round15(z.t);
      z.err = io::round15(z.err);
    }
    table.t_max_scanned = io::round15(table.t_max_scanned);
    io::save_zero_cache(path, table);
  }

  const double T = std::min(cfg.scan.t_max, table.t_max_scanned);
  const CountReport report = verify_count(table, T);
  const std::span<const ZeroOrdinate> fresh(table.zeros.begin() + static_cast<std::ptrdiff_t>(before),
                                            table.zeros.end());

  switch (cfg.format) {
    case Format::Plain:
      for (const auto& z : fresh) out << z.index << ' ' << plain10(z.t) << ' ' << plain10(z.err) << "\n";
      out << "scanned to " << plain10(table.t_max_scanned) << ", " << fresh.size() << " new, " << table.size()
          << " total\n";
      out << "verify N(" << plain10(T) << ") = " << report.expected << ", table " << report.table_count << ": "
          << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
    case Format::Csv: {
      ZeroTable shown;
      shown.zeros.assign(fresh.begin(), fresh.end());
      io::write_zero_table(out, shown);
      err << "verify N(" << io::format15(T) << ") = " << report.expected << ", table " << report.table_count << ": "
          << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
    }
    case Format::Json: {
      json zeros = json::array();
      for (const auto& z : fresh) zeros.push_back({{"index", z.index}, {"t", z.t}, {"err", z.err}});
      out << json{{"new_zeros", zeros},
                  {"total", table.size()},
                  {"t_max_scanned", table.t_max_scanned},
                  {"verify",
                   {{"T", io::round15(T)},
                    {"expected", report.expected},
                    {"table_count", report.table_count},
                    {"pass", report.pass}}}}
                 .dump()
          << "\n";
      break;
    }
  }
  if (!report.pass) {
    err << "WARN: zero count mismatch at T=" << plain10(T) << " (table " << report.table_count << ", N(T) "
        << report.expected << "); try a smaller --step\n";
  }
  return kOk;
}

int cmd_primes(const Settings& cfg, std::ostream& out, std::ostream&) {
  const double x = cfg.primes.x;
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("primes: x must be a finite value >= 0");
  const PrimeSieve sieve(std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(x)) + 1));
  double value = 0.0;
  if (cfg.primes.kind == "pi") {
    value = prime_pi(x, sieve);
  } else if (cfg.primes.kind == "bigpi") {
    value = big_pi(x, sieve);
  } else {
    value = chebyshev_psi(x, sieve);
  }
  switch (cfg.format) {
    case Format::Plain:
      out << plain10(value) << "\n";
      break;
    case Format::Csv:
      out << "kind,x,value\n" << cfg.primes.kind << ',' << io::format15(x) << ',' << io::format15(value) << "\n";
      break;
    case Format::Json:
      out << json{{"kind", cfg.primes.kind}, {"x", io::round15(x)}, {"value", io::round15(value)}}.dump() << "\n";
      break;
  }
  return kOk;
}

int cmd_explicit(const Settings& cfg, std::ostream& out, std::ostream& err) {
  const double x = cfg.expl.x;
  const std::string& kind = cfg.expl.kind;
  if (!std::isfinite(x) || !(x > (kind == "psi" ? 1.0 : 2.0))) {
    throw DomainError("explicit: x must exceed " + std::string(kind == "psi" ? "1" : "2"));
  }
  if (cfg.expl.pairs == 0) throw DomainError("explicit: --pairs must be positive");
  const auto path = cache_path(cfg.expl.cache);
  const ZeroTable table = io::load_zero_cache(path);
  if (table.size() < cfg.expl.pairs) {
    err << "error: zero cache " << path.string() << " holds " << table.size() << " zeros, " << cfg.expl.pairs
        << " needed; run `riemann zeros scan --t-max " << plain10(height_for(cfg.expl.pairs)) << " --cache "
        << path.string() << "`\n";
    return kUsage;
  }

  const PrimeSieve sieve(std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(x)) + 1));
  ExplicitResult r;
  double exact = 0.0;
  if (kind == "psi") {
    r = von_mangoldt_psi_explicit(x, table, cfg.expl.pairs);
    exact = chebyshev_psi(x, sieve);
  } else if (kind == "bigpi") {
    r = riemann_big_pi_explicit(x, table, cfg.expl.pairs);
    exact = big_pi(x, sieve);
  } else {
    // pi has no single smooth/oscillatory split; only the total is reported.
    r.value = pi_explicit(x, table, cfg.expl.pairs);
    r.n_zero_pairs = cfg.expl.pairs;
    exact = prime_pi(x, sieve);
  }
  const double delta = r.value - exact;

  switch (cfg.format) {
    case Format::Plain:
      out << kind << "(" << plain10(x) << ") ~ " << plain10(r.value) << " using " << r.n_zero_pairs
          << " zero pairs\n";
      if (kind != "pi") {
        out << "  smooth      " << plain10(r.smooth_part) << "\n";
        out << "  oscillatory " << plain10(r.oscillatory_part) << "\n";
        out << "  tail        " << plain10(r.tail_part) << "\n";
      }
      out << "  exact       " << plain10(exact) << "\n";
      out << "  delta       " << plain10(delta) << "\n";
      break;
    case Format::Csv:
      out << "kind,x,value,smooth,oscillatory,tail,pairs,exact,delta\n";
      out << kind << ',' << io::format15(x) << ',' << io::format15(r.value) << ',' << io::format15(r.smooth_part)
          << ',' << io::format15(r.oscillatory_part) << ',' << io::format15(r.tail_part) << ',' << r.n_zero_pairs
          << ',' << io::format15(exact) << ',' << io::format15(delta) << "\n";
      break;
    case Format::Json:
      out << json{{"kind", kind},
                  {"x", io::round15(x)},
                  {"value", io::round15(r.value)},
                  {"smooth", io::round15(r.smooth_part)},
                  {"oscillatory", io::round15(r.oscillatory_part)},
                  {"tail", io::round15(r.tail_part)},
                  {"pairs", r.n_zero_pairs},
                  {"exact", io::round15(exact)},
                  {"delta", io::round15(delta)}}
                 .dump()
          << "\n";
      break;
  }
  return kOk;
}

int cmd_casimir(const Settings& cfg, std::ostream& out, std::ostream&) {
  const CasimirConfig c{cfg.casimir.a, cfg.casimir.area};
  c.validate();
  const double energy = casimir_energy(c);
  const double force = casimir_force_per_area(c.a);
  const double energy_si = energy * kHbarC;
  const double force_si = force * kHbarC;
  switch (cfg.format) {
    case Format::Plain:
      out << "a              " << plain10(c.a) << "\n";
      out << "area           " << plain10(c.area) << "\n";
      out << "energy         " << plain10(energy) << "  (" << plain10(energy_si) << " J)\n";
      out << "force_per_area " << plain10(force) << "  (" << plain10(force_si) << " Pa)\n";
      break;
    case Format::Csv:
      out << "a,area,energy,force_per_area,energy_si,force_per_area_si\n";
      out << io::format15(c.a) << ',' << io::format15(c.area) << ',' << io::format15(energy) << ','
          << io::format15(force) << ',' << io::format15(energy_si) << ',' << io::format15(force_si) << "\n";
      break;
    case Format::Json:
      out << json{{"a", io::round15(c.a)},
                  {"area", io::round15(c.area)},
                  {"energy", io::round15(energy)},
                  {"force_per_area", io::round15(force)},
                  {"energy_si", io::round15(energy_si)},
                  {"force_per_area_si", io::round15(force_si)}}
                 .dump()
          << "\n";
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings cfg;
  CLI::App app{"Zeta function, zero and prime staircase toolkit", "riemann"};
  app.fallthrough();
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", cfg.format, "Output format (default plain)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("plain|csv|json");

  auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate zeta(s)")->require_subcommand(1);
  auto* eval_cmd = zeta_cmd->add_subcommand("eval", "Value and error estimate at s = re + i im");
  eval_cmd->add_option("--re", cfg.zeta.re, "Real part of s")->required();
  eval_cmd->add_option("--im", cfg.zeta.im, "Imaginary part of s");
  eval_cmd->add_option("--tol", cfg.zeta.tol, "Target absolute tolerance")->check(CLI::PositiveNumber);

  auto* zeros_cmd = app.add_subcommand("zeros", "Zero table on the critical line")->require_subcommand(1);
  auto* scan_cmd = zeros_cmd->add_subcommand("scan", "Extend the zero cache up to --t-max");
  scan_cmd->add_option("--t-max", cfg.scan.t_max, "Scan height")->required();
  scan_cmd->add_option("--step", cfg.scan.step, "Grid step")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--tol", cfg.scan.tol, "Bisection half-width")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--cache", cfg.scan.cache, std::string("Zero cache CSV (default $") + kCacheEnv + ")");

  const std::vector<std::string> kinds{"pi", "bigpi", "psi"};
  auto* primes_cmd = app.add_subcommand("primes", "Exact staircase value at x (midpoint at jumps)");
  primes_cmd->add_option("kind", cfg.primes.kind, "pi | bigpi | psi")->required()->check(CLI::IsMember(kinds));
  primes_cmd->add_option("x", cfg.primes.x, "Abscissa")->required();

  auto* explicit_cmd = app.add_subcommand("explicit", "Explicit-formula value from the zero cache");
  explicit_cmd->add_option("kind", cfg.expl.kind, "pi | bigpi | psi")->required()->check(CLI::IsMember(kinds));
  explicit_cmd->add_option("x", cfg.expl.x, "Abscissa")->required();
  explicit_cmd->add_option("--pairs", cfg.expl.pairs, "Number of zero pairs");
  explicit_cmd->add_option("--cache", cfg.expl.cache, std::string("Zero cache CSV (default $") + kCacheEnv + ")");

  auto* casimir_cmd = app.add_subcommand("casimir", "Parallel-plate Casimir energy and force");
  casimir_cmd->add_option("--a", cfg.casimir.a, "Plate separation")->check(CLI::PositiveNumber);
  casimir_cmd->add_option("--area", cfg.casimir.area, "Plate area")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_zeta_eval(cfg, out, err);
    if (scan_cmd->parsed()) return cmd_zeros_scan(cfg, out, err);
    if (primes_cmd->parsed()) return cmd_primes(cfg, out, err);
    if (explicit_cmd->parsed()) return cmd_explicit(cfg, out, err);
    if (casimir_cmd->parsed()) return cmd_casimir(cfg, out, err);
  } catch (const CorruptionError& e) {
    err << "error: " << e.what() << "\n";
    return kCorrupt;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace riemann::cli
