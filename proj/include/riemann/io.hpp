#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "riemann/critical_line.hpp"
#include "riemann/explicit_formula.hpp"

namespace riemann::io {

/// "%.15g"
std::string format15(double v);

/// v rounded to 15 significant digits (the value format15 denotes).
double round15(double v);

// Zero table CSV: header `index,t,err`, one row per zero, 15 significant
// digits, LF endings. t_max_scanned lives in the sidecar `<path>.meta`.

void write_zero_table(std::ostream& os, const ZeroTable& table);

/// Throws CorruptionError on a bad header, malformed row or non-monotone data.
ZeroTable read_zero_table(std::istream& is);

std::filesystem::path meta_path(const std::filesystem::path& csv);

/// Missing file yields an empty table.
ZeroTable load_zero_cache(const std::filesystem::path& path);

/// Write-temp-then-rename for both the CSV and its sidecar.
void save_zero_cache(const std::filesystem::path& path, const ZeroTable& table);

// Staircase report: CSV `x,exact,approx,n_zeros_used` or a JSON array of
// objects with the same keys.

void write_staircase_csv(std::ostream& os, std::span<const StaircaseSample> rows);
std::string staircase_json(std::span<const StaircaseSample> rows);

}  // namespace riemann::io
