#include "riemann/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "riemann/errors.hpp"

namespace riemann::io {
namespace {

constexpr const char* kZeroHeader = "index,t,err";
constexpr const char* kMetaKey = "t_max_scanned=";

double parse_double(const std::string& field, std::size_t line) {
  if (field.empty()) throw CorruptionError("zero cache: empty field on line " + std::to_string(line));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(field.c_str(), &end);
  if (errno != 0 || end != field.c_str() + field.size()) {
    throw CorruptionError("zero cache: bad number '" + field + "' on line " + std::to_string(line));
  }
  return v;
}

std::size_t parse_index(const std::string& field, std::size_t line) {
  if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
    throw CorruptionError("zero cache: bad index '" + field + "' on line " + std::to_string(line));
  }
  return static_cast<std::size_t>(std::stoull(field));
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) { return std::strtod(format15(v).c_str(), nullptr); }

void write_zero_table(std::ostream& os, const ZeroTable& table) {
  os << kZeroHeader << '\n';
  for (const auto& z : table.zeros) os << z.index << ',' << format15(z.t) << ',' << format15(z.err) << '\n';
}

ZeroTable read_zero_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kZeroHeader) throw CorruptionError("zero cache: missing or bad header");
  ZeroTable table;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) throw CorruptionError("zero cache: blank line " + std::to_string(line_no));
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw CorruptionError("zero cache: expected 3 fields on line " + std::to_string(line_no));
    }
    ZeroOrdinate z;
    z.index = parse_index(line.substr(0, c1), line_no);
    z.t = parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    z.err = parse_double(line.substr(c2 + 1), line_no);
    table.zeros.push_back(z);
  }
  table.t_max_scanned = table.zeros.empty() ? 0.0 : table.zeros.back().t;
  table.validate();
  return table;
}

std::filesystem::path meta_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p += ".meta";
  return p;
}

ZeroTable load_zero_cache(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptionError("zero cache: cannot open " + path.string());
  ZeroTable table = read_zero_table(in);

  std::ifstream meta(meta_path(path), std::ios::binary);
  std::string line;
  if (meta && std::getline(meta, line)) {
    if (line.rfind(kMetaKey, 0) != 0) throw CorruptionError("zero cache: bad sidecar " + meta_path(path).string());
    table.t_max_scanned = parse_double(line.substr(std::string(kMetaKey).size()), 1);
    table.validate();
  }
  return table;
}

void save_zero_cache(const std::filesystem::path& path, const ZeroTable& table) {
  table.validate();
  std::ostringstream csv;
  write_zero_table(csv, table);
  atomic_write(path, csv.str());
  atomic_write(meta_path(path), std::string(kMetaKey) + format15(table.t_max_scanned) + "\n");
}

void write_staircase_csv(std::ostream& os, std::span<const StaircaseSample> rows) {
  os << "x,exact,approx,n_zeros_used\n";
  for (const auto& r : rows) {
    os << format15(r.x) << ',' << format15(r.exact) << ',' << format15(r.approx) << ',' << r.n_zeros_used << '\n';
  }
}

std::string staircase_json(std::span<const StaircaseSample> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"x", round15(r.x)},
                   {"exact", round15(r.exact)},
                   {"approx", round15(r.approx)},
                   {"n_zeros_used", r.n_zeros_used}});
  }
  return out.dump();
}

}  // namespace riemann::io
