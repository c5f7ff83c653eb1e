#include "dimer/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include "dimer/errors.hpp"

namespace dimer::io {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) { add_row(header); }

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  add_row(cells);
}

void CsvTable::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("CsvTable: row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

std::string CsvTable::str() const { return text_; }

void CsvTable::write(const std::filesystem::path& path) const { write_text(path, text_); }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

namespace {

double parse_cell(std::string cell, std::size_t line) {
  boost::algorithm::trim(cell);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
    throw DomainError("mode list line " + std::to_string(line) + ": '" + cell + "' is not a number");
  return v;
}

}  // namespace

std::vector<BathMode> read_modes_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mode list " + path.string());

  std::vector<BathMode> modes;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (boost::algorithm::trim_copy(line).empty()) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    boost::algorithm::split(cells, line, [](char c) { return c == ','; });
    if (cells.size() != 2)
      throw DomainError("mode list line " + std::to_string(number) + ": expected 2 columns");
    BathMode m{parse_cell(cells[0], number), parse_cell(cells[1], number)};
    if (!(m.omega > 0.0)) throw DomainError("mode list line " + std::to_string(number) + ": omega_k must be positive");
    if (!(m.coupling2 >= 0.0))
      throw DomainError("mode list line " + std::to_string(number) + ": V2_k must be non-negative");
    modes.push_back(m);
  }
  if (!header_seen) throw DomainError("mode list " + path.string() + " has no header row");
  return modes;
}

}  // namespace dimer::io
