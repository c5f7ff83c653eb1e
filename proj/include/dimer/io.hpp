#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dimer/decay.hpp"

namespace dimer::io {

/// Nine significant digits; -0 prints as 0, infinities as inf / -inf.
std::string format_number(double x);

/// Comma-separated table with a mandatory header row and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  void add_row(const std::vector<std::string>& cells);

  std::string str() const;
  /// Throws IoError when the file cannot be written.
  void write(const std::filesystem::path& path) const;

 private:
  std::size_t columns_;
  std::string text_;
};

/// Writes `text` verbatim, throwing IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Reads a mode list: header row, then `omega_k_cm1,V2_k_cm2` per line.
/// Throws IoError if the file cannot be opened and DomainError (with the line
/// number) on malformed content.
std::vector<BathMode> read_modes_csv(const std::filesystem::path& path);

}  // namespace dimer::io
