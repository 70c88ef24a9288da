#pragma once

#include <optional>
#include <string>
#include <vector>

namespace resgen {

/// Minimal CSV support for the flat comma-separated schemas used by the
/// pipeline (no quoting or embedded commas).
struct CsvReader {
  explicit CsvReader(const std::string& path);

  /// Next record split on commas, or nullopt at EOF. Trailing '\r' stripped;
  /// blank lines skipped. line_number() refers to the record just returned.
  std::optional<std::vector<std::string>> next();
  long line_number() const { return line_; }

 private:
  std::string buffer_;
  std::size_t pos_ = 0;
  long line_ = 0;
};

std::string trim(const std::string& s);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

}  // namespace resgen
