#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace resgen {

CsvReader::CsvReader(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open CSV file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  buffer_ = ss.str();
}

std::optional<std::vector<std::string>> CsvReader::next() {
  while (pos_ < buffer_.size()) {
    std::size_t eol = buffer_.find('\n', pos_);
    if (eol == std::string::npos) eol = buffer_.size();
    std::string line = buffer_.substr(pos_, eol - pos_);
    pos_ = eol + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    return fields;
  }
  return std::nullopt;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace resgen
