#include "digest.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace resgen {

std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string digest_string(std::string_view bytes) { return digest_hex(fnv1a64(bytes)); }

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PipelineError("cannot open file for digest: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_string(ss.str());
}

}  // namespace resgen
