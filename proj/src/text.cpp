#include "nli/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nli {

std::string case_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

static bool is_edge_punct(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
    case '(':
    case ')':
    case '"':
    case '\'':
      return true;
    default:
      return false;
  }
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view chunk = text.substr(i, j - i);
    i = j;

    size_t lead = 0;
    while (lead < chunk.size() && is_edge_punct(chunk[lead])) ++lead;
    size_t trail = chunk.size();
    while (trail > lead && is_edge_punct(chunk[trail - 1])) --trail;
    for (size_t k = 0; k < lead; ++k) out.emplace_back(1, chunk[k]);
    if (trail > lead) out.emplace_back(chunk.substr(lead, trail - lead));
    for (size_t k = trail; k < chunk.size(); ++k) out.emplace_back(1, chunk[k]);
  }
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

size_t Rng::index(size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index: n must be > 0");
  // Rejection sampling for an unbiased bounded draw.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<size_t>(x % n);
}

double Rng::real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace nli
