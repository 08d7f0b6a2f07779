#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace nli {

/// ASCII lowercase; bytes outside [A-Z] pass through unchanged, so UTF-8
/// input stays valid.
std::string case_fold(std::string_view s);

/// Whitespace split with leading/trailing sentence punctuation peeled off as
/// separate tokens. Internal characters are kept, so "7/16/1969", "sixty-two"
/// and "give-13.1" survive as single tokens.
std::vector<std::string> tokenize(std::string_view text);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

/// Seeded RNG with fully specified sampling, so generated corpora are
/// byte-identical across platforms (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be > 0.
  size_t index(size_t n);
  /// Uniform double in [0, 1) with 53 bits.
  double real();
  bool bernoulli(double p) { return real() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

  template <class T>
  const T& choice(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nli
