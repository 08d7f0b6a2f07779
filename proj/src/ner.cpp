#include "nli/ner.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nli/errors.hpp"
#include "nli/text.hpp"

namespace nli {

std::set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word list: " + path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const size_t end = line.find_last_not_of(" \t");
    std::string entry = case_fold(line.substr(start, end - start + 1));
    if (entry.find(' ') != std::string::npos || entry.find('\t') != std::string::npos)
      throw DataError("word list entry has internal whitespace: '" + entry + "' in " + path);
    out.insert(std::move(entry));
  }
  return out;
}

Gazetteer load_gazetteer(const std::string& lexicon_dir) {
  namespace fs = std::filesystem;
  Gazetteer g;
  for (const char* base : {"names_train.txt", "names_dev.txt", "names_test.txt", "extra_names.txt"}) {
    const fs::path p = fs::path(lexicon_dir) / base;
    if (fs::exists(p)) {
      auto words = load_word_list(p.string());
      g.names.insert(words.begin(), words.end());
    }
  }
  if (g.names.empty()) throw DataError("no name lists found under " + lexicon_dir);
  g.cities_countries = load_word_list((fs::path(lexicon_dir) / "cities_countries.txt").string());
  g.month_words = load_word_list((fs::path(lexicon_dir) / "months.txt").string());
  g.numeric_words = load_word_list((fs::path(lexicon_dir) / "numeric_words.txt").string());
  return g;
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// [0-9]+([.,][0-9]+)*
bool matches_numeric(std::string_view token) {
  size_t i = 0;
  auto run = [&]() {
    const size_t start = i;
    while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
    return i > start;
  };
  if (!run()) return false;
  while (i < token.size()) {
    if (token[i] != '.' && token[i] != ',') return false;
    ++i;
    if (!run()) return false;
  }
  return true;
}

// \d{4} in 1900-2099, or \d{1,2}/\d{1,2}/\d{2,4}.
bool matches_date_pattern(std::string_view token) {
  if (token.size() == 4 && all_digits(token)) {
    const int year = (token[0] - '0') * 1000 + (token[1] - '0') * 100 + (token[2] - '0') * 10 + (token[3] - '0');
    return year >= 1900 && year <= 2099;
  }
  const size_t s1 = token.find('/');
  if (s1 == std::string_view::npos) return false;
  const size_t s2 = token.find('/', s1 + 1);
  if (s2 == std::string_view::npos) return false;
  std::string_view d = token.substr(0, s1);
  std::string_view m = token.substr(s1 + 1, s2 - s1 - 1);
  std::string_view y = token.substr(s2 + 1);
  return all_digits(d) && d.size() >= 1 && d.size() <= 2 && all_digits(m) && m.size() >= 1 &&
         m.size() <= 2 && all_digits(y) && y.size() >= 2 && y.size() <= 4;
}

NerCategory tag_token(std::string_view token, const Gazetteer& g) {
  const std::string folded = case_fold(token);
  if (g.names.count(folded) || g.cities_countries.count(folded)) return NerCategory::Name;
  if (matches_numeric(folded) || g.numeric_words.count(folded)) return NerCategory::Numeric;
  if (g.month_words.count(folded) || matches_date_pattern(folded)) return NerCategory::Date;
  return NerCategory::Other;
}

NerOneHot one_hot(NerCategory c) {
  NerOneHot h;
  h.v[static_cast<int>(c)] = 1.0;
  return h;
}

int pair_index(NerCategory a, NerCategory b) {
  return static_cast<int>(a) * kNumNerCategories + static_cast<int>(b);
}

PairFeature pair_feature(NerCategory a, NerCategory b) {
  PairFeature f;
  f.hot = pair_index(a, b);
  f.x[f.hot] = 1.0;
  return f;
}

}  // namespace nli
