#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>

namespace nli {

/// The four entity categories; index values are load-bearing (they address
/// the 16-dim pair feature as k1*4+k2).
enum class NerCategory : int { Name = 0, Numeric = 1, Date = 2, Other = 3 };

constexpr int kNumNerCategories = 4;
constexpr int kPairFeatureDim = kNumNerCategories * kNumNerCategories;

/// One-hot over the 4 categories.
struct NerOneHot {
  std::array<double, kNumNerCategories> v{};
};

/// One-hot 16-dim feature for a token pair; hot index = cat_a*4 + cat_b.
struct PairFeature {
  std::array<double, kPairFeatureDim> x{};
  int hot = 0;
};

/// Word lists backing the deterministic tagger. All entries lowercase,
/// nonempty, single tokens.
struct Gazetteer {
  std::set<std::string> names;
  std::set<std::string> cities_countries;
  std::set<std::string> month_words;
  std::set<std::string> numeric_words;
};

/// One entry per line, '#' starts a comment line, entries are case-folded.
std::set<std::string> load_word_list(const std::string& path);

/// Loads names*.txt, extra_names.txt, cities_countries.txt, months.txt and
/// numeric_words.txt from a directory.
Gazetteer load_gazetteer(const std::string& lexicon_dir);

bool matches_numeric(std::string_view token);
bool matches_date_pattern(std::string_view token);

/// Deterministic, total. Precedence on overlap: Name > Numeric > Date > Other.
NerCategory tag_token(std::string_view token, const Gazetteer& g);

NerOneHot one_hot(NerCategory c);
int pair_index(NerCategory a, NerCategory b);
PairFeature pair_feature(NerCategory a, NerCategory b);

}  // namespace nli
