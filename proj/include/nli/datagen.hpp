#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nli/corpus.hpp"
#include "nli/ner.hpp"
#include "nli/text.hpp"

namespace nli {

enum class TemplateKind { NerSingle, NerDouble, NerLocation, NerNumber, NerDate, RoleSwap };

std::string to_string(TemplateKind k);
TemplateKind template_kind_from_string(const std::string& s);

/// A sentence with typed slots. Slot tokens are literal "{PERSONX}",
/// "{PERSONY}", "{CITY}", "{NUM}", "{DATE}".
struct Template {
  TemplateKind kind;
  std::vector<std::string> tokens;

  std::string text() const { return join(tokens); }
};

/// Enforces the per-kind slot-count rules; throws DataError on violation.
void validate_template(const Template& t);

/// TSV lines: kind<TAB>template text. '#' lines are comments. Duplicate
/// templates collapse to one.
std::vector<Template> load_templates(const std::string& path);

/// A pre-annotated sentence whose two same-type, different-role entity spans
/// can be exchanged. Spans are [start, end) token ranges.
struct SwapPair {
  std::vector<std::string> tokens;
  std::array<int, 2> span_a{};
  std::array<int, 2> span_b{};
};

/// JSONL: {"tokens": [...], "span_a": [s,e), "span_b": [s,e)}.
std::vector<SwapPair> load_swap_pairs(const std::string& path);

/// Hypothesis tokens with the two spans exchanged. Sentence-initial case is
/// repaired; a token leaving position 0 keeps its capital only if it is a
/// proper noun per the gazetteer.
std::vector<std::string> apply_swap(const SwapPair& sp, const Gazetteer& g);

/// Entity pools for generation. Name lists ship pre-partitioned per split;
/// the other pools are partitioned by the seeded split plan.
struct Lexicons {
  std::array<std::vector<std::string>, 3> names;  // train, dev, test
  std::vector<std::string> cities;
  std::vector<std::string> numbers;  // digit strings
  std::vector<std::string> dates;    // single-token date strings
};

Lexicons load_lexicons(const std::string& lexicon_dir);

struct DatasetGenSpec {
  std::array<double, 3> ratios{8.0, 1.0, 1.0};  // train : dev : test
  std::map<std::string, int> pairs;             // source kind -> total pair count
};

struct GenConfig {
  uint64_t seed = 1;
  double entailment_fraction = 0.5;
  DatasetGenSpec ner_changed;
  DatasetGenSpec role_switched;
  DatasetGenSpec mixed;
};

/// Largest-remainder apportionment of `total` into three parts; every part
/// with positive ratio receives at least min_per_split (when total allows).
std::array<int, 3> apportion(int total, const std::array<double, 3>& ratios, int min_per_split);

/// One split's generation inputs after partitioning.
struct SplitPools {
  std::vector<Template> templates;
  std::vector<std::string> names, cities, numbers, dates;
  std::vector<SwapPair> swaps;
};

/// Pairwise-disjoint template/entity partition. Templates are apportioned
/// per kind so every split keeps at least one template of each kind present.
std::array<SplitPools, 3> split_inputs(const std::vector<Template>& templates,
                                       const std::vector<SwapPair>& swaps, const Lexicons& lex,
                                       const std::array<double, 3>& ratios, Rng& rng);

/// Gold-label rule for number substitution: equal values entail regardless
/// of digit/word form, different values contradict.
Label number_label(long long premise_value, long long hypothesis_value);

/// English cardinal, lowercase, hyphenated tens. 0 <= n < 1,000,000.
std::string number_to_words(long long n);

std::vector<std::string> fill_template(const Template& t,
                                       const std::map<std::string, std::string>& slots);

/// Entity-substitution pairs: different names/cities -> neutral, different
/// numbers/dates -> contradiction, identical copies -> entailment.
std::vector<NliExample> gen_ner_changed(const SplitPools& pool,
                                        const std::map<std::string, int>& counts,
                                        double entailment_fraction, Rng& rng);

/// Role-swap pairs from two-slot templates and pre-annotated swap pairs;
/// swapped -> neutral, identical copies -> entailment.
std::vector<NliExample> gen_role_switched(const SplitPools& pool, const Gazetteer& g,
                                          const std::map<std::string, int>& counts,
                                          double entailment_fraction, Rng& rng);

/// No-entity-manipulation control set: identical copies -> entailment,
/// lexically distinct template pairs -> neutral.
std::vector<NliExample> gen_mixed(const SplitPools& pool, int count, double entailment_fraction,
                                  Rng& rng);

struct MakeTemplatesReport {
  int input_sentences = 0;
  int skipped_no_entity = 0;
  int duplicates = 0;
};

/// Turns raw sentences into name-slot templates using the gazetteer's name
/// list: the first distinct name becomes {PERSONX}, the second {PERSONY}.
/// Sentences without a recognized name are skipped and counted.
std::vector<Template> make_templates(const std::vector<std::string>& sentences, const Gazetteer& g,
                                     MakeTemplatesReport* report);

}  // namespace nli
