#pragma once

#include <string>
#include <vector>

namespace nli {

enum class Label : int { Entailment = 0, Contradiction = 1, Neutral = 2 };

constexpr int kNumLabels = 3;

std::string to_string(Label l);
Label label_from_string(const std::string& s);

/// One premise-hypothesis pair. Sentences are stored tokenized; the JSONL
/// form joins tokens with single spaces.
struct NliExample {
  std::vector<std::string> premise;
  std::vector<std::string> hypothesis;
  Label label = Label::Neutral;
  std::string source;
};

/// Reads {"premise","hypothesis","label","source"} JSONL; sentences are
/// tokenized on load. Throws DataError on malformed lines or empty sentences.
std::vector<NliExample> read_corpus(const std::string& path);

/// Reads and concatenates several corpora in argument order.
std::vector<NliExample> read_corpora(const std::vector<std::string>& paths);

std::string corpus_line(const NliExample& ex);
void write_corpus(const std::string& path, const std::vector<NliExample>& examples);

}  // namespace nli
