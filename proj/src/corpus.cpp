#include "nli/corpus.hpp"

#include <fstream>

#include <json.hpp>

#include "nli/errors.hpp"
#include "nli/text.hpp"

namespace nli {

std::string to_string(Label l) {
  switch (l) {
    case Label::Entailment:
      return "entailment";
    case Label::Contradiction:
      return "contradiction";
    case Label::Neutral:
      return "neutral";
  }
  return "neutral";
}

Label label_from_string(const std::string& s) {
  if (s == "entailment") return Label::Entailment;
  if (s == "contradiction") return Label::Contradiction;
  if (s == "neutral") return Label::Neutral;
  throw DataError("unknown label: '" + s + "'");
}

std::vector<NliExample> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus: " + path);
  std::vector<NliExample> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
    }
    NliExample ex;
    try {
      ex.premise = tokenize(j.at("premise").get<std::string>());
      ex.hypothesis = tokenize(j.at("hypothesis").get<std::string>());
      ex.label = label_from_string(j.at("label").get<std::string>());
      ex.source = j.value("source", std::string());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": missing field: " + e.what());
    }
    if (ex.premise.empty() || ex.hypothesis.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty sentence");
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<NliExample> read_corpora(const std::vector<std::string>& paths) {
  std::vector<NliExample> out;
  for (const auto& p : paths) {
    auto part = read_corpus(p);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string corpus_line(const NliExample& ex) {
  nlohmann::ordered_json j;
  j["premise"] = join(ex.premise);
  j["hypothesis"] = join(ex.hypothesis);
  j["label"] = to_string(ex.label);
  j["source"] = ex.source;
  return j.dump();
}

void write_corpus(const std::string& path, const std::vector<NliExample>& examples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus: " + path);
  for (const auto& ex : examples) out << corpus_line(ex) << "\n";
}

}  // namespace nli
