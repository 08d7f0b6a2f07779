#include "nli/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "nli/errors.hpp"

namespace nli {

std::string to_string(TemplateKind k) {
  switch (k) {
    case TemplateKind::NerSingle:
      return "ner_single";
    case TemplateKind::NerDouble:
      return "ner_double";
    case TemplateKind::NerLocation:
      return "ner_location";
    case TemplateKind::NerNumber:
      return "ner_number";
    case TemplateKind::NerDate:
      return "ner_date";
    case TemplateKind::RoleSwap:
      return "role_swap";
  }
  return "ner_single";
}

TemplateKind template_kind_from_string(const std::string& s) {
  if (s == "ner_single") return TemplateKind::NerSingle;
  if (s == "ner_double") return TemplateKind::NerDouble;
  if (s == "ner_location") return TemplateKind::NerLocation;
  if (s == "ner_number") return TemplateKind::NerNumber;
  if (s == "ner_date") return TemplateKind::NerDate;
  if (s == "role_swap") return TemplateKind::RoleSwap;
  throw DataError("unknown template kind: '" + s + "'");
}

static int count_slot(const Template& t, const std::string& slot) {
  return static_cast<int>(std::count(t.tokens.begin(), t.tokens.end(), slot));
}

void validate_template(const Template& t) {
  const int px = count_slot(t, "{PERSONX}");
  const int py = count_slot(t, "{PERSONY}");
  const int city = count_slot(t, "{CITY}");
  const int num = count_slot(t, "{NUM}");
  const int date = count_slot(t, "{DATE}");
  const std::string text = t.text();
  auto fail = [&](const std::string& why) {
    throw DataError("bad " + to_string(t.kind) + " template '" + text + "': " + why);
  };
  switch (t.kind) {
    case TemplateKind::NerSingle:
      if (px != 1 || py != 0) fail("needs exactly one {PERSONX}");
      break;
    case TemplateKind::NerDouble:
    case TemplateKind::RoleSwap:
      if (px != 1 || py != 1) fail("needs exactly one {PERSONX} and one {PERSONY}");
      break;
    case TemplateKind::NerLocation:
      if (city != 1) fail("needs exactly one {CITY}");
      break;
    case TemplateKind::NerNumber:
      if (num != 1) fail("needs exactly one {NUM}");
      break;
    case TemplateKind::NerDate:
      if (date != 1) fail("needs exactly one {DATE}");
      break;
  }
  if (t.tokens.empty()) fail("empty template");
}

std::vector<Template> load_templates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open template file: " + path);
  std::vector<Template> out;
  std::set<std::string> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected kind<TAB>text");
    Template t;
    t.kind = template_kind_from_string(line.substr(0, tab));
    t.tokens = tokenize(line.substr(tab + 1));
    validate_template(t);
    if (seen.insert(to_string(t.kind) + "\t" + t.text()).second) out.push_back(std::move(t));
  }
  if (out.empty()) throw DataError("no templates in " + path);
  return out;
}

std::vector<SwapPair> load_swap_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open swap-pair file: " + path);
  std::vector<SwapPair> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      SwapPair sp;
      sp.tokens = j.at("tokens").get<std::vector<std::string>>();
      auto a = j.at("span_a").get<std::vector<int>>();
      auto b = j.at("span_b").get<std::vector<int>>();
      if (a.size() != 2 || b.size() != 2) throw DataError("spans must be [start,end)");
      sp.span_a = {a[0], a[1]};
      sp.span_b = {b[0], b[1]};
      const int n = static_cast<int>(sp.tokens.size());
      if (!(0 <= sp.span_a[0] && sp.span_a[0] < sp.span_a[1] && sp.span_a[1] <= n) ||
          !(0 <= sp.span_b[0] && sp.span_b[0] < sp.span_b[1] && sp.span_b[1] <= n))
        throw DataError("span out of range");
      if (sp.span_a[0] > sp.span_b[0]) std::swap(sp.span_a, sp.span_b);
      if (sp.span_a[1] > sp.span_b[0]) throw DataError("spans overlap");
      out.push_back(std::move(sp));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw DataError("no swap pairs in " + path);
  return out;
}

static bool is_proper_noun(const std::string& token, const Gazetteer& g) {
  const std::string folded = case_fold(token);
  return g.names.count(folded) > 0 || g.cities_countries.count(folded) > 0;
}

static void set_first_upper(std::string& s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
}

static void set_first_lower(std::string& s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
}

std::vector<std::string> apply_swap(const SwapPair& sp, const Gazetteer& g) {
  std::vector<std::string> a(sp.tokens.begin() + sp.span_a[0], sp.tokens.begin() + sp.span_a[1]);
  std::vector<std::string> b(sp.tokens.begin() + sp.span_b[0], sp.tokens.begin() + sp.span_b[1]);
  if (sp.span_a[0] == 0) {
    // Span A leaves sentence start: fix case both ways.
    if (!is_proper_noun(a.front(), g)) set_first_lower(a.front());
    set_first_upper(b.front());
  }
  std::vector<std::string> out;
  out.reserve(sp.tokens.size());
  out.insert(out.end(), sp.tokens.begin(), sp.tokens.begin() + sp.span_a[0]);
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), sp.tokens.begin() + sp.span_a[1], sp.tokens.begin() + sp.span_b[0]);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), sp.tokens.begin() + sp.span_b[1], sp.tokens.end());
  return out;
}

static std::vector<std::string> sorted_list(const std::set<std::string>& s) {
  return {s.begin(), s.end()};
}

Lexicons load_lexicons(const std::string& lexicon_dir) {
  namespace fs = std::filesystem;
  auto file = [&](const char* base) { return (fs::path(lexicon_dir) / base).string(); };
  Lexicons lex;
  lex.names[0] = sorted_list(load_word_list(file("names_train.txt")));
  lex.names[1] = sorted_list(load_word_list(file("names_dev.txt")));
  lex.names[2] = sorted_list(load_word_list(file("names_test.txt")));
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t)
      for (const auto& n : lex.names[s])
        if (std::find(lex.names[t].begin(), lex.names[t].end(), n) != lex.names[t].end())
          throw DataError("name lists are not disjoint: '" + n + "'");
  lex.cities = sorted_list(load_word_list(file("cities_countries.txt")));
  lex.numbers = sorted_list(load_word_list(file("numbers.txt")));
  lex.dates = sorted_list(load_word_list(file("dates.txt")));
  return lex;
}

std::array<int, 3> apportion(int total, const std::array<double, 3>& ratios, int min_per_split) {
  const double sum = ratios[0] + ratios[1] + ratios[2];
  if (sum <= 0.0) throw DataError("split ratios must be positive");
  std::array<int, 3> out{};
  std::array<double, 3> rem{};
  int assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double share = total * ratios[i] / sum;
    out[i] = static_cast<int>(share);
    rem[i] = share - out[i];
    assigned += out[i];
  }
  while (assigned < total) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (rem[i] > rem[best]) best = i;
    out[best] += 1;
    rem[best] = -1.0;
    assigned += 1;
  }
  // Rebalance from the largest part until every positive-ratio part has
  // at least min_per_split.
  for (int i = 0; i < 3; ++i) {
    while (ratios[i] > 0.0 && out[i] < min_per_split) {
      int donor = 0;
      for (int k = 1; k < 3; ++k)
        if (out[k] > out[donor]) donor = k;
      if (donor == i || out[donor] <= min_per_split)
        throw DataError("cannot split " + std::to_string(total) + " items into three parts of at least " +
                        std::to_string(min_per_split));
      out[donor] -= 1;
      out[i] += 1;
    }
  }
  return out;
}

template <class T>
static std::array<std::vector<T>, 3> partition(std::vector<T> items,
                                               const std::array<double, 3>& ratios,
                                               int min_per_split, Rng& rng) {
  rng.shuffle(items);
  const auto counts = apportion(static_cast<int>(items.size()), ratios, min_per_split);
  std::array<std::vector<T>, 3> out;
  size_t pos = 0;
  for (int s = 0; s < 3; ++s) {
    out[s].assign(items.begin() + pos, items.begin() + pos + counts[s]);
    pos += counts[s];
  }
  return out;
}

std::array<SplitPools, 3> split_inputs(const std::vector<Template>& templates,
                                       const std::vector<SwapPair>& swaps, const Lexicons& lex,
                                       const std::array<double, 3>& ratios, Rng& rng) {
  std::array<SplitPools, 3> out;
  for (int s = 0; s < 3; ++s) out[s].names = lex.names[s];

  // Templates are partitioned within each kind so no split loses a kind.
  std::map<TemplateKind, std::vector<Template>> by_kind;
  for (const auto& t : templates) by_kind[t.kind].push_back(t);
  for (auto& [kind, list] : by_kind) {
    auto parts = partition(std::move(list), ratios, 1, rng);
    for (int s = 0; s < 3; ++s)
      out[s].templates.insert(out[s].templates.end(), parts[s].begin(), parts[s].end());
  }

  if (!lex.cities.empty()) {
    auto parts = partition(lex.cities, ratios, 2, rng);
    for (int s = 0; s < 3; ++s) out[s].cities = std::move(parts[s]);
  }
  if (!lex.numbers.empty()) {
    auto parts = partition(lex.numbers, ratios, 2, rng);
    for (int s = 0; s < 3; ++s) out[s].numbers = std::move(parts[s]);
  }
  if (!lex.dates.empty()) {
    auto parts = partition(lex.dates, ratios, 2, rng);
    for (int s = 0; s < 3; ++s) out[s].dates = std::move(parts[s]);
  }
  if (!swaps.empty()) {
    auto parts = partition(swaps, ratios, 1, rng);
    for (int s = 0; s < 3; ++s) out[s].swaps = std::move(parts[s]);
  }
  return out;
}

Label number_label(long long premise_value, long long hypothesis_value) {
  return premise_value == hypothesis_value ? Label::Entailment : Label::Contradiction;
}

std::string number_to_words(long long n) {
  if (n < 0 || n >= 1000000) throw DataError("number_to_words: out of range: " + std::to_string(n));
  static const char* ones[] = {"zero",    "one",     "two",       "three",    "four",
                               "five",    "six",     "seven",     "eight",    "nine",
                               "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                               "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static const char* tens[] = {"",      "",      "twenty",  "thirty", "forty",
                               "fifty", "sixty", "seventy", "eighty", "ninety"};
  if (n < 20) return ones[n];
  if (n < 100) {
    std::string out = tens[n / 10];
    if (n % 10) out += std::string("-") + ones[n % 10];
    return out;
  }
  if (n < 1000) {
    std::string out = std::string(ones[n / 100]) + " hundred";
    if (n % 100) out += " " + number_to_words(n % 100);
    return out;
  }
  std::string out = number_to_words(n / 1000) + " thousand";
  if (n % 1000) out += " " + number_to_words(n % 1000);
  return out;
}

std::vector<std::string> fill_template(const Template& t,
                                       const std::map<std::string, std::string>& slots) {
  std::vector<std::string> out;
  out.reserve(t.tokens.size());
  for (const auto& tok : t.tokens) {
    auto it = slots.find(tok);
    if (it != slots.end()) {
      // A slot value may be multi-token (word-form numbers).
      for (auto& piece : tokenize(it->second)) out.push_back(piece);
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

namespace {

/// Deterministic per-pair label plan: fixed entailment count, seeded order.
std::vector<bool> entailment_plan(int count, double fraction, Rng& rng) {
  const int n_entail = static_cast<int>(std::lround(count * fraction));
  std::vector<bool> plan(static_cast<size_t>(count), false);
  for (int i = 0; i < n_entail && i < count; ++i) plan[i] = true;
  rng.shuffle(plan);
  return plan;
}

const std::string& pick_other(const std::vector<std::string>& pool, const std::string& not_this,
                              Rng& rng) {
  if (pool.size() < 2) throw DataError("entity pool too small for a substitution pair");
  for (;;) {
    const std::string& c = pool[rng.index(pool.size())];
    if (c != not_this) return c;
  }
}

std::vector<const Template*> of_kinds(const SplitPools& pool,
                                      std::initializer_list<TemplateKind> kinds) {
  std::vector<const Template*> out;
  for (const auto& t : pool.templates)
    for (auto k : kinds)
      if (t.kind == k) out.push_back(&t);
  return out;
}

std::string capitalized(std::string s) {
  set_first_upper(s);
  return s;
}

}  // namespace

std::vector<NliExample> gen_ner_changed(const SplitPools& pool,
                                        const std::map<std::string, int>& counts,
                                        double entailment_fraction, Rng& rng) {
  std::vector<NliExample> out;
  auto count_of = [&](const char* k) {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  };

  // ner_name: single- and double-name templates, names substituted.
  if (const int n = count_of("ner_name"); n > 0) {
    auto templates = of_kinds(pool, {TemplateKind::NerSingle, TemplateKind::NerDouble});
    if (templates.empty()) throw DataError("no name templates in split");
    if (pool.names.size() < 4) throw DataError("name pool too small (need at least 4)");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const Template& t = *templates[rng.index(templates.size())];
      NliExample ex;
      ex.source = "ner_name";
      const std::string x = capitalized(pool.names[rng.index(pool.names.size())]);
      std::map<std::string, std::string> slots{{"{PERSONX}", x}};
      if (t.kind == TemplateKind::NerDouble)
        slots["{PERSONY}"] = capitalized(pick_other(pool.names, case_fold(x), rng));
      ex.premise = fill_template(t, slots);
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        // Hypothesis names are fresh: distinct from both premise names and
        // from each other.
        std::set<std::string> used{case_fold(slots["{PERSONX}"])};
        if (t.kind == TemplateKind::NerDouble) used.insert(case_fold(slots["{PERSONY}"]));
        auto fresh = [&]() {
          for (;;) {
            const std::string& c = pool.names[rng.index(pool.names.size())];
            if (!used.count(c)) {
              used.insert(c);
              return capitalized(c);
            }
          }
        };
        std::map<std::string, std::string> hyp_slots{{"{PERSONX}", fresh()}};
        if (t.kind == TemplateKind::NerDouble) hyp_slots["{PERSONY}"] = fresh();
        ex.hypothesis = fill_template(t, hyp_slots);
        ex.label = Label::Neutral;
      }
      out.push_back(std::move(ex));
    }
  }

  if (const int n = count_of("ner_location"); n > 0) {
    auto templates = of_kinds(pool, {TemplateKind::NerLocation});
    if (templates.empty()) throw DataError("no location templates in split");
    if (pool.cities.size() < 2) throw DataError("city pool too small");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const Template& t = *templates[rng.index(templates.size())];
      const std::string& c1 = pool.cities[rng.index(pool.cities.size())];
      NliExample ex;
      ex.source = "ner_location";
      ex.premise = fill_template(t, {{"{CITY}", capitalized(c1)}});
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        ex.hypothesis = fill_template(t, {{"{CITY}", capitalized(pick_other(pool.cities, c1, rng))}});
        ex.label = Label::Neutral;
      }
      out.push_back(std::move(ex));
    }
  }

  if (const int n = count_of("ner_number"); n > 0) {
    auto templates = of_kinds(pool, {TemplateKind::NerNumber});
    if (templates.empty()) throw DataError("no number templates in split");
    if (pool.numbers.size() < 2) throw DataError("number pool too small");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const Template& t = *templates[rng.index(templates.size())];
      const std::string& v1 = pool.numbers[rng.index(pool.numbers.size())];
      NliExample ex;
      ex.source = "ner_number";
      ex.premise = fill_template(t, {{"{NUM}", v1}});
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        // A replacement value is never equal to the original, so the
        // different-value rule always yields contradiction here.
        const std::string& v2 = pick_other(pool.numbers, v1, rng);
        const bool word_form = rng.bernoulli(0.5);
        const std::string hyp_value = word_form ? number_to_words(std::stoll(v2)) : v2;
        ex.hypothesis = fill_template(t, {{"{NUM}", hyp_value}});
        ex.label = number_label(std::stoll(v1), std::stoll(v2));
      }
      out.push_back(std::move(ex));
    }
  }

  if (const int n = count_of("ner_date"); n > 0) {
    auto templates = of_kinds(pool, {TemplateKind::NerDate});
    if (templates.empty()) throw DataError("no date templates in split");
    if (pool.dates.size() < 2) throw DataError("date pool too small");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const Template& t = *templates[rng.index(templates.size())];
      const std::string& d1 = pool.dates[rng.index(pool.dates.size())];
      NliExample ex;
      ex.source = "ner_date";
      ex.premise = fill_template(t, {{"{DATE}", capitalized(d1)}});
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        ex.hypothesis =
            fill_template(t, {{"{DATE}", capitalized(pick_other(pool.dates, d1, rng))}});
        ex.label = Label::Contradiction;
      }
      out.push_back(std::move(ex));
    }
  }

  return out;
}

std::vector<NliExample> gen_role_switched(const SplitPools& pool, const Gazetteer& g,
                                          const std::map<std::string, int>& counts,
                                          double entailment_fraction, Rng& rng) {
  std::vector<NliExample> out;
  auto count_of = [&](const char* k) {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  };

  if (const int n = count_of("role_vn"); n > 0) {
    auto templates = of_kinds(pool, {TemplateKind::RoleSwap});
    if (templates.empty()) throw DataError("no role_swap templates in split");
    if (pool.names.size() < 2) throw DataError("name pool too small");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const Template& t = *templates[rng.index(templates.size())];
      const std::string x = capitalized(pool.names[rng.index(pool.names.size())]);
      const std::string y = capitalized(pick_other(pool.names, case_fold(x), rng));
      NliExample ex;
      ex.source = "role_vn";
      ex.premise = fill_template(t, {{"{PERSONX}", x}, {"{PERSONY}", y}});
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        ex.hypothesis = fill_template(t, {{"{PERSONX}", y}, {"{PERSONY}", x}});
        ex.label = Label::Neutral;
      }
      out.push_back(std::move(ex));
    }
  }

  if (const int n = count_of("role_qasrl"); n > 0) {
    if (pool.swaps.empty()) throw DataError("no swap pairs in split");
    auto plan = entailment_plan(n, entailment_fraction, rng);
    for (int i = 0; i < n; ++i) {
      const SwapPair& sp = pool.swaps[rng.index(pool.swaps.size())];
      NliExample ex;
      ex.source = "role_qasrl";
      ex.premise = sp.tokens;
      if (plan[i]) {
        ex.hypothesis = ex.premise;
        ex.label = Label::Entailment;
      } else {
        ex.hypothesis = apply_swap(sp, g);
        ex.label = Label::Neutral;
      }
      out.push_back(std::move(ex));
    }
  }

  return out;
}

std::vector<NliExample> gen_mixed(const SplitPools& pool, int count, double entailment_fraction,
                                  Rng& rng) {
  std::vector<NliExample> out;
  if (count <= 0) return out;
  if (pool.templates.size() < 2) throw DataError("mixed generation needs at least two templates");
  auto plan = entailment_plan(count, entailment_fraction, rng);

  auto fill_any = [&](const Template& t) {
    std::map<std::string, std::string> slots;
    if (count_slot(t, "{PERSONX}") > 0)
      slots["{PERSONX}"] = capitalized(pool.names[rng.index(pool.names.size())]);
    if (count_slot(t, "{PERSONY}") > 0)
      slots["{PERSONY}"] =
          capitalized(pick_other(pool.names, case_fold(slots["{PERSONX}"]), rng));
    if (count_slot(t, "{CITY}") > 0)
      slots["{CITY}"] = capitalized(pool.cities[rng.index(pool.cities.size())]);
    if (count_slot(t, "{NUM}") > 0) slots["{NUM}"] = pool.numbers[rng.index(pool.numbers.size())];
    if (count_slot(t, "{DATE}") > 0)
      slots["{DATE}"] = capitalized(pool.dates[rng.index(pool.dates.size())]);
    return fill_template(t, slots);
  };

  for (int i = 0; i < count; ++i) {
    const size_t ta = rng.index(pool.templates.size());
    NliExample ex;
    ex.source = "mixed";
    ex.premise = fill_any(pool.templates[ta]);
    if (plan[i]) {
      ex.hypothesis = ex.premise;
      ex.label = Label::Entailment;
    } else {
      size_t tb;
      do {
        tb = rng.index(pool.templates.size());
      } while (tb == ta);
      ex.hypothesis = fill_any(pool.templates[tb]);
      ex.label = Label::Neutral;
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<Template> make_templates(const std::vector<std::string>& sentences, const Gazetteer& g,
                                     MakeTemplatesReport* report) {
  MakeTemplatesReport local;
  std::vector<Template> out;
  std::set<std::string> seen;
  for (const auto& sentence : sentences) {
    ++local.input_sentences;
    Template t;
    t.tokens = tokenize(sentence);
    std::map<std::string, std::string> name_to_slot;
    for (auto& tok : t.tokens) {
      const std::string folded = case_fold(tok);
      if (!g.names.count(folded)) continue;
      auto it = name_to_slot.find(folded);
      if (it == name_to_slot.end()) {
        const std::string slot = name_to_slot.empty() ? "{PERSONX}" : "{PERSONY}";
        if (name_to_slot.size() >= 2) continue;  // third distinct name: leave as-is
        it = name_to_slot.emplace(folded, slot).first;
      }
      tok = it->second;
    }
    if (name_to_slot.empty()) {
      ++local.skipped_no_entity;
      continue;
    }
    t.kind = name_to_slot.size() == 1 ? TemplateKind::NerSingle : TemplateKind::NerDouble;
    if (!seen.insert(t.text()).second) {
      ++local.duplicates;
      continue;
    }
    out.push_back(std::move(t));
  }
  if (report) *report = local;
  return out;
}

}  // namespace nli
