#include "nli/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "nli/datagen.hpp"
#include "nli/errors.hpp"
#include "nli/text.hpp"

namespace nli::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

uint64_t resolve_seed(const std::optional<uint64_t>& flag, uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NLI_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("NLI_SEED is not a number: '") + env + "'");
    }
  }
  return fallback;
}

uint64_t fnv1a64(std::string_view bytes, uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t hash_file(const std::string& path, uint64_t h) {
  return fnv1a64(read_file(path), h);
}

static int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}

// ---- generate ----

namespace {

struct GenerateConfig {
  uint64_t seed = 1;
  double entailment_fraction = 0.5;
  std::string out_dir = "out/corpora";
  std::string lexicon_dir = "data/lexicons";
  std::string ner_templates = "data/templates/ner_templates.tsv";
  std::string role_templates = "data/templates/role_templates.tsv";
  std::string swap_pairs = "data/swap_pairs.jsonl";
  std::string raw_sentences;  // optional extra bAbI-style input
  GenConfig gen;
};

DatasetGenSpec dataset_spec_from_json(const json& j) {
  DatasetGenSpec spec;
  if (j.contains("ratios")) {
    auto r = j.at("ratios").get<std::vector<double>>();
    if (r.size() != 3) throw DataError("ratios must have three entries");
    spec.ratios = {r[0], r[1], r[2]};
  }
  for (const auto& [key, value] : j.at("pairs").items()) spec.pairs[key] = value.get<int>();
  return spec;
}

GenerateConfig parse_generate_config(const std::string& path,
                                     const std::optional<uint64_t>& seed_env_ok = std::nullopt) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw DataError("bad generation config " + path + ": " + e.what());
  }
  GenerateConfig cfg;
  if (j.contains("seed"))
    cfg.seed = j.at("seed").get<uint64_t>();
  else
    cfg.seed = resolve_seed(seed_env_ok, cfg.seed);
  cfg.entailment_fraction = j.value("entailment_fraction", 0.5);
  if (!(cfg.entailment_fraction > 0.0 && cfg.entailment_fraction < 1.0))
    throw DataError("entailment_fraction must be in (0,1)");
  cfg.out_dir = j.value("out_dir", cfg.out_dir);
  cfg.lexicon_dir = j.value("lexicon_dir", cfg.lexicon_dir);
  cfg.ner_templates = j.value("ner_templates", cfg.ner_templates);
  cfg.role_templates = j.value("role_templates", cfg.role_templates);
  cfg.swap_pairs = j.value("swap_pairs", cfg.swap_pairs);
  cfg.raw_sentences = j.value("raw_sentences", std::string());
  cfg.gen.seed = cfg.seed;
  cfg.gen.entailment_fraction = cfg.entailment_fraction;
  const auto& ds = j.at("datasets");
  if (ds.contains("ner_changed")) cfg.gen.ner_changed = dataset_spec_from_json(ds.at("ner_changed"));
  if (ds.contains("role_switched"))
    cfg.gen.role_switched = dataset_spec_from_json(ds.at("role_switched"));
  if (ds.contains("mixed")) cfg.gen.mixed = dataset_spec_from_json(ds.at("mixed"));
  return cfg;
}

const char* kSplitNames[3] = {"train", "dev", "test"};

std::map<std::string, int> split_counts(const std::map<std::string, int>& totals,
                                        const std::array<double, 3>& ratios, int split) {
  std::map<std::string, int> out;
  for (const auto& [kind, total] : totals) out[kind] = apportion(total, ratios, 1)[split];
  return out;
}

ordered_json corpus_stats(const std::vector<NliExample>& examples) {
  std::map<std::string, int> by_label, by_source;
  for (const auto& ex : examples) {
    by_label[to_string(ex.label)] += 1;
    by_source[ex.source] += 1;
  }
  return ordered_json{{"count", examples.size()}, {"by_label", by_label}, {"by_source", by_source}};
}

}  // namespace

int cmd_generate(const GenerateOptions& opt) {
  return run_guarded([&]() {
    GenerateConfig cfg = parse_generate_config(opt.config_path);
    if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
    fs::create_directories(cfg.out_dir);

    Lexicons lex = load_lexicons(cfg.lexicon_dir);
    Gazetteer gaz = load_gazetteer(cfg.lexicon_dir);
    std::vector<Template> ner_templates = load_templates(cfg.ner_templates);
    std::vector<Template> role_templates = load_templates(cfg.role_templates);
    std::vector<SwapPair> swaps = load_swap_pairs(cfg.swap_pairs);

    MakeTemplatesReport mk_report;
    if (!cfg.raw_sentences.empty()) {
      std::vector<std::string> sentences;
      std::istringstream in(read_file(cfg.raw_sentences));
      for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') sentences.push_back(line);
      auto made = make_templates(sentences, gaz, &mk_report);
      ner_templates.insert(ner_templates.end(), made.begin(), made.end());
    }

    Rng rng(cfg.seed);
    ordered_json report;
    report["format_version"] = 1;
    report["seed"] = cfg.seed;
    report["entailment_fraction"] = cfg.entailment_fraction;
    if (!cfg.raw_sentences.empty())
      report["make_templates"] = {{"input_sentences", mk_report.input_sentences},
                                  {"skipped_no_entity", mk_report.skipped_no_entity},
                                  {"duplicates", mk_report.duplicates}};

    struct DatasetJob {
      const char* name;
      const DatasetGenSpec* spec;
    };
    for (const DatasetJob& job : {DatasetJob{"ner_changed", &cfg.gen.ner_changed},
                                  DatasetJob{"role_switched", &cfg.gen.role_switched},
                                  DatasetJob{"mixed", &cfg.gen.mixed}}) {
      int total = 0;
      for (const auto& [_, n] : job.spec->pairs) total += n;
      if (total == 0) continue;
      const bool role = std::string(job.name) == "role_switched";
      const auto& templates = role ? role_templates : ner_templates;
      auto pools = split_inputs(templates, role ? swaps : std::vector<SwapPair>{}, lex,
                                job.spec->ratios, rng);
      ordered_json ds_report;
      for (int s = 0; s < 3; ++s) {
        const auto counts = split_counts(job.spec->pairs, job.spec->ratios, s);
        std::vector<NliExample> examples;
        if (std::string(job.name) == "ner_changed")
          examples = gen_ner_changed(pools[s], counts, cfg.entailment_fraction, rng);
        else if (role)
          examples = gen_role_switched(pools[s], gaz, counts, cfg.entailment_fraction, rng);
        else
          examples = gen_mixed(pools[s], counts.count("mixed") ? counts.at("mixed") : 0,
                               cfg.entailment_fraction, rng);
        const std::string file =
            (fs::path(cfg.out_dir) / (std::string(job.name) + "_" + kSplitNames[s] + ".jsonl"))
                .string();
        write_corpus(file, examples);
        ordered_json sj = corpus_stats(examples);
        sj["file"] = file;
        std::vector<std::string> template_texts;
        for (const auto& t : pools[s].templates) template_texts.push_back(t.text());
        sj["templates"] = template_texts;
        sj["names"] = pools[s].names;
        ds_report[kSplitNames[s]] = sj;
        std::cout << job.name << "/" << kSplitNames[s] << ": " << examples.size() << " pairs -> "
                  << file << "\n";
      }
      report["datasets"][job.name] = ds_report;
    }

    const std::string report_path = (fs::path(cfg.out_dir) / "report.json").string();
    write_file(report_path, report.dump(2) + "\n");
    std::cout << "report -> " << report_path << "\n";
    return kExitOk;
  });
}

// ---- train ----

static void write_metrics_csv(const std::string& path, const std::vector<EpochMetrics>& metrics) {
  std::ostringstream out;
  out << "epoch,train_acc,dev_acc,mean_loss\n";
  out << std::setprecision(17);
  for (const auto& m : metrics)
    out << m.epoch << "," << m.train_acc << "," << m.dev_acc << "," << m.mean_loss << "\n";
  write_file(path, out.str());
}

int cmd_train(const TrainOptions& opt) {
  return run_guarded([&]() {
    if (opt.train_paths.empty()) throw UsageError("at least one training corpus is required");
    ModelConfig cfg = opt.config;
    cfg.seed = resolve_seed(opt.seed_flag, cfg.seed);

    auto train_set = read_corpora(opt.train_paths);
    if (train_set.empty()) throw DataError("training corpus is empty");
    std::vector<NliExample> dev_set;
    if (!opt.dev_path.empty()) dev_set = read_corpus(opt.dev_path);

    Gazetteer gaz = load_gazetteer(opt.lexicon_dir);
    TrainResult result = train(train_set, dev_set, cfg, gaz);

    if (const auto dir = fs::path(opt.out_path).parent_path(); !dir.empty())
      fs::create_directories(dir);
    save_checkpoint(opt.out_path, result.params);
    const std::string metrics_path =
        opt.metrics_path.empty() ? opt.out_path + ".metrics.csv" : opt.metrics_path;
    write_metrics_csv(metrics_path, result.metrics);

    std::cout << "trained " << to_string(cfg.mode) << " model on " << train_set.size()
              << " examples, " << cfg.epochs << " epochs (seed " << cfg.seed << ")\n";
    if (!result.metrics.empty()) {
      const auto& last = result.metrics.back();
      std::cout << "final train_acc=" << last.train_acc << " dev_acc=" << last.dev_acc
                << " best_epoch=" << result.best_epoch << "\n";
    }
    std::cout << "checkpoint -> " << opt.out_path << "\nmetrics -> " << metrics_path << "\n";
    return kExitOk;
  });
}

// ---- eval ----

static ordered_json eval_to_json(const EvalResult& r) {
  ordered_json j;
  j["accuracy"] = r.accuracy;
  j["total"] = r.total;
  ordered_json conf = ordered_json::array();
  for (const auto& row : r.confusion) conf.push_back(row);
  j["confusion"] = conf;  // rows: gold entailment|contradiction|neutral
  j["labels"] = {"entailment", "contradiction", "neutral"};
  ordered_json per_source;
  for (const auto& [source, stat] : r.per_source)
    per_source[source.empty() ? "(untagged)" : source] = {
        {"correct", stat.correct},
        {"total", stat.total},
        {"accuracy", stat.total ? static_cast<double>(stat.correct) / stat.total : 0.0}};
  j["per_source"] = per_source;
  return j;
}

static void print_eval(const EvalResult& r) {
  std::cout << "accuracy: " << std::fixed << std::setprecision(4) << r.accuracy << " on " << r.total
            << " examples\n";
  const char* names[3] = {"entailment", "contradiction", "neutral"};
  std::cout << "confusion (rows=gold, cols=pred):\n";
  for (int g = 0; g < 3; ++g) {
    std::cout << "  " << std::left << std::setw(14) << names[g] << std::right;
    for (int p = 0; p < 3; ++p) std::cout << std::setw(7) << r.confusion[g][p];
    std::cout << "\n";
  }
  for (const auto& [source, stat] : r.per_source)
    std::cout << "  " << std::left << std::setw(14) << (source.empty() ? "(untagged)" : source)
              << std::right << stat.correct << "/" << stat.total << "\n";
  std::cout.unsetf(std::ios::fixed);
  std::cout << std::setprecision(6);
}

int cmd_eval(const EvalOptions& opt) {
  return run_guarded([&]() {
    ModelParams params = load_checkpoint(opt.checkpoint_path);
    auto corpus = read_corpus(opt.corpus_path);
    if (corpus.empty()) throw UsageError("corpus is empty: " + opt.corpus_path);
    EvalResult r = evaluate(corpus, params);
    print_eval(r);
    if (!opt.json_out.empty()) {
      ordered_json j;
      j["format_version"] = 1;
      j["checkpoint"] = opt.checkpoint_path;
      j["corpus"] = opt.corpus_path;
      j["mode"] = to_string(params.config.mode);
      j["result"] = eval_to_json(r);
      write_file(opt.json_out, j.dump(2) + "\n");
      std::cout << "report -> " << opt.json_out << "\n";
    }
    return kExitOk;
  });
}

// ---- predict ----

static ordered_json tensor_json(const Tensor& t) {
  return ordered_json{{"shape", t.shape}, {"data", t.data}};
}

int cmd_predict(const PredictOptions& opt) {
  return run_guarded([&]() {
    ModelParams params = load_checkpoint(opt.checkpoint_path);
    NliExample ex;
    ex.premise = tokenize(opt.premise);
    ex.hypothesis = tokenize(opt.hypothesis);
    if (ex.premise.empty()) throw UsageError("premise is empty");
    if (ex.hypothesis.empty()) throw UsageError("hypothesis is empty");
    ForwardResult r = forward(ex, params);
    int best = 0;
    for (int j = 1; j < kNumLabels; ++j)
      if (r.probs[j] > r.probs[best]) best = j;

    ordered_json j;
    j["format_version"] = 1;
    j["label"] = to_string(static_cast<Label>(best));
    j["probs"] = {{"entailment", r.probs[0]},
                  {"contradiction", r.probs[1]},
                  {"neutral", r.probs[2]}};
    j["mode"] = to_string(params.config.mode);
    j["premise_tokens"] = ex.premise;
    j["hypothesis_tokens"] = ex.hypothesis;
    if (opt.explain)
      j["matrices"] = {{"e", tensor_json(r.attn.e)},
                       {"sym", tensor_json(r.attn.sym)},
                       {"lambda", tensor_json(r.attn.lambda)},
                       {"e_prime", tensor_json(r.attn.e_prime)}};
    if (opt.explain || !opt.json_out.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << to_string(static_cast<Label>(best)) << "  entailment=" << r.probs[0]
                << " contradiction=" << r.probs[1] << " neutral=" << r.probs[2] << "\n";
    }
    if (!opt.json_out.empty()) write_file(opt.json_out, j.dump(2) + "\n");
    return kExitOk;
  });
}

// ---- gradcheck ----

namespace {

Gazetteer synthetic_gazetteer() {
  Gazetteer g;
  g.names = {"kendall", "peyton", "jordan", "casey"};
  g.cities_countries = {"dublin", "shanghai"};
  g.month_words = {"july", "march"};
  g.numeric_words = {"five", "nine"};
  return g;
}

std::vector<NliExample> synthetic_examples() {
  auto mk = [](const char* p, const char* h, Label l) {
    NliExample ex;
    ex.premise = tokenize(p);
    ex.hypothesis = tokenize(h);
    ex.label = l;
    ex.source = "synthetic";
    return ex;
  };
  return {
      mk("Kendall pays 35 dirams in July .", "Peyton pays 62 dirams in March .", Label::Neutral),
      mk("Dublin opened five clinics .", "Dublin opened five clinics .", Label::Entailment),
      mk("Jordan visited Shanghai on 7/16/1969 .", "Casey visited Dublin on nine days .",
         Label::Contradiction),
  };
}

double mean_loss_on_tape(GradTape& tape, const ModelParams& params,
                         const std::vector<NliExample>& examples, ParamIds* out_ids = nullptr) {
  ParamIds ids = stage_params(tape, params);
  if (out_ids) *out_ids = ids;
  GradTape::Id total = -1;
  for (const auto& ex : examples) {
    TapeForward tf = forward_on_tape(tape, ids, params, ex);
    GradTape::Id l = loss_on_tape(tape, tf.probs, ex.label);
    total = total < 0 ? l : tape.add(total, l);
  }
  total = tape.affine(total, 1.0 / static_cast<double>(examples.size()), 0.0);
  tape.backward(total);
  return tape.value(total).at(0, 0);
}

ModelParams gradcheck_params(AttentionMode mode, uint64_t seed) {
  ModelConfig cfg;
  cfg.mode = mode;
  cfg.embed_dim = 6;
  cfg.transform_dim = 6;
  cfg.compare_dim = 6;
  cfg.hidden_dim = 6;
  cfg.seed = seed;
  auto examples = synthetic_examples();
  ModelParams params = init_params(cfg, Vocabulary::build(examples), synthetic_gazetteer());
  // Gate weights away from the lambda-layer kinks at z=0 and z=1.
  Rng rng(seed * 2654435761ULL + 17);
  for (auto& v : params.lambda.w.data) v = 0.2 + 0.6 * rng.real();
  return params;
}

}  // namespace

std::vector<GradcheckRow> run_gradcheck(uint64_t seed, double eps) {
  std::vector<GradcheckRow> rows;
  const auto examples = synthetic_examples();
  for (AttentionMode mode : {AttentionMode::Baseline, AttentionMode::Lambda}) {
    // Advance the seed past configurations that evaluate a LeakyReLU too
    // close to its kink; central differences are invalid there.
    ModelParams params = gradcheck_params(mode, seed);
    uint64_t attempt = seed;
    for (int tries = 0; tries < 64; ++tries) {
      GradTape probe;
      mean_loss_on_tape(probe, params, examples);
      if (probe.min_abs_leaky_input() > 10.0 * eps) break;
      attempt += 1000003;
      params = gradcheck_params(mode, attempt);
    }

    GradTape tape;
    ParamIds staged{};
    mean_loss_on_tape(tape, params, examples, &staged);

    auto groups = param_groups(params);
    const GradTape::Id group_ids[] = {staged.embeddings,  staged.transform_w, staged.transform_b,
                                      staged.compare_w,   staged.compare_b,   staged.aggregate_w,
                                      staged.aggregate_b, staged.classifier_w, staged.classifier_b,
                                      staged.lambda_w};
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      const Tensor analytic = tape.grad(group_ids[gi]);
      Tensor* slot = groups[gi].second;
      const Tensor saved = *slot;
      auto f = [&](const std::vector<Tensor>& ps) {
        *slot = ps[0];
        GradTape t;
        const double value = mean_loss_on_tape(t, params, examples);
        *slot = saved;
        return value;
      };
      GradcheckRow row;
      row.mode = to_string(mode);
      row.group = groups[gi].first;
      row.max_rel_err = grad_check(f, {saved}, {analytic}, eps);
      rows.push_back(row);
    }
  }
  return rows;
}

int cmd_gradcheck(const GradcheckOptions& opt) {
  return run_guarded([&]() {
    const uint64_t seed = resolve_seed(opt.seed_flag, 1);
    auto rows = run_gradcheck(seed, opt.eps);
    bool ok = true;
    for (const auto& row : rows) {
      std::cout << "mode=" << row.mode << " group=" << std::left << std::setw(13) << row.group
                << std::right << " max_rel_err=" << std::scientific << std::setprecision(3)
                << row.max_rel_err << std::defaultfloat << "\n";
      ok = ok && row.max_rel_err < opt.threshold;
    }
    if (!ok) {
      std::cerr << "gradient check failed (threshold " << opt.threshold << ")\n";
      return kExitNumeric;
    }
    std::cout << "all parameter groups below " << opt.threshold << "\n";
    return kExitOk;
  });
}

// ---- experiment ----

namespace {

struct ExperimentRowSpec {
  std::string name;
  std::vector<std::string> train_paths;
  std::string dev_path;
  std::string test_path;
  ModelConfig config;
};

ModelConfig config_from_json(ModelConfig base, const json& j) {
  if (j.contains("mode")) base.mode = mode_from_string(j.at("mode").get<std::string>());
  base.embed_dim = j.value("embed_dim", base.embed_dim);
  base.transform_dim = j.value("transform_dim", base.transform_dim);
  base.compare_dim = j.value("compare_dim", base.compare_dim);
  base.hidden_dim = j.value("hidden_dim", base.hidden_dim);
  base.w = j.value("w", base.w);
  base.slope = j.value("slope", base.slope);
  base.pos_scale = j.value("pos_scale", base.pos_scale);
  base.lr = j.value("lr", base.lr);
  base.epochs = j.value("epochs", base.epochs);
  base.batch = j.value("batch", base.batch);
  base.seed = j.value("seed", base.seed);
  return base;
}

std::string config_key(const ModelConfig& c) {
  std::ostringstream out;
  out << to_string(c.mode) << "|" << c.embed_dim << "|" << c.transform_dim << "|" << c.compare_dim
      << "|" << c.hidden_dim << "|" << std::setprecision(17) << c.w << "|" << c.slope << "|"
      << c.pos_scale << "|" << c.lr << "|" << c.epochs << "|" << c.batch << "|" << c.seed;
  return out.str();
}

}  // namespace

int cmd_experiment(const ExperimentOptions& opt) {
  return run_guarded([&]() {
    json spec;
    try {
      spec = json::parse(read_file(opt.spec_path));
    } catch (const std::exception& e) {
      throw DataError("bad experiment spec " + opt.spec_path + ": " + e.what());
    }
    const std::string lexicon_dir = spec.value("lexicon_dir", std::string("data/lexicons"));
    ModelConfig defaults;
    if (spec.contains("defaults")) defaults = config_from_json(defaults, spec.at("defaults"));

    std::vector<ExperimentRowSpec> rows;
    for (const auto& rj : spec.at("rows")) {
      ExperimentRowSpec row;
      row.train_paths = rj.at("train").get<std::vector<std::string>>();
      row.dev_path = rj.value("dev", std::string());
      row.test_path = rj.at("test").get<std::string>();
      row.config = config_from_json(defaults, rj);
      if (rj.contains("overrides")) row.config = config_from_json(row.config, rj.at("overrides"));
      row.name = rj.value("name", to_string(row.config.mode));
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("experiment spec has no rows");

    fs::create_directories(opt.out_dir);
    Gazetteer gaz = load_gazetteer(lexicon_dir);

    // One training per unique (train corpora, dev, config); rows reuse it.
    std::map<uint64_t, std::pair<ModelParams, double>> trained;  // key -> (params, train_acc)
    std::vector<ExperimentRowResult> results;

    for (const auto& row : rows) {
      ExperimentRowResult res;
      res.name = row.name;
      res.mode = to_string(row.config.mode);
      res.seed = row.config.seed;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        uint64_t key = fnv1a64(config_key(row.config));
        for (const auto& p : row.train_paths) key = hash_file(p, key);
        if (!row.dev_path.empty()) key = hash_file(row.dev_path, key);

        auto it = trained.find(key);
        if (it == trained.end()) {
          auto train_set = read_corpora(row.train_paths);
          std::vector<NliExample> dev_set;
          if (!row.dev_path.empty()) dev_set = read_corpus(row.dev_path);
          TrainResult tr = train(train_set, dev_set, row.config, gaz);
          const double train_acc = evaluate(train_set, tr.params).accuracy;
          const std::string ckpt =
              (fs::path(opt.out_dir) / ("ckpt_" + std::to_string(key) + ".json")).string();
          save_checkpoint(ckpt, tr.params);
          it = trained.emplace(key, std::make_pair(std::move(tr.params), train_acc)).first;
        }
        res.train_acc = it->second.second;
        res.test_eval = evaluate(read_corpus(row.test_path), it->second.first);
        res.test_acc = res.test_eval.accuracy;
      } catch (const std::exception& e) {
        res.error = e.what();
      }
      res.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      results.push_back(std::move(res));
    }

    // Text table plus machine-readable report.
    std::cout << std::left << std::setw(28) << "row" << std::setw(10) << "mode" << std::right
              << std::setw(10) << "train_acc" << std::setw(10) << "test_acc" << std::setw(8)
              << "seed" << std::setw(9) << "sec" << "\n";
    ordered_json jrows = ordered_json::array();
    for (const auto& r : results) {
      std::cout << std::left << std::setw(28) << r.name << std::setw(10) << r.mode << std::right;
      if (r.error.empty())
        std::cout << std::setw(10) << std::fixed << std::setprecision(4) << r.train_acc
                  << std::setw(10) << r.test_acc << std::defaultfloat;
      else
        std::cout << std::setw(20) << "FAILED";
      std::cout << std::setw(8) << r.seed << std::setw(9) << std::fixed << std::setprecision(1)
                << r.wall_seconds << std::defaultfloat << "\n";
      ordered_json jr;
      jr["name"] = r.name;
      jr["mode"] = r.mode;
      jr["seed"] = r.seed;
      jr["wall_seconds"] = r.wall_seconds;
      if (r.error.empty()) {
        jr["train_acc"] = r.train_acc;
        jr["test_acc"] = r.test_acc;
        jr["test_eval"] = eval_to_json(r.test_eval);
      } else {
        jr["error"] = r.error;
      }
      jrows.push_back(std::move(jr));
    }
    ordered_json report;
    report["format_version"] = 1;
    report["rows"] = jrows;
    const std::string report_path = (fs::path(opt.out_dir) / "report.json").string();
    write_file(report_path, report.dump(2) + "\n");
    std::cout << "report -> " << report_path << "\n";

    for (const auto& r : results)
      if (!r.error.empty()) {
        std::cerr << "row '" << r.name << "' failed: " << r.error << "\n";
        return kExitData;
      }
    return kExitOk;
  });
}

}  // namespace nli::cli
