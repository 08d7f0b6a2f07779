#include "nli/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "nli/errors.hpp"
#include "nli/text.hpp"

namespace nli {

std::string to_string(AttentionMode m) {
  return m == AttentionMode::Baseline ? "baseline" : "lambda";
}

AttentionMode mode_from_string(const std::string& s) {
  if (s == "baseline") return AttentionMode::Baseline;
  if (s == "lambda") return AttentionMode::Lambda;
  throw UsageError("unknown mode: '" + s + "' (expected baseline|lambda)");
}

static const char* kUnkToken = "<unk>";

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens_in_order) {
  Vocabulary v;
  v.tokens = std::move(tokens_in_order);
  for (size_t i = 0; i < v.tokens.size(); ++i) v.index.emplace(v.tokens[i], static_cast<int>(i));
  return v;
}

Vocabulary Vocabulary::build(const std::vector<NliExample>& examples) {
  std::set<std::string> folded;
  for (const auto& ex : examples) {
    for (const auto& t : ex.premise) folded.insert(case_fold(t));
    for (const auto& t : ex.hypothesis) folded.insert(case_fold(t));
  }
  folded.erase(kUnkToken);
  std::vector<std::string> tokens;
  tokens.reserve(folded.size() + 1);
  tokens.emplace_back(kUnkToken);
  tokens.insert(tokens.end(), folded.begin(), folded.end());
  return from_tokens(std::move(tokens));
}

int Vocabulary::lookup(const std::string& token) const {
  auto it = index.find(case_fold(token));
  return it == index.end() ? 0 : it->second;
}

static void fill_uniform(Tensor& t, Rng& rng, double half_range) {
  for (auto& v : t.data) v = (rng.real() * 2.0 - 1.0) * half_range;
}

ModelParams init_params(const ModelConfig& cfg, Vocabulary vocab, Gazetteer gazetteer) {
  ModelParams p;
  p.config = cfg;
  p.vocab = std::move(vocab);
  p.gazetteer = std::move(gazetteer);
  p.sym.w = cfg.w;
  Rng rng(cfg.seed);
  p.embeddings = Tensor(p.vocab.size(), cfg.embed_dim);
  fill_uniform(p.embeddings, rng, 0.1);
  p.transform_w = Tensor(cfg.embed_dim, cfg.transform_dim);
  fill_uniform(p.transform_w, rng, 0.1);
  p.transform_b = Tensor(1, cfg.transform_dim);
  p.compare_w = Tensor(2 * cfg.transform_dim, cfg.compare_dim);
  fill_uniform(p.compare_w, rng, 0.1);
  p.compare_b = Tensor(1, cfg.compare_dim);
  p.aggregate_w = Tensor(2 * cfg.compare_dim, cfg.hidden_dim);
  fill_uniform(p.aggregate_w, rng, 0.1);
  p.aggregate_b = Tensor(1, cfg.hidden_dim);
  p.classifier_w = Tensor(cfg.hidden_dim, kNumLabels);
  fill_uniform(p.classifier_w, rng, 0.1);
  p.classifier_b = Tensor(1, kNumLabels);
  p.lambda.w = Tensor::full(1, kPairFeatureDim, 1.0);
  return p;
}

std::vector<std::pair<std::string, Tensor*>> param_groups(ModelParams& p) {
  std::vector<std::pair<std::string, Tensor*>> groups = {
      {"embeddings", &p.embeddings},   {"transform_w", &p.transform_w},
      {"transform_b", &p.transform_b}, {"compare_w", &p.compare_w},
      {"compare_b", &p.compare_b},     {"aggregate_w", &p.aggregate_w},
      {"aggregate_b", &p.aggregate_b}, {"classifier_w", &p.classifier_w},
      {"classifier_b", &p.classifier_b}};
  if (p.config.mode == AttentionMode::Lambda) groups.emplace_back("lambda_w", &p.lambda.w);
  return groups;
}

Tensor positional_encoding(int len, int dim, double amplitude) {
  Tensor pe(len, dim);
  for (int pos = 0; pos < len; ++pos)
    for (int k = 0; k < dim; ++k) {
      const double rate = std::pow(10000.0, -static_cast<double>(k - (k % 2)) / dim);
      pe.at(pos, k) = amplitude * ((k % 2 == 0) ? std::sin(pos * rate) : std::cos(pos * rate));
    }
  return pe;
}

ParamIds stage_params(GradTape& tape, const ModelParams& p) {
  ParamIds ids;
  ids.embeddings = tape.leaf(p.embeddings);
  ids.transform_w = tape.leaf(p.transform_w);
  ids.transform_b = tape.leaf(p.transform_b);
  ids.compare_w = tape.leaf(p.compare_w);
  ids.compare_b = tape.leaf(p.compare_b);
  ids.aggregate_w = tape.leaf(p.aggregate_w);
  ids.aggregate_b = tape.leaf(p.aggregate_b);
  ids.classifier_w = tape.leaf(p.classifier_w);
  ids.classifier_b = tape.leaf(p.classifier_b);
  ids.lambda_w = tape.leaf(p.lambda.w);
  return ids;
}

static std::vector<int> lookup_ids(const Vocabulary& v, const std::vector<std::string>& tokens) {
  std::vector<int> ids(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) ids[i] = v.lookup(tokens[i]);
  return ids;
}

static GradTape::Id transform_sentence(GradTape& tape, const ParamIds& ids, const ModelParams& p,
                                       const std::vector<std::string>& tokens) {
  GradTape::Id emb = tape.gather_rows(ids.embeddings, lookup_ids(p.vocab, tokens));
  if (p.config.pos_scale != 0.0) {
    const Tensor pe = positional_encoding(static_cast<int>(tokens.size()), p.config.embed_dim,
                                          p.config.pos_scale);
    emb = tape.add(emb, tape.leaf(pe));
  }
  GradTape::Id lin = tape.add_row(tape.matmul(emb, ids.transform_w), ids.transform_b);
  return tape.leaky_relu(lin, p.config.slope);
}

Tensor embed_and_transform(const std::vector<std::string>& tokens, const ModelParams& p) {
  if (tokens.empty()) throw DataError("embed_and_transform: empty sentence");
  GradTape tape;
  ParamIds ids = stage_params(tape, p);
  return tape.value(transform_sentence(tape, ids, p, tokens));
}

TapeForward forward_on_tape(GradTape& tape, const ParamIds& ids, const ModelParams& p,
                            const NliExample& ex) {
  if (ex.premise.empty() || ex.hypothesis.empty())
    throw DataError("forward: empty sentence in example");
  const double slope = p.config.slope;

  GradTape::Id a_bar = transform_sentence(tape, ids, p, ex.premise);
  GradTape::Id b_bar = transform_sentence(tape, ids, p, ex.hypothesis);
  GradTape::Id e = tape.matmul(a_bar, tape.transpose(b_bar));

  TapeForward out;
  GradTape::Id e_prime = e;
  if (p.config.mode == AttentionMode::Lambda) {
    GradTape::Id sym = tape.leaf(symbolic_similarity(ex.premise, ex.hypothesis, p.sym));
    const Tensor idx = pair_index_matrix(ex.premise, ex.hypothesis, p.gazetteer);
    GradTape::Id z = tape.gather_cells(ids.lambda_w, idx);
    // lambda = 1 - LeakyReLU(1 - LeakyReLU(z))
    GradTape::Id lam =
        tape.affine(tape.leaky_relu(tape.affine(tape.leaky_relu(z, slope), -1.0, 1.0), slope),
                    -1.0, 1.0);
    e_prime = tape.add(tape.mul(lam, e), tape.mul(tape.affine(lam, -1.0, 1.0), sym));
    out.attn.sym = tape.value(sym);
    out.attn.lambda = tape.value(lam);
  } else {
    const Tensor& ev = tape.value(e);
    out.attn.sym = Tensor(ev.rows(), ev.cols());
    out.attn.lambda = Tensor::full(ev.rows(), ev.cols(), 1.0);
  }
  out.attn.e = tape.value(e);
  out.attn.e_prime = tape.value(e_prime);

  // Premise->hypothesis alignment normalizes rows; the reverse direction
  // normalizes columns (via the transpose).
  GradTape::Id beta = tape.matmul(tape.softmax_rows(e_prime), b_bar);
  GradTape::Id alpha = tape.matmul(tape.softmax_rows(tape.transpose(e_prime)), a_bar);

  GradTape::Id v1 = tape.sum_rows(tape.leaky_relu(
      tape.add_row(tape.matmul(tape.concat_cols(a_bar, beta), ids.compare_w), ids.compare_b),
      slope));
  GradTape::Id v2 = tape.sum_rows(tape.leaky_relu(
      tape.add_row(tape.matmul(tape.concat_cols(b_bar, alpha), ids.compare_w), ids.compare_b),
      slope));

  GradTape::Id hidden = tape.leaky_relu(
      tape.add_row(tape.matmul(tape.concat_cols(v1, v2), ids.aggregate_w), ids.aggregate_b),
      slope);
  GradTape::Id logits = tape.add_row(tape.matmul(hidden, ids.classifier_w), ids.classifier_b);
  out.probs = tape.softmax_rows(logits);
  return out;
}

GradTape::Id loss_on_tape(GradTape& tape, GradTape::Id probs, Label gold) {
  GradTape::Id picked = tape.pick(probs, 0, static_cast<int>(gold));
  return tape.affine(tape.log_clamped(picked, 1e-12), -1.0, 0.0);
}

ForwardResult forward(const NliExample& ex, const ModelParams& p) {
  GradTape tape;
  ParamIds ids = stage_params(tape, p);
  TapeForward tf = forward_on_tape(tape, ids, p, ex);
  ForwardResult r;
  const Tensor& probs = tape.value(tf.probs);
  for (int j = 0; j < kNumLabels; ++j) r.probs[j] = probs.at(0, j);
  r.attn = std::move(tf.attn);
  return r;
}

double loss(const std::array<double, kNumLabels>& probs, Label gold) {
  return -std::log(std::max(probs[static_cast<int>(gold)], 1e-12));
}

static int argmax_label(const std::array<double, kNumLabels>& probs) {
  int best = 0;
  for (int j = 1; j < kNumLabels; ++j)
    if (probs[j] > probs[best]) best = j;
  return best;
}

static std::vector<NliExample> canonical_order(std::vector<NliExample> set) {
  std::sort(set.begin(), set.end(), [](const NliExample& a, const NliExample& b) {
    return std::tie(a.premise, a.hypothesis, a.label, a.source) <
           std::tie(b.premise, b.hypothesis, b.label, b.source);
  });
  return set;
}

TrainResult train(const std::vector<NliExample>& train_set,
                  const std::vector<NliExample>& dev_set, const ModelConfig& cfg,
                  const Gazetteer& gazetteer) {
  if (train_set.empty()) throw DataError("train: empty training set");
  const std::vector<NliExample> examples = canonical_order(train_set);

  ModelParams params = init_params(cfg, Vocabulary::build(examples), gazetteer);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);  // separate stream from init

  TrainResult result;
  result.params = params;
  double best_dev = -1.0;

  std::vector<size_t> order(examples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    rng.shuffle(order);
    size_t correct = 0;
    double loss_sum = 0.0;
    for (size_t start = 0; start < order.size(); start += cfg.batch) {
      const size_t stop = std::min(order.size(), start + cfg.batch);
      GradTape tape;
      ParamIds ids = stage_params(tape, params);
      GradTape::Id batch_loss = -1;
      for (size_t k = start; k < stop; ++k) {
        const NliExample& ex = examples[order[k]];
        TapeForward tf = forward_on_tape(tape, ids, params, ex);
        const Tensor& pv = tape.value(tf.probs);
        std::array<double, kNumLabels> probs{};
        for (int j = 0; j < kNumLabels; ++j) probs[j] = pv.at(0, j);
        if (argmax_label(probs) == static_cast<int>(ex.label)) ++correct;
        GradTape::Id l = loss_on_tape(tape, tf.probs, ex.label);
        batch_loss = (batch_loss < 0) ? l : tape.add(batch_loss, l);
      }
      batch_loss = tape.affine(batch_loss, 1.0 / static_cast<double>(stop - start), 0.0);
      const double lval = tape.value(batch_loss).at(0, 0);
      if (!std::isfinite(lval))
        throw NumericError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                           std::to_string(start / cfg.batch));
      loss_sum += lval * static_cast<double>(stop - start);
      tape.backward(batch_loss);

      // Same order as param_groups(); lambda_w sits last in both, so the
      // shorter baseline group list stays aligned.
      auto groups = param_groups(params);
      const GradTape::Id group_ids[] = {ids.embeddings,  ids.transform_w,  ids.transform_b,
                                        ids.compare_w,   ids.compare_b,    ids.aggregate_w,
                                        ids.aggregate_b, ids.classifier_w, ids.classifier_b,
                                        ids.lambda_w};
      for (size_t gi = 0; gi < groups.size(); ++gi) {
        const Tensor& grad = tape.grad(group_ids[gi]);
        Tensor& value = *groups[gi].second;
        for (size_t i = 0; i < value.size(); ++i) value.data[i] -= cfg.lr * grad.data[i];
      }
    }

    EpochMetrics m;
    m.epoch = epoch;
    m.train_acc = static_cast<double>(correct) / static_cast<double>(examples.size());
    m.mean_loss = loss_sum / static_cast<double>(examples.size());
    if (!dev_set.empty()) {
      m.dev_acc = evaluate(dev_set, params).accuracy;
      if (m.dev_acc > best_dev) {
        best_dev = m.dev_acc;
        result.params = params;
        result.best_epoch = epoch;
      }
    } else {
      result.params = params;
      result.best_epoch = epoch;
    }
    result.metrics.push_back(m);
  }
  return result;
}

EvalResult evaluate(const std::vector<NliExample>& dataset, const ModelParams& p) {
  if (dataset.empty()) throw DataError("evaluate: empty dataset");
  EvalResult r;
  r.total = static_cast<int>(dataset.size());
  int correct = 0;
  for (const auto& ex : dataset) {
    const int pred = argmax_label(forward(ex, p).probs);
    const int gold = static_cast<int>(ex.label);
    r.confusion[gold][pred] += 1;
    auto& stat = r.per_source[ex.source];
    stat.total += 1;
    if (pred == gold) {
      ++correct;
      stat.correct += 1;
    }
  }
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
  return r;
}

// ---- checkpoint ----

static nlohmann::json tensor_to_json(const Tensor& t) {
  return nlohmann::json{{"shape", t.shape}, {"data", t.data}};
}

static Tensor tensor_from_json(const nlohmann::json& j) {
  Tensor t;
  t.shape = j.at("shape").get<std::vector<int>>();
  t.data = j.at("data").get<std::vector<double>>();
  if (t.shape.size() != 2 ||
      t.data.size() != static_cast<size_t>(t.shape[0]) * static_cast<size_t>(t.shape[1]))
    throw DataError("checkpoint tensor: shape/data mismatch");
  return t;
}

static nlohmann::json word_set_to_json(const std::set<std::string>& s) {
  return nlohmann::json(std::vector<std::string>(s.begin(), s.end()));
}

void save_checkpoint(const std::string& path, const ModelParams& p) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["config"] = {{"mode", to_string(p.config.mode)},
                 {"embed_dim", p.config.embed_dim},
                 {"transform_dim", p.config.transform_dim},
                 {"compare_dim", p.config.compare_dim},
                 {"hidden_dim", p.config.hidden_dim},
                 {"w", p.config.w},
                 {"slope", p.config.slope},
                 {"pos_scale", p.config.pos_scale},
                 {"lr", p.config.lr},
                 {"epochs", p.config.epochs},
                 {"batch", p.config.batch},
                 {"seed", p.config.seed}};
  j["vocab"] = p.vocab.tokens;
  j["gazetteer"] = {{"names", word_set_to_json(p.gazetteer.names)},
                    {"cities_countries", word_set_to_json(p.gazetteer.cities_countries)},
                    {"months", word_set_to_json(p.gazetteer.month_words)},
                    {"numeric_words", word_set_to_json(p.gazetteer.numeric_words)}};
  nlohmann::ordered_json arrays;
  arrays["embeddings"] = tensor_to_json(p.embeddings);
  arrays["transform_w"] = tensor_to_json(p.transform_w);
  arrays["transform_b"] = tensor_to_json(p.transform_b);
  arrays["compare_w"] = tensor_to_json(p.compare_w);
  arrays["compare_b"] = tensor_to_json(p.compare_b);
  arrays["aggregate_w"] = tensor_to_json(p.aggregate_w);
  arrays["aggregate_b"] = tensor_to_json(p.aggregate_b);
  arrays["classifier_w"] = tensor_to_json(p.classifier_w);
  arrays["classifier_b"] = tensor_to_json(p.classifier_b);
  arrays["lambda_w"] = tensor_to_json(p.lambda.w);
  write_file(path, j.dump(2) + "\n");
}

static std::set<std::string> word_set_from_json(const nlohmann::json& j) {
  auto v = j.get<std::vector<std::string>>();
  return {v.begin(), v.end()};
}

ModelParams load_checkpoint(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad checkpoint " + path + ": " + e.what());
  }
  if (j.value("format_version", 0) != 1)
    throw DataError("unsupported checkpoint format_version in " + path);
  ModelParams p;
  const auto& c = j.at("config");
  p.config.mode = mode_from_string(c.at("mode").get<std::string>());
  p.config.embed_dim = c.at("embed_dim").get<int>();
  p.config.transform_dim = c.at("transform_dim").get<int>();
  p.config.compare_dim = c.at("compare_dim").get<int>();
  p.config.hidden_dim = c.at("hidden_dim").get<int>();
  p.config.w = c.at("w").get<double>();
  p.config.slope = c.at("slope").get<double>();
  p.config.pos_scale = c.at("pos_scale").get<double>();
  p.config.lr = c.at("lr").get<double>();
  p.config.epochs = c.at("epochs").get<int>();
  p.config.batch = c.at("batch").get<int>();
  p.config.seed = c.at("seed").get<uint64_t>();
  p.sym.w = p.config.w;
  p.vocab = Vocabulary::from_tokens(j.at("vocab").get<std::vector<std::string>>());
  const auto& g = j.at("gazetteer");
  p.gazetteer.names = word_set_from_json(g.at("names"));
  p.gazetteer.cities_countries = word_set_from_json(g.at("cities_countries"));
  p.gazetteer.month_words = word_set_from_json(g.at("months"));
  p.gazetteer.numeric_words = word_set_from_json(g.at("numeric_words"));
  const auto& a = j.at("arrays");
  p.embeddings = tensor_from_json(a.at("embeddings"));
  p.transform_w = tensor_from_json(a.at("transform_w"));
  p.transform_b = tensor_from_json(a.at("transform_b"));
  p.compare_w = tensor_from_json(a.at("compare_w"));
  p.compare_b = tensor_from_json(a.at("compare_b"));
  p.aggregate_w = tensor_from_json(a.at("aggregate_w"));
  p.aggregate_b = tensor_from_json(a.at("aggregate_b"));
  p.classifier_w = tensor_from_json(a.at("classifier_w"));
  p.classifier_b = tensor_from_json(a.at("classifier_b"));
  p.lambda.w = tensor_from_json(a.at("lambda_w"));
  return p;
}

}  // namespace nli
