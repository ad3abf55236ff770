#include "cryptosent/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cryptosent/csv.hpp"
#include "cryptosent/error.hpp"
#include "cryptosent/preprocess.hpp"
#include "cryptosent/rng.hpp"

namespace cryptosent {

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::negative: return "negative";
    case SentimentLabel::neutral: return "neutral";
    case SentimentLabel::positive: return "positive";
  }
  return "neutral";
}

std::optional<SentimentLabel> parse_sentiment_label(std::string_view s) {
  if (s == "negative") return SentimentLabel::negative;
  if (s == "neutral") return SentimentLabel::neutral;
  if (s == "positive") return SentimentLabel::positive;
  return std::nullopt;
}

std::pair<std::size_t, double> hash_token(std::string_view token, std::size_t dim) {
  std::uint64_t h = fnv1a64(token);
  double sign = (h >> 63) ? -1.0 : 1.0;
  return {static_cast<std::size_t>(h % dim), sign};
}

std::array<double, 3> softmax3(const std::array<double, 3>& logits) {
  double m = std::max({logits[0], logits[1], logits[2]});
  std::array<double, 3> e{std::exp(logits[0] - m), std::exp(logits[1] - m),
                          std::exp(logits[2] - m)};
  double sum = e[0] + e[1] + e[2];
  return {e[0] / sum, e[1] / sum, e[2] / sum};
}

SentimentClassifier::SentimentClassifier(std::size_t hash_dim)
    : hash_dim_(hash_dim), weights_(3 * hash_dim, 0.0) {}

namespace {

using SparseVec = std::vector<std::pair<std::size_t, double>>;

SparseVec featurize(std::string_view text, std::size_t dim) {
  std::unordered_map<std::size_t, double> acc;
  for (std::string_view token : split_tokens(text)) {
    auto [idx, sign] = hash_token(token, dim);
    acc[idx] += sign;
  }
  SparseVec vec(acc.begin(), acc.end());
  std::sort(vec.begin(), vec.end());  // deterministic iteration order
  return vec;
}

std::array<double, 3> logits_of(const std::vector<double>& weights,
                                const std::array<double, 3>& bias, std::size_t dim,
                                const SparseVec& x) {
  std::array<double, 3> z = bias;
  for (const auto& [idx, val] : x) {
    for (int c = 0; c < 3; ++c) z[c] += weights[c * dim + idx] * val;
  }
  return z;
}

}  // namespace

std::array<double, 3> SentimentClassifier::probabilities(std::string_view clean_text) const {
  SparseVec x = featurize(clean_text, hash_dim_);
  if (x.empty()) return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return softmax3(logits_of(weights_, bias_, hash_dim_, x));
}

std::pair<SentimentClassifier, ClassifierReport> train_classifier(
    const std::vector<LabeledText>& corpus, const ClassifierConfig& config) {
  std::array<std::size_t, 3> counts{};
  for (const auto& ex : corpus) ++counts[static_cast<int>(ex.label)];
  if (counts[0] == 0 || counts[1] == 0 || counts[2] == 0)
    throw DataError("degenerate corpus: need at least one example of each class");
  if (config.holdout_fraction <= 0.0 || config.holdout_fraction >= 1.0)
    throw ConfigError("holdout_fraction must lie in (0,1)");

  const std::size_t n = corpus.size();
  const std::size_t dim = config.hash_dim;

  std::vector<SparseVec> features(n);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    features[i] = featurize(corpus[i].text, dim);
    labels[i] = static_cast<int>(corpus[i].label);
  }

  SeededRng rng(config.seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle_indices(order);

  std::size_t holdout =
      std::clamp<std::size_t>(static_cast<std::size_t>(config.holdout_fraction * double(n)),
                              1, n - 1);
  std::vector<std::size_t> test_idx(order.begin(), order.begin() + holdout);
  std::vector<std::size_t> train_idx(order.begin() + holdout, order.end());

  SentimentClassifier model(dim);
  std::vector<double>& w = model.weights();
  std::array<double, 3>& b = model.bias();

  auto mean_loss = [&](const std::vector<std::size_t>& idx) {
    double loss = 0.0;
    for (std::size_t i : idx) {
      auto p = softmax3(logits_of(w, b, dim, features[i]));
      loss += -std::log(std::max(p[labels[i]], 1e-300));
    }
    return idx.empty() ? 0.0 : loss / double(idx.size());
  };
  auto accuracy = [&](const std::vector<std::size_t>& idx) {
    std::size_t correct = 0;
    for (std::size_t i : idx) {
      auto p = softmax3(logits_of(w, b, dim, features[i]));
      int arg = 0;
      for (int c = 1; c < 3; ++c)
        if (p[c] > p[arg]) arg = c;
      if (arg == labels[i]) ++correct;
    }
    return idx.empty() ? 0.0 : double(correct) / double(idx.size());
  };

  ClassifierReport report;
  report.class_counts = counts;
  report.loss_curve.push_back(mean_loss(train_idx));

  std::vector<std::size_t> epoch_order = train_idx;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle_indices(epoch_order);
    for (std::size_t start = 0; start < epoch_order.size(); start += config.batch_size) {
      std::size_t end = std::min(start + config.batch_size, epoch_order.size());
      double inv_batch = 1.0 / double(end - start);

      // L2 decay on all coordinates, then the data gradient on the support.
      double decay = 1.0 - config.learning_rate * config.l2;
      for (double& v : w) v *= decay;

      for (std::size_t k = start; k < end; ++k) {
        std::size_t i = epoch_order[k];
        auto p = softmax3(logits_of(w, b, dim, features[i]));
        std::array<double, 3> grad{p[0], p[1], p[2]};
        grad[labels[i]] -= 1.0;
        for (int c = 0; c < 3; ++c) {
          double step = config.learning_rate * inv_batch * grad[c];
          for (const auto& [idx, val] : features[i]) w[c * dim + idx] -= step * val;
          b[c] -= step;
        }
      }
    }
    double loss = mean_loss(train_idx);
    if (!std::isfinite(loss))
      throw NumericError("classifier training diverged at epoch " + std::to_string(epoch + 1));
    report.loss_curve.push_back(loss);
  }

  report.train_accuracy = accuracy(train_idx);
  report.holdout_accuracy = accuracy(test_idx);
  model.set_trained(true);
  return {std::move(model), std::move(report)};
}

SentimentResult score_text(const SentimentClassifier& model, std::uint64_t tweet_id,
                           std::string_view clean_text) {
  auto p = model.probabilities(clean_text);
  int arg = 0;
  for (int c = 1; c < 3; ++c)
    if (p[c] > p[arg]) arg = c;  // strict: ties resolve to the lower class
  return SentimentResult{tweet_id, static_cast<SentimentLabel>(arg), p[arg]};
}

ScoreImport import_scores_text(std::string_view content) {
  CsvTable table = parse_csv(content);
  ScoreImport out;
  auto id_col = table.column("tweet_id");
  auto label_col = table.column("label");
  auto score_col = table.column("score");
  if (!id_col || !label_col || !score_col)
    throw DataError("score CSV must have header tweet_id,label,score");

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::size_t line = r + 2;  // header is line 1
    const auto& row = table.rows[r];
    if (row.size() < table.header.size()) {
      out.rejected.push_back("line " + std::to_string(line) + ": too few fields");
      continue;
    }
    auto id = parse_int(row[*id_col]);
    if (!id || *id < 0) {
      out.rejected.push_back("line " + std::to_string(line) + ": bad tweet_id");
      continue;
    }
    auto label = parse_sentiment_label(row[*label_col]);
    if (!label) {
      out.rejected.push_back("line " + std::to_string(line) + ": unknown label '" +
                             row[*label_col] + "'");
      continue;
    }
    auto score = parse_double(row[*score_col]);
    if (!score || *score < 0.0 || *score > 1.0) {
      out.rejected.push_back("line " + std::to_string(line) + ": score outside [0,1]");
      continue;
    }
    out.results.push_back(
        SentimentResult{static_cast<std::uint64_t>(*id), *label, *score});
  }
  return out;
}

ScoreImport import_scores(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open score file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return import_scores_text(ss.str());
}

std::string scores_to_csv(const std::vector<SentimentResult>& results) {
  std::string out = "tweet_id,label,score\n";
  for (const auto& r : results) {
    out += std::to_string(r.tweet_id);
    out.push_back(',');
    out += to_string(r.label);
    out.push_back(',');
    out += format_double(r.score);
    out.push_back('\n');
  }
  return out;
}

std::pair<std::vector<SentimentResult>, std::size_t> filter_scores_to_tweets(
    const std::vector<SentimentResult>& results,
    const std::vector<std::uint64_t>& ids) {
  std::unordered_set<std::uint64_t> keep(ids.begin(), ids.end());
  std::vector<SentimentResult> kept;
  kept.reserve(results.size());
  std::size_t dropped = 0;
  for (const auto& r : results) {
    if (keep.count(r.tweet_id)) {
      kept.push_back(r);
    } else {
      ++dropped;
    }
  }
  return {std::move(kept), dropped};
}

std::vector<LabeledText> load_labeled_corpus(const std::string& path) {
  CsvTable table = read_csv(path);
  auto text_col = table.column("text");
  auto label_col = table.column("label");
  if (!text_col || !label_col) throw DataError("corpus CSV must have header text,label");
  std::vector<LabeledText> corpus;
  corpus.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() < table.header.size()) continue;
    auto label = parse_sentiment_label(row[*label_col]);
    if (!label) throw DataError("corpus line " + std::to_string(r + 2) + ": unknown label");
    corpus.push_back(LabeledText{row[*text_col], *label});
  }
  return corpus;
}

std::string corpus_to_csv(const std::vector<LabeledText>& corpus) {
  std::string out = "text,label\n";
  for (const auto& ex : corpus) {
    out += csv_quote(ex.text);
    out.push_back(',');
    out += to_string(ex.label);
    out.push_back('\n');
  }
  return out;
}

double SentimentWeights::weight(SentimentLabel label) const {
  switch (label) {
    case SentimentLabel::negative: return negative;
    case SentimentLabel::neutral: return neutral;
    case SentimentLabel::positive: return positive;
  }
  return 0.0;
}

std::vector<WeightedSentimentPoint> weighted_sentiment_series(
    const std::vector<SentimentResult>& results, const std::vector<JoinedRow>& joined,
    std::int64_t bucket_seconds, const SentimentWeights& weights, bool scale_to_price) {
  if (bucket_seconds < 60) throw ConfigError("bucket must be at least one minute");

  std::unordered_map<std::uint64_t, const JoinedRow*> by_id;
  by_id.reserve(joined.size());
  for (const auto& row : joined) by_id[row.tweet.id] = &row;

  struct Accum {
    double weighted_sum = 0.0;
    double price_sum = 0.0;
    std::size_t count = 0;
  };
  std::map<UtcSeconds, Accum> buckets;
  for (const auto& r : results) {
    auto it = by_id.find(r.tweet_id);
    if (it == by_id.end())
      throw DataError("sentiment result for unknown tweet id " + std::to_string(r.tweet_id));
    const JoinedRow& row = *it->second;
    UtcSeconds bucket = (row.tweet.created_at / bucket_seconds) * bucket_seconds;
    if (row.tweet.created_at < 0 && row.tweet.created_at % bucket_seconds != 0)
      bucket -= bucket_seconds;
    Accum& acc = buckets[bucket];
    acc.weighted_sum += weights.weight(r.label) * r.score;
    acc.price_sum += row.bar.close;
    ++acc.count;
  }

  std::vector<WeightedSentimentPoint> points;
  points.reserve(buckets.size());
  for (const auto& [start, acc] : buckets) {
    WeightedSentimentPoint p;
    p.bucket_start = start;
    p.weighted_score = acc.weighted_sum / double(acc.count);
    p.mean_price = acc.price_sum / double(acc.count);
    p.tweet_count = acc.count;
    points.push_back(p);
  }

  if (scale_to_price && !points.empty()) {
    double smin = points[0].weighted_score, smax = points[0].weighted_score;
    double pmin = points[0].mean_price, pmax = points[0].mean_price;
    for (const auto& p : points) {
      smin = std::min(smin, p.weighted_score);
      smax = std::max(smax, p.weighted_score);
      pmin = std::min(pmin, p.mean_price);
      pmax = std::max(pmax, p.mean_price);
    }
    double srange = smax - smin;
    for (auto& p : points) {
      double unit = srange > 0.0 ? (p.weighted_score - smin) / srange : 0.0;
      p.weighted_score = pmin + unit * (pmax - pmin);
    }
  }
  return points;
}

}  // namespace cryptosent
