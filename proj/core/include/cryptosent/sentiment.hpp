#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cryptosent/types.hpp"

namespace cryptosent {

/// Class order is significant: argmax ties resolve to the lowest value.
enum class SentimentLabel : int { negative = 0, neutral = 1, positive = 2 };

std::string_view to_string(SentimentLabel label);
std::optional<SentimentLabel> parse_sentiment_label(std::string_view s);

struct SentimentResult {
  std::uint64_t tweet_id = 0;
  SentimentLabel label = SentimentLabel::neutral;
  double score = 0.0;  // in [0, 1]

  bool operator==(const SentimentResult&) const = default;
};

struct LabeledText {
  std::string text;
  SentimentLabel label = SentimentLabel::neutral;
};

struct ClassifierConfig {
  std::size_t hash_dim = std::size_t(1) << 18;
  double learning_rate = 0.1;
  int epochs = 10;
  double l2 = 1e-4;
  std::size_t batch_size = 64;
  double holdout_fraction = 0.2;
  std::uint64_t seed = 42;
};

/// Signed hashed bag-of-words index for a token: coordinate in [0, dim) plus
/// a +/-1 sign. No vocabulary file is needed; collisions are tolerable at
/// this scale.
std::pair<std::size_t, double> hash_token(std::string_view token, std::size_t dim);

std::array<double, 3> softmax3(const std::array<double, 3>& logits);

/// Multinomial logistic regression over signed hashed bag-of-words features.
/// Stand-in for a fine-tuned transformer: same output contract (label +
/// confidence score), desk-scale training.
class SentimentClassifier {
 public:
  SentimentClassifier() = default;
  explicit SentimentClassifier(std::size_t hash_dim);

  std::size_t hash_dim() const { return hash_dim_; }
  bool trained() const { return trained_; }

  /// Raw 3-way probabilities (negative, neutral, positive). Empty text maps
  /// to the uniform prior.
  std::array<double, 3> probabilities(std::string_view clean_text) const;

  // Parameter access for training and tests. weights() is row-major,
  // 3 x hash_dim.
  std::vector<double>& weights() { return weights_; }
  const std::vector<double>& weights() const { return weights_; }
  std::array<double, 3>& bias() { return bias_; }
  const std::array<double, 3>& bias() const { return bias_; }
  void set_trained(bool t) { trained_ = t; }

 private:
  std::size_t hash_dim_ = 0;
  std::vector<double> weights_;
  std::array<double, 3> bias_{};
  bool trained_ = false;
};

struct ClassifierReport {
  double train_accuracy = 0.0;
  double holdout_accuracy = 0.0;
  std::array<std::size_t, 3> class_counts{};
  /// loss_curve[0] is the pre-training cross-entropy; one entry per epoch
  /// follows.
  std::vector<double> loss_curve;
};

/// Trains by seeded mini-batch gradient descent on cross-entropy with L2.
/// Deterministic: the same seed yields bit-identical weights. Throws
/// DataError("degenerate corpus") when any class is missing.
std::pair<SentimentClassifier, ClassifierReport> train_classifier(
    const std::vector<LabeledText>& corpus, const ClassifierConfig& config);

/// Label = argmax softmax class, score = the winning probability (>= 1/3).
/// Empty text returns (neutral, 1/3).
SentimentResult score_text(const SentimentClassifier& model, std::uint64_t tweet_id,
                           std::string_view clean_text);

struct ScoreImport {
  std::vector<SentimentResult> results;
  std::vector<std::string> rejected;  // one message per rejected row, with file line
};

/// Reads tweet_id,label,score CSV. Rows with unknown labels or scores
/// outside [0,1] are rejected with their line numbers.
ScoreImport import_scores(const std::string& path);
ScoreImport import_scores_text(std::string_view content);

std::string scores_to_csv(const std::vector<SentimentResult>& results);

/// Keeps only results whose tweet_id is present in ids; second element is
/// the dropped count.
std::pair<std::vector<SentimentResult>, std::size_t> filter_scores_to_tweets(
    const std::vector<SentimentResult>& results,
    const std::vector<std::uint64_t>& ids);

/// text,label CSV with label in {positive,neutral,negative}.
std::vector<LabeledText> load_labeled_corpus(const std::string& path);
std::string corpus_to_csv(const std::vector<LabeledText>& corpus);

struct SentimentWeights {
  double positive = 1.0;
  double neutral = 0.0;
  double negative = -1.0;

  double weight(SentimentLabel label) const;
};

struct WeightedSentimentPoint {
  UtcSeconds bucket_start = 0;
  double weighted_score = 0.0;
  double mean_price = 0.0;
  std::size_t tweet_count = 0;
};

/// Per time bucket: sum of w(label)*score over tweets divided by the tweet
/// count. When scale_to_price is set the score series is min-max mapped onto
/// the [min, max] range of the bucket mean prices so both plot on one axis;
/// the mapping is affine and order-preserving. Empty buckets are omitted.
std::vector<WeightedSentimentPoint> weighted_sentiment_series(
    const std::vector<SentimentResult>& results, const std::vector<JoinedRow>& joined,
    std::int64_t bucket_seconds, const SentimentWeights& weights, bool scale_to_price);

}  // namespace cryptosent
