#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cryptosent/evaluation.hpp"
#include "cryptosent/sentiment.hpp"
#include "cryptosent/types.hpp"

namespace cryptosent {

/// Column-major view of assembled feature rows. Row i of values pairs with
/// timestamps[i] and targets[i] (close price, USD). Column order is fixed:
/// sentiment one-hot (negative, neutral, positive), sentiment_score, then
/// metadata columns when enabled, then OHLCV columns when enabled.
struct FeatureTable {
  std::vector<std::string> columns;
  std::vector<UtcSeconds> timestamps;
  Eigen::MatrixXd values;   // N x F
  Eigen::VectorXd targets;  // N
};

struct AssembleOptions {
  bool include_metadata = true;
  bool include_price_features = false;
};

/// One row per joined tweet, sorted by (timestamp, tweet id). Throws
/// DataError naming the id when a tweet has no sentiment result.
FeatureTable assemble_features(const std::vector<JoinedRow>& joined,
                               const std::vector<SentimentResult>& sentiments,
                               const AssembleOptions& opts);

/// One row per bar minute for the sequence model: mean sentiment score,
/// majority-label one-hot, summed engagement counts, any-verified flag, and
/// the bar's OHLCV columns when enabled. Rows are uniform in time wherever
/// the bar series is gap-free.
FeatureTable aggregate_per_minute(const std::vector<JoinedRow>& joined,
                                  const std::vector<SentimentResult>& sentiments,
                                  const AssembleOptions& opts);

/// Per-column affine scaling fitted on training rows only.
/// standard: (x - mean) / sigma with population sigma; sigma == 0 is treated
/// as 1, so a constant column centers to zero. minmax: (x - min)/(max - min);
/// max == min is treated as range 1. Both keep the inverse transform an exact
/// affine inverse.
class Scaler {
 public:
  enum class Kind { standard, minmax };

  Scaler() = default;
  static Scaler fit(const Eigen::MatrixXd& train, Kind kind);

  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& x) const;
  double transform_scalar(double v, Eigen::Index column = 0) const;
  double inverse_scalar(double v, Eigen::Index column = 0) const;

  Kind kind() const { return kind_; }
  const Eigen::VectorXd& offset() const { return offset_; }
  const Eigen::VectorXd& scale() const { return scale_; }
  void set_params(Kind kind, Eigen::VectorXd offset, Eigen::VectorXd scale);

 private:
  Kind kind_ = Kind::standard;
  Eigen::VectorXd offset_;
  Eigen::VectorXd scale_;
};

/// One sequence-model sample: lookback rows [target_row - L, target_row) as
/// inputs, the scaled close of target_row as target.
struct SeriesWindow {
  Eigen::MatrixXd inputs;  // L x F
  double target = 0.0;     // scaled
  std::size_t target_row = 0;
  UtcSeconds target_time = 0;
};

struct WindowSet {
  std::vector<SeriesWindow> train;
  std::vector<SeriesWindow> test;
};

/// Builds stride-1 windows over scaled rows and scaled targets. Train window
/// targets lie strictly before the split, test targets strictly after; test
/// windows may use lookback context reaching back into the train tail.
/// Throws DataError("insufficient history") when a partition yields no
/// window.
WindowSet build_windows(const Eigen::MatrixXd& scaled_values,
                        const Eigen::VectorXd& scaled_targets,
                        const std::vector<UtcSeconds>& timestamps, int lookback,
                        const ChronoSplit& split);

/// CSV export of a feature table (header: timestamp, columns..., target_close).
std::string feature_table_to_csv(const FeatureTable& table);
FeatureTable feature_table_from_csv(const std::string& path);

}  // namespace cryptosent
