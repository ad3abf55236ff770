#include "cryptosent/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "cryptosent/csv.hpp"
#include "cryptosent/error.hpp"

namespace cryptosent {
namespace {

const char* kSentimentColumns[] = {"sentiment_negative", "sentiment_neutral",
                                   "sentiment_positive", "sentiment_score"};
const char* kMetadataColumns[] = {"favourite_count", "retweet_count",
                                  "user_followers_count", "user_verified"};
const char* kPriceColumns[] = {"high", "low", "open", "volume_from", "volume_to"};

std::vector<std::string> column_names(const AssembleOptions& opts) {
  std::vector<std::string> cols(std::begin(kSentimentColumns), std::end(kSentimentColumns));
  if (opts.include_metadata)
    cols.insert(cols.end(), std::begin(kMetadataColumns), std::end(kMetadataColumns));
  if (opts.include_price_features)
    cols.insert(cols.end(), std::begin(kPriceColumns), std::end(kPriceColumns));
  return cols;
}

std::unordered_map<std::uint64_t, const SentimentResult*> sentiment_index(
    const std::vector<SentimentResult>& sentiments) {
  std::unordered_map<std::uint64_t, const SentimentResult*> index;
  index.reserve(sentiments.size());
  for (const auto& s : sentiments) index.emplace(s.tweet_id, &s);
  return index;
}

}  // namespace

FeatureTable assemble_features(const std::vector<JoinedRow>& joined,
                               const std::vector<SentimentResult>& sentiments,
                               const AssembleOptions& opts) {
  auto index = sentiment_index(sentiments);

  std::vector<const JoinedRow*> rows;
  rows.reserve(joined.size());
  for (const auto& row : joined) rows.push_back(&row);
  std::sort(rows.begin(), rows.end(), [](const JoinedRow* a, const JoinedRow* b) {
    if (a->tweet.created_at != b->tweet.created_at)
      return a->tweet.created_at < b->tweet.created_at;
    return a->tweet.id < b->tweet.id;
  });

  FeatureTable table;
  table.columns = column_names(opts);
  const std::size_t n = rows.size();
  const std::size_t f = table.columns.size();
  table.timestamps.resize(n);
  table.values.resize(n, f);
  table.targets.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const JoinedRow& row = *rows[i];
    auto it = index.find(row.tweet.id);
    if (it == index.end())
      throw DataError("missing sentiment result for tweet id " +
                      std::to_string(row.tweet.id));
    const SentimentResult& s = *it->second;

    table.timestamps[i] = row.tweet.created_at;
    table.targets[i] = row.target_close;
    std::size_t c = 0;
    table.values(i, c++) = s.label == SentimentLabel::negative ? 1.0 : 0.0;
    table.values(i, c++) = s.label == SentimentLabel::neutral ? 1.0 : 0.0;
    table.values(i, c++) = s.label == SentimentLabel::positive ? 1.0 : 0.0;
    table.values(i, c++) = s.score;
    if (opts.include_metadata) {
      table.values(i, c++) = double(row.tweet.favourite_count);
      table.values(i, c++) = double(row.tweet.retweet_count);
      table.values(i, c++) = double(row.tweet.user_followers_count);
      table.values(i, c++) = row.tweet.user_verified ? 1.0 : 0.0;
    }
    if (opts.include_price_features) {
      table.values(i, c++) = row.bar.high;
      table.values(i, c++) = row.bar.low;
      table.values(i, c++) = row.bar.open;
      table.values(i, c++) = row.bar.volume_from;
      table.values(i, c++) = row.bar.volume_to;
    }
  }
  return table;
}

FeatureTable aggregate_per_minute(const std::vector<JoinedRow>& joined,
                                  const std::vector<SentimentResult>& sentiments,
                                  const AssembleOptions& opts) {
  auto index = sentiment_index(sentiments);

  struct MinuteAccum {
    const PriceBar* bar = nullptr;
    double score_sum = 0.0;
    std::array<std::size_t, 3> label_counts{};
    double favourites = 0.0;
    double retweets = 0.0;
    double followers = 0.0;
    bool any_verified = false;
    std::size_t count = 0;
  };
  std::map<UtcSeconds, MinuteAccum> minutes;

  for (const auto& row : joined) {
    auto it = index.find(row.tweet.id);
    if (it == index.end())
      throw DataError("missing sentiment result for tweet id " +
                      std::to_string(row.tweet.id));
    const SentimentResult& s = *it->second;
    MinuteAccum& acc = minutes[row.bar.time];
    acc.bar = &row.bar;
    acc.score_sum += s.score;
    ++acc.label_counts[static_cast<int>(s.label)];
    acc.favourites += double(row.tweet.favourite_count);
    acc.retweets += double(row.tweet.retweet_count);
    acc.followers += double(row.tweet.user_followers_count);
    acc.any_verified = acc.any_verified || row.tweet.user_verified;
    ++acc.count;
  }

  FeatureTable table;
  table.columns = column_names(opts);
  const std::size_t n = minutes.size();
  const std::size_t f = table.columns.size();
  table.timestamps.resize(n);
  table.values.resize(n, f);
  table.targets.resize(n);

  std::size_t i = 0;
  for (const auto& [minute, acc] : minutes) {
    table.timestamps[i] = minute;
    table.targets[i] = acc.bar->close;
    // Majority label; ties resolve to the lower class, as in scoring.
    int majority = 0;
    for (int c = 1; c < 3; ++c)
      if (acc.label_counts[c] > acc.label_counts[majority]) majority = c;
    std::size_t c = 0;
    table.values(i, c++) = majority == 0 ? 1.0 : 0.0;
    table.values(i, c++) = majority == 1 ? 1.0 : 0.0;
    table.values(i, c++) = majority == 2 ? 1.0 : 0.0;
    table.values(i, c++) = acc.score_sum / double(acc.count);
    if (opts.include_metadata) {
      table.values(i, c++) = acc.favourites;
      table.values(i, c++) = acc.retweets;
      table.values(i, c++) = acc.followers;
      table.values(i, c++) = acc.any_verified ? 1.0 : 0.0;
    }
    if (opts.include_price_features) {
      table.values(i, c++) = acc.bar->high;
      table.values(i, c++) = acc.bar->low;
      table.values(i, c++) = acc.bar->open;
      table.values(i, c++) = acc.bar->volume_from;
      table.values(i, c++) = acc.bar->volume_to;
    }
    ++i;
  }
  return table;
}

Scaler Scaler::fit(const Eigen::MatrixXd& train, Kind kind) {
  if (train.rows() == 0) throw DataError("Scaler::fit: no training rows");
  Scaler s;
  s.kind_ = kind;
  const Eigen::Index f = train.cols();
  s.offset_.resize(f);
  s.scale_.resize(f);
  for (Eigen::Index c = 0; c < f; ++c) {
    if (kind == Kind::standard) {
      double mean = train.col(c).mean();
      double var = (train.col(c).array() - mean).square().mean();
      double sigma = std::sqrt(var);
      s.offset_[c] = mean;
      s.scale_[c] = sigma > 0.0 ? sigma : 1.0;
    } else {
      double lo = train.col(c).minCoeff();
      double hi = train.col(c).maxCoeff();
      s.offset_[c] = lo;
      s.scale_[c] = hi > lo ? hi - lo : 1.0;
    }
  }
  return s;
}

Eigen::MatrixXd Scaler::transform(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd out = x;
  for (Eigen::Index c = 0; c < x.cols(); ++c)
    out.col(c) = (x.col(c).array() - offset_[c]) / scale_[c];
  return out;
}

Eigen::MatrixXd Scaler::inverse_transform(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd out = x;
  for (Eigen::Index c = 0; c < x.cols(); ++c)
    out.col(c) = x.col(c).array() * scale_[c] + offset_[c];
  return out;
}

double Scaler::transform_scalar(double v, Eigen::Index column) const {
  return (v - offset_[column]) / scale_[column];
}

double Scaler::inverse_scalar(double v, Eigen::Index column) const {
  return v * scale_[column] + offset_[column];
}

void Scaler::set_params(Kind kind, Eigen::VectorXd offset, Eigen::VectorXd scale) {
  kind_ = kind;
  offset_ = std::move(offset);
  scale_ = std::move(scale);
}

WindowSet build_windows(const Eigen::MatrixXd& scaled_values,
                        const Eigen::VectorXd& scaled_targets,
                        const std::vector<UtcSeconds>& timestamps, int lookback,
                        const ChronoSplit& split) {
  if (lookback < 1) throw ConfigError("lookback must be >= 1");
  const std::size_t n = static_cast<std::size_t>(scaled_values.rows());
  const std::size_t lb = static_cast<std::size_t>(lookback);
  if (split.train_count < lb + 1 || split.train_count >= n)
    throw DataError("insufficient history: need lookback+1 train rows and a test row");

  WindowSet set;
  auto make_window = [&](std::size_t t) {
    SeriesWindow w;
    w.inputs = scaled_values.middleRows(t - lb, lb);
    w.target = scaled_targets[t];
    w.target_row = t;
    w.target_time = timestamps[t];
    return w;
  };
  for (std::size_t t = lb; t < split.train_count; ++t)
    set.train.push_back(make_window(t));
  for (std::size_t t = std::max(lb, split.train_count); t < n; ++t)
    set.test.push_back(make_window(t));
  if (set.train.empty() || set.test.empty())
    throw DataError("insufficient history: a partition has no window");
  return set;
}

std::string feature_table_to_csv(const FeatureTable& table) {
  std::string out = "timestamp";
  for (const auto& col : table.columns) out += "," + col;
  out += ",target_close\n";
  for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
    out += format_timestamp(table.timestamps[i]);
    for (Eigen::Index c = 0; c < table.values.cols(); ++c)
      out += "," + format_double(table.values(i, c));
    out += "," + format_double(table.targets[i]);
    out.push_back('\n');
  }
  return out;
}

FeatureTable feature_table_from_csv(const std::string& path) {
  CsvTable csv = read_csv(path);
  if (csv.header.size() < 2 || csv.header.front() != "timestamp" ||
      csv.header.back() != "target_close")
    throw DataError("feature CSV must start with timestamp and end with target_close: " + path);

  FeatureTable table;
  table.columns.assign(csv.header.begin() + 1, csv.header.end() - 1);
  const std::size_t n = csv.rows.size();
  const std::size_t f = table.columns.size();
  table.timestamps.resize(n);
  table.values.resize(n, f);
  table.targets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = csv.rows[i];
    if (row.size() != csv.header.size())
      throw DataError("feature CSV row " + std::to_string(i + 2) + " malformed");
    auto ts = parse_timestamp(row[0]);
    if (!ts) throw DataError("feature CSV row " + std::to_string(i + 2) + ": bad timestamp");
    table.timestamps[i] = *ts;
    for (std::size_t c = 0; c < f; ++c) {
      auto v = parse_double(row[c + 1]);
      if (!v) throw DataError("feature CSV row " + std::to_string(i + 2) + ": bad value");
      table.values(i, c) = *v;
    }
    auto target = parse_double(row.back());
    if (!target) throw DataError("feature CSV row " + std::to_string(i + 2) + ": bad target");
    table.targets[i] = *target;
  }
  return table;
}

}  // namespace cryptosent
