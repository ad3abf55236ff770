#include "cryptosent/evaluation.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cryptosent/csv.hpp"
#include "cryptosent/error.hpp"

namespace cryptosent {

ChronoSplit chrono_split(const std::vector<UtcSeconds>& timestamps, double fraction) {
  if (timestamps.size() < 10) throw DataError("insufficient data: need at least 10 rows");
  if (fraction <= 0.0 || fraction >= 1.0)
    throw ConfigError("split fraction must lie in (0,1)");
  ChronoSplit split;
  split.fraction = fraction;
  split.train_count =
      static_cast<std::size_t>(std::ceil(fraction * double(timestamps.size())));
  if (split.train_count >= timestamps.size()) split.train_count = timestamps.size() - 1;
  split.test_count = timestamps.size() - split.train_count;
  split.split_timestamp = timestamps[split.train_count];
  return split;
}

ModelMetrics compute_metrics(const Eigen::VectorXd& predictions,
                             const Eigen::VectorXd& actuals, std::string model,
                             std::string coin) {
  if (predictions.size() != actuals.size())
    throw DataError("compute_metrics: prediction/actual length mismatch");
  if (predictions.size() == 0) throw DataError("compute_metrics: empty input");
  if ((actuals.array() <= 0.0).any())
    throw DataError("compute_metrics: actual prices must be positive");

  ModelMetrics m;
  m.model = std::move(model);
  m.coin = std::move(coin);
  m.n_test = static_cast<std::size_t>(predictions.size());
  Eigen::ArrayXd err = (predictions - actuals).array();
  m.mae = err.abs().mean();
  m.rmse = std::sqrt(err.square().mean());
  m.max_delta_pct = (100.0 * err.abs() / actuals.array()).maxCoeff();
  return m;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write report file: " + path);
  out << content;
  if (!out) throw DataError("write failed: " + path);
}

std::string series_csv(const std::vector<SeriesPoint>& points) {
  std::string csv = "timestamp,actual,predicted,partition\n";
  for (const auto& p : points) {
    csv += format_timestamp(p.timestamp);
    csv.push_back(',');
    csv += format_double(p.actual);
    csv.push_back(',');
    csv += format_double(p.predicted);
    csv.push_back(',');
    csv += p.is_test ? "test" : "train";
    csv.push_back('\n');
  }
  return csv;
}

}  // namespace

std::vector<std::string> generate_report(
    const std::string& out_dir, const std::vector<ModelMetrics>& metrics,
    const std::vector<LossCurve>& loss_curves,
    const std::map<std::string, std::vector<SeriesPoint>>& series_by_model) {
  if (metrics.empty()) throw DataError("generate_report: no metrics rows");
  std::filesystem::create_directories(out_dir);

  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    std::string path = out_dir + "/" + name;
    write_file(path, content);
    written.push_back(path);
  };

  std::string csv = "model,coin,mae,rmse,max_delta_pct,n_test\n";
  for (const auto& m : metrics) {
    csv += m.model + "," + m.coin + "," + format_double(m.mae) + "," +
           format_double(m.rmse) + "," + format_double(m.max_delta_pct) + "," +
           std::to_string(m.n_test) + "\n";
  }
  emit("metrics.csv", csv);

  // Machine-readable twin of metrics.csv. Errors are reported in USD after
  // inverse transforms; scaled-unit errors can be recomputed from series.csv.
  std::string json = "{\n  \"units\": \"USD\",\n  \"rows\": [\n";
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const auto& m = metrics[i];
    json += "    {\"model\": \"" + m.model + "\", \"coin\": \"" + m.coin +
            "\", \"mae\": " + format_double(m.mae) + ", \"rmse\": " + format_double(m.rmse) +
            ", \"max_delta_pct\": " + format_double(m.max_delta_pct) +
            ", \"n_test\": " + std::to_string(m.n_test) + "}";
    json += (i + 1 < metrics.size()) ? ",\n" : "\n";
  }
  json += "  ]\n}\n";
  emit("metrics.json", json);

  for (const auto& curve : loss_curves) {
    std::string loss_csv = "epoch,loss\n";
    for (std::size_t e = 0; e < curve.losses.size(); ++e)
      loss_csv += std::to_string(e) + "," + format_double(curve.losses[e]) + "\n";
    emit("loss_" + curve.model + ".csv", loss_csv);
  }

  for (const auto& [name, points] : series_by_model)
    emit("series_" + name + ".csv", series_csv(points));

  if (!series_by_model.empty()) {
    auto it = series_by_model.find("lstm");
    if (it == series_by_model.end()) it = series_by_model.begin();
    emit("series.csv", series_csv(it->second));
  }
  return written;
}

}  // namespace cryptosent
