#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cryptosent/time_util.hpp"

namespace cryptosent {

/// Chronological 70:30 partition: the first ceil(fraction*N) rows train, the
/// rest test, no shuffling.
struct ChronoSplit {
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  UtcSeconds split_timestamp = 0;  // timestamp of the first test row
  double fraction = 0.70;
};

/// timestamps must be sorted ascending; N >= 10 is required.
ChronoSplit chrono_split(const std::vector<UtcSeconds>& timestamps, double fraction = 0.70);

struct ModelMetrics {
  std::string model;
  std::string coin;
  double mae = 0.0;
  double rmse = 0.0;
  double max_delta_pct = 0.0;
  std::size_t n_test = 0;
};

/// MAE, RMSE and the maximum pointwise percentage error
/// max_i 100*|pred_i - actual_i| / actual_i. Actuals are prices and must be
/// strictly positive.
ModelMetrics compute_metrics(const Eigen::VectorXd& predictions,
                             const Eigen::VectorXd& actuals, std::string model,
                             std::string coin);

struct SeriesPoint {
  UtcSeconds timestamp = 0;
  double actual = 0.0;
  double predicted = 0.0;
  bool is_test = false;
};

struct LossCurve {
  std::string model;
  std::vector<double> losses;
};

/// Writes the machine-readable report bundle into out_dir:
///   metrics.csv / metrics.json  (model,coin,mae,rmse,max_delta_pct,n_test)
///   loss_<model>.csv            (epoch,loss)
///   series_<model>.csv          (timestamp,actual,predicted,partition)
///   series.csv                  (copy of the "lstm" series when present,
///                                otherwise the first series by name)
/// Returns the written paths. Outputs are byte-deterministic for identical
/// inputs.
std::vector<std::string> generate_report(
    const std::string& out_dir, const std::vector<ModelMetrics>& metrics,
    const std::vector<LossCurve>& loss_curves,
    const std::map<std::string, std::vector<SeriesPoint>>& series_by_model);

}  // namespace cryptosent
