#include "cryptosent/models/forest.hpp"

#include <algorithm>
#include <cmath>

#include "cryptosent/error.hpp"
#include "cryptosent/rng.hpp"

namespace cryptosent {

double DecisionTree::predict_one(const Eigen::RowVectorXd& x) const {
  int node = 0;
  while (nodes[node].feature >= 0) {
    node = x[nodes[node].feature] <= nodes[node].threshold ? nodes[node].left
                                                           : nodes[node].right;
  }
  return nodes[node].value;
}

int DecisionTree::depth() const {
  // Iterative depth over the explicit child links.
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int best = 0;
  while (!stack.empty()) {
    auto [node, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes[node].feature >= 0) {
      stack.push_back({nodes[node].left, d + 1});
      stack.push_back({nodes[node].right, d + 1});
    }
  }
  return best;
}

namespace {

struct TreeBuilder {
  const Eigen::MatrixXd& X;
  const Eigen::VectorXd& y;
  const ForestConfig& config;
  int features_per_split;
  SeededRng& rng;
  DecisionTree tree;

  int build(std::vector<std::size_t>& samples, int depth) {
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i : samples) {
      sum += y[i];
      sum_sq += y[i] * y[i];
    }
    const double n = double(samples.size());
    const double mean = sum / n;
    const double sse = sum_sq - sum * sum / n;

    int node_id = int(tree.nodes.size());
    tree.nodes.push_back(TreeNode{});
    tree.nodes[node_id].value = mean;

    bool can_split = depth < config.max_depth &&
                     samples.size() >= std::size_t(2 * config.min_samples_leaf) &&
                     sse > 1e-12;
    if (!can_split) return node_id;

    // Random feature subset for this node (distinct, in draw order).
    const int f = int(X.cols());
    std::vector<std::size_t> feats = rng.sample_without_replacement(
        std::size_t(f), std::size_t(features_per_split));

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_score = -1.0;  // SSE reduction

    std::vector<std::pair<double, double>> pairs(samples.size());
    for (std::size_t feat : feats) {
      for (std::size_t k = 0; k < samples.size(); ++k)
        pairs[k] = {X(samples[k], Eigen::Index(feat)), y[samples[k]]};
      std::sort(pairs.begin(), pairs.end());

      double left_sum = 0.0, left_sq = 0.0;
      for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
        left_sum += pairs[k].second;
        left_sq += pairs[k].second * pairs[k].second;
        if (pairs[k].first == pairs[k + 1].first) continue;  // not a boundary
        std::size_t nl = k + 1, nr = pairs.size() - nl;
        if (nl < std::size_t(config.min_samples_leaf) ||
            nr < std::size_t(config.min_samples_leaf))
          continue;
        double right_sum = sum - left_sum;
        double right_sq = sum_sq - left_sq;
        double left_sse = left_sq - left_sum * left_sum / double(nl);
        double right_sse = right_sq - right_sum * right_sum / double(nr);
        double score = sse - left_sse - right_sse;
        if (score > best_score) {
          best_score = score;
          best_feature = int(feat);
          best_threshold = 0.5 * (pairs[k].first + pairs[k + 1].first);
        }
      }
    }
    if (best_feature < 0 || best_score <= 0.0) return node_id;

    std::vector<std::size_t> left, right;
    left.reserve(samples.size());
    right.reserve(samples.size());
    for (std::size_t i : samples) {
      (X(i, best_feature) <= best_threshold ? left : right).push_back(i);
    }
    if (left.empty() || right.empty()) return node_id;  // numeric tie fallback

    tree.nodes[node_id].feature = best_feature;
    tree.nodes[node_id].threshold = best_threshold;
    int left_id = build(left, depth + 1);
    tree.nodes[node_id].left = left_id;
    int right_id = build(right, depth + 1);
    tree.nodes[node_id].right = right_id;
    return node_id;
  }
};

}  // namespace

double RandomForest::predict_one(const Eigen::RowVectorXd& x) const {
  std::vector<double> outputs;
  outputs.reserve(trees.size());
  for (const auto& tree : trees) outputs.push_back(tree.predict_one(x));
  std::sort(outputs.begin(), outputs.end());
  double sum = 0.0;
  for (double v : outputs) sum += v;
  return sum / double(outputs.size());
}

Eigen::VectorXd RandomForest::predict(const Eigen::MatrixXd& X) const {
  Eigen::VectorXd out(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) out[i] = predict_one(X.row(i));
  return out;
}

RandomForest fit_random_forest(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                               const ForestConfig& config) {
  if (X.rows() < 2 || X.rows() != y.size())
    throw DataError("fit_random_forest: need at least two samples");
  if (config.n_trees < 1 || config.max_depth < 1 || config.min_samples_leaf < 1)
    throw ConfigError("fit_random_forest: invalid configuration");

  RandomForest forest;
  forest.config = config;
  int fps = config.features_per_split > 0
                ? std::min<int>(config.features_per_split, int(X.cols()))
                : int((X.cols() + 2) / 3);  // ceil(F/3)

  const std::size_t n = std::size_t(X.rows());
  for (int t = 0; t < config.n_trees; ++t) {
    SeededRng rng(derive_seed(config.seed, "tree:" + std::to_string(t)));
    std::vector<std::size_t> samples(n);
    if (config.bootstrap) {
      for (std::size_t i = 0; i < n; ++i)
        samples[i] = std::size_t(rng.next_below(n));
    } else {
      for (std::size_t i = 0; i < n; ++i) samples[i] = i;
    }
    TreeBuilder builder{X, y, config, fps, rng, {}};
    builder.build(samples, 0);
    forest.trees.push_back(std::move(builder.tree));
  }
  return forest;
}

}  // namespace cryptosent
