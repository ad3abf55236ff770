#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace cryptosent {

struct ForestConfig {
  int n_trees = 100;
  int max_depth = 5;
  int min_samples_leaf = 2;
  int features_per_split = 0;  // 0 -> ceil(F / 3)
  bool bootstrap = true;
  std::uint64_t seed = 42;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf mean
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict_one(const Eigen::RowVectorXd& x) const;
  int depth() const;
};

struct RandomForest {
  ForestConfig config;
  std::vector<DecisionTree> trees;

  /// Mean of the per-tree outputs, summed in sorted order so the result is
  /// exactly invariant under tree permutation.
  double predict_one(const Eigen::RowVectorXd& x) const;
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;
};

/// Regression forest: each tree fits a seeded bootstrap sample with greedy
/// variance-reduction splits over a random feature subset per node, depth
/// capped by config.max_depth, leaves predicting the sample mean.
RandomForest fit_random_forest(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                               const ForestConfig& config);

}  // namespace cryptosent
