#pragma once

#include <cstdint>
#include <vector>

#include "cryptosent/models/linear.hpp"

namespace cryptosent {

struct SgdConfig {
  double alpha = 0.01;          // L2 penalty strength
  double learning_rate = 0.01;  // initial rate eta_0
  int max_iter = 100;           // epochs over the data
  double huber_epsilon = 0.1;
  double lr_power = 0.25;       // eta_t = eta_0 / t^lr_power
  std::uint64_t seed = 42;
};

/// Huber loss: r^2/2 inside |r| <= epsilon, epsilon*(|r| - epsilon/2) outside.
/// Continuous and once-differentiable at the seam.
double huber_loss(double residual, double epsilon);

/// d/dr of huber_loss: r inside the quadratic region, epsilon*sign(r) outside.
double huber_derivative(double residual, double epsilon);

struct SgdFitResult {
  LinearModel model;
  std::vector<double> loss_curve;  // mean Huber loss after each epoch
};

/// Regularized linear regression by per-sample stochastic gradient descent on
/// the Huber loss, visiting rows in seeded shuffled order each epoch with an
/// inverse-scaling learning rate. Callers are expected to pass standardized
/// features. Throws NumericError naming the epoch if the loss turns
/// non-finite.
SgdFitResult fit_sgd_huber(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                           const SgdConfig& config);

}  // namespace cryptosent
