#include "cryptosent/models/sgd.hpp"

#include <cmath>

#include "cryptosent/error.hpp"
#include "cryptosent/rng.hpp"

namespace cryptosent {

double huber_loss(double residual, double epsilon) {
  double a = std::abs(residual);
  if (a <= epsilon) return 0.5 * residual * residual;
  return epsilon * (a - 0.5 * epsilon);
}

double huber_derivative(double residual, double epsilon) {
  if (std::abs(residual) <= epsilon) return residual;
  return residual > 0.0 ? epsilon : -epsilon;
}

SgdFitResult fit_sgd_huber(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                           const SgdConfig& config) {
  if (X.rows() == 0 || X.rows() != y.size())
    throw DataError("fit_sgd_huber: empty or mismatched input");
  if (config.alpha <= 0.0 || config.learning_rate <= 0.0 || config.huber_epsilon <= 0.0)
    throw ConfigError("fit_sgd_huber: alpha, learning rate and epsilon must be positive");

  const Eigen::Index n = X.rows();
  const Eigen::Index f = X.cols();

  LinearModel model;
  model.coefficients = Eigen::VectorXd::Zero(f);
  double& intercept = model.intercept;

  SeededRng rng(config.seed);
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  SgdFitResult result;
  std::uint64_t t = 0;
  for (int epoch = 1; epoch <= config.max_iter; ++epoch) {
    rng.shuffle_indices(order);
    for (std::size_t i : order) {
      ++t;
      double eta = config.learning_rate / std::pow(double(t), config.lr_power);
      double r = X.row(i) * model.coefficients + intercept - y[i];
      double g = huber_derivative(r, config.huber_epsilon);
      // Intercept is unregularized.
      model.coefficients -= eta * (g * X.row(i).transpose() +
                                   2.0 * config.alpha * model.coefficients);
      intercept -= eta * g;
    }

    double loss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = X.row(i) * model.coefficients + intercept - y[i];
      loss += huber_loss(r, config.huber_epsilon);
    }
    loss /= double(n);
    if (!std::isfinite(loss))
      throw NumericError("fit_sgd_huber diverged at epoch " + std::to_string(epoch));
    result.loss_curve.push_back(loss);
  }
  result.model = std::move(model);
  return result;
}

}  // namespace cryptosent
