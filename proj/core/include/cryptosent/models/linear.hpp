#pragma once

#include <Eigen/Dense>

namespace cryptosent {

struct LinearModel {
  Eigen::VectorXd coefficients;
  double intercept = 0.0;

  double predict_one(const Eigen::RowVectorXd& x) const {
    return x * coefficients + intercept;
  }
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const {
    return (X * coefficients).array() + intercept;
  }
};

/// Ordinary least squares via a rank-revealing orthogonal decomposition:
/// minimizes the residual sum of squares, returning the minimum-norm
/// solution for rank-deficient systems. Throws DataError on empty input.
LinearModel fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace cryptosent
