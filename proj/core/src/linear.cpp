#include "cryptosent/models/linear.hpp"

#include "cryptosent/error.hpp"

namespace cryptosent {

LinearModel fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (X.rows() == 0 || X.rows() != y.size()) throw DataError("fit_ols: empty or mismatched input");

  // Augment with a ones column for the intercept; COD (two Householder QRs)
  // yields the minimum-norm least-squares solution on rank-deficient input.
  Eigen::MatrixXd aug(X.rows(), X.cols() + 1);
  aug.leftCols(X.cols()) = X;
  aug.col(X.cols()).setOnes();

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(aug);
  Eigen::VectorXd beta = cod.solve(y);

  LinearModel model;
  model.coefficients = beta.head(X.cols());
  model.intercept = beta[X.cols()];
  if (!model.coefficients.allFinite() || !std::isfinite(model.intercept))
    throw NumericError("fit_ols: non-finite solution");
  return model;
}

}  // namespace cryptosent
