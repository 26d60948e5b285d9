#include "quadlab/noise.hpp"

#include "quadlab/error.hpp"

namespace quadlab {

GaussianNoise::GaussianNoise(Eigen::VectorXd mean, Eigen::MatrixXd cov, std::uint64_t seed)
    : mean_(std::move(mean)), cov_(std::move(cov)), rng_(seed) {
  if (cov_.rows() != cov_.cols() || cov_.rows() != mean_.size())
    throw DimensionMismatch("noise covariance must be square and match the mean dimension");
  if (!cov_.isApprox(cov_.transpose(), 1e-12))
    throw ConfigError("noise covariance must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(cov_);
  if (llt.info() != Eigen::Success)
    throw ConfigError("noise covariance must be positive-definite");
  chol_ = llt.matrixL();
}

Eigen::VectorXd GaussianNoise::sample() {
  Eigen::VectorXd z(mean_.size());
  for (int i = 0; i < z.size(); ++i) z(i) = normal_(rng_);
  return mean_ + chol_ * z;
}

}  // namespace quadlab
