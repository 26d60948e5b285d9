#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace quadlab {

/// Seedable multivariate Gaussian N(mean, cov). The covariance must be
/// symmetric positive-definite (its Cholesky factorization must succeed);
/// samples are mean + L z with z standard normal.
class GaussianNoise {
 public:
  GaussianNoise(Eigen::VectorXd mean, Eigen::MatrixXd cov, std::uint64_t seed);

  Eigen::VectorXd sample();

  int dim() const { return static_cast<int>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }

  void reseed(std::uint64_t seed) { rng_.seed(seed); }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd chol_;  // lower-triangular factor
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace quadlab
