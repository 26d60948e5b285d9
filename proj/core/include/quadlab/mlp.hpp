#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace quadlab {

enum class Activation { Relu, Tanh, Linear };

Activation activation_from_string(const std::string& s);
std::string activation_to_string(Activation a);

/// Feed-forward network with explicit forward and reverse-mode passes.
/// Samples are matrix columns, so batched passes run as matrix products.
struct Mlp {
  std::vector<int> sizes;                  // [input, hidden..., output]
  std::vector<Eigen::MatrixXd> weights;    // weights[l]: sizes[l+1] x sizes[l]
  std::vector<Eigen::VectorXd> biases;
  Activation hidden_activation = Activation::Relu;
  Activation output_activation = Activation::Linear;

  /// Uniform fan-in initialization: W, b ~ U(-1/sqrt(fan_in), +1/sqrt(fan_in)).
  static Mlp create(std::vector<int> layer_sizes, Activation hidden, Activation output,
                    std::uint64_t seed);

  int input_dim() const { return sizes.front(); }
  int output_dim() const { return sizes.back(); }
  int layer_count() const { return static_cast<int>(weights.size()); }

  /// Consecutive dimensions agree and every parameter is finite.
  void validate() const;

  Eigen::VectorXd forward(const Eigen::VectorXd& input) const;
  Eigen::MatrixXd forward(const Eigen::MatrixXd& input) const;

  /// Intermediate values kept for the backward pass.
  struct Cache {
    Eigen::MatrixXd input;
    std::vector<Eigen::MatrixXd> pre;   // pre-activations per layer
    std::vector<Eigen::MatrixXd> post;  // activations per layer
  };
  Eigen::MatrixXd forward(const Eigen::MatrixXd& input, Cache& cache) const;

  struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Eigen::MatrixXd input;  // gradient w.r.t. the network input
  };

  /// Exact reverse-mode gradients of the forward composition. `output_grad`
  /// columns pair with the cached input columns; gradients sum over the
  /// batch (the caller owns any 1/batch scaling).
  Gradients backward(const Cache& cache, const Eigen::MatrixXd& output_grad) const;
  Gradients backward(const Eigen::VectorXd& input, const Eigen::VectorXd& output_grad) const;
};

/// target <- tau * online + (1 - tau) * target, elementwise.
void polyak_update(Mlp& target, const Mlp& online, double tau);

/// Adam with bias correction; state per parameter tensor.
class AdamOptimizer {
 public:
  AdamOptimizer(const Mlp& net, double learning_rate, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8);

  void step(Mlp& net, const Mlp::Gradients& grads);

  double learning_rate() const { return lr_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  std::int64_t t_ = 0;
  std::vector<Eigen::MatrixXd> m_w_, v_w_;
  std::vector<Eigen::VectorXd> m_b_, v_b_;
};

}  // namespace quadlab
