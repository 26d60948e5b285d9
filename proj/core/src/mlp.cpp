#include "quadlab/mlp.hpp"

#include <cmath>
#include <random>

#include "quadlab/error.hpp"

namespace quadlab {

Activation activation_from_string(const std::string& s) {
  if (s == "relu") return Activation::Relu;
  if (s == "tanh") return Activation::Tanh;
  if (s == "linear") return Activation::Linear;
  throw ConfigError("unknown activation '" + s + "' (relu|tanh|linear)");
}

std::string activation_to_string(Activation a) {
  switch (a) {
    case Activation::Relu: return "relu";
    case Activation::Tanh: return "tanh";
    default: return "linear";
  }
}

namespace {

inline Eigen::MatrixXd apply_activation(Activation a, const Eigen::MatrixXd& z) {
  switch (a) {
    case Activation::Relu: return z.cwiseMax(0.0);
    case Activation::Tanh: return z.array().tanh().matrix();
    default: return z;
  }
}

// Derivative expressed through pre-activation z and activation value a.
inline Eigen::MatrixXd activation_grad(Activation act, const Eigen::MatrixXd& z,
                                       const Eigen::MatrixXd& a) {
  switch (act) {
    case Activation::Relu: return (z.array() > 0.0).cast<double>().matrix();
    case Activation::Tanh: return (1.0 - a.array().square()).matrix();
    default: return Eigen::MatrixXd::Ones(z.rows(), z.cols());
  }
}

}  // namespace

Mlp Mlp::create(std::vector<int> layer_sizes, Activation hidden, Activation output,
                std::uint64_t seed) {
  if (layer_sizes.size() < 2) throw ConfigError("network needs at least input and output sizes");
  for (int s : layer_sizes)
    if (s <= 0) throw ConfigError("network layer sizes must be positive");

  Mlp net;
  net.sizes = std::move(layer_sizes);
  net.hidden_activation = hidden;
  net.output_activation = output;

  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l + 1 < net.sizes.size(); ++l) {
    const int fan_in = net.sizes[l];
    const int fan_out = net.sizes[l + 1];
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::uniform_real_distribution<double> dist(-bound, bound);
    Eigen::MatrixXd w(fan_out, fan_in);
    for (int i = 0; i < fan_out; ++i)
      for (int j = 0; j < fan_in; ++j) w(i, j) = dist(rng);
    Eigen::VectorXd b(fan_out);
    for (int i = 0; i < fan_out; ++i) b(i) = dist(rng);
    net.weights.push_back(std::move(w));
    net.biases.push_back(std::move(b));
  }
  return net;
}

void Mlp::validate() const {
  if (sizes.size() < 2 || weights.size() != sizes.size() - 1 || biases.size() != weights.size())
    throw DimensionMismatch("network layer bookkeeping is inconsistent");
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (weights[l].rows() != sizes[l + 1] || weights[l].cols() != sizes[l] ||
        biases[l].size() != sizes[l + 1])
      throw DimensionMismatch("layer " + std::to_string(l) + " has mismatched dimensions");
    if (!weights[l].allFinite() || !biases[l].allFinite())
      throw DimensionMismatch("layer " + std::to_string(l) + " has non-finite parameters");
  }
}

Eigen::VectorXd Mlp::forward(const Eigen::VectorXd& input) const {
  return forward(Eigen::MatrixXd(input)).col(0);
}

Eigen::MatrixXd Mlp::forward(const Eigen::MatrixXd& input) const {
  if (input.rows() != input_dim())
    throw DimensionMismatch("forward: input has " + std::to_string(input.rows()) +
                            " rows, expected " + std::to_string(input_dim()));
  Eigen::MatrixXd a = input;
  for (int l = 0; l < layer_count(); ++l) {
    Eigen::MatrixXd z = (weights[l] * a).colwise() + biases[l];
    const Activation act = (l + 1 == layer_count()) ? output_activation : hidden_activation;
    a = apply_activation(act, z);
  }
  return a;
}

Eigen::MatrixXd Mlp::forward(const Eigen::MatrixXd& input, Cache& cache) const {
  if (input.rows() != input_dim())
    throw DimensionMismatch("forward: input has " + std::to_string(input.rows()) +
                            " rows, expected " + std::to_string(input_dim()));
  cache.input = input;
  cache.pre.resize(layer_count());
  cache.post.resize(layer_count());
  const Eigen::MatrixXd* a = &cache.input;
  for (int l = 0; l < layer_count(); ++l) {
    cache.pre[l] = (weights[l] * (*a)).colwise() + biases[l];
    const Activation act = (l + 1 == layer_count()) ? output_activation : hidden_activation;
    cache.post[l] = apply_activation(act, cache.pre[l]);
    a = &cache.post[l];
  }
  return cache.post.back();
}

Mlp::Gradients Mlp::backward(const Cache& cache, const Eigen::MatrixXd& output_grad) const {
  const int layers = layer_count();
  if (output_grad.rows() != output_dim() || output_grad.cols() != cache.input.cols())
    throw DimensionMismatch("backward: output_grad shape does not match the cached forward");

  Gradients g;
  g.weights.resize(layers);
  g.biases.resize(layers);

  Eigen::MatrixXd delta =
      output_grad.cwiseProduct(activation_grad(output_activation, cache.pre[layers - 1],
                                               cache.post[layers - 1]));
  for (int l = layers - 1; l >= 0; --l) {
    const Eigen::MatrixXd& below = (l == 0) ? cache.input : cache.post[l - 1];
    g.weights[l].noalias() = delta * below.transpose();
    g.biases[l] = delta.rowwise().sum();
    if (l > 0) {
      Eigen::MatrixXd da = weights[l].transpose() * delta;
      delta = da.cwiseProduct(activation_grad(hidden_activation, cache.pre[l - 1],
                                              cache.post[l - 1]));
    } else {
      g.input = weights[0].transpose() * delta;
    }
  }
  return g;
}

Mlp::Gradients Mlp::backward(const Eigen::VectorXd& input,
                             const Eigen::VectorXd& output_grad) const {
  Cache cache;
  forward(Eigen::MatrixXd(input), cache);
  return backward(cache, Eigen::MatrixXd(output_grad));
}

void polyak_update(Mlp& target, const Mlp& online, double tau) {
  if (target.sizes != online.sizes)
    throw DimensionMismatch("polyak_update: networks have different architectures");
  for (int l = 0; l < target.layer_count(); ++l) {
    target.weights[l] = tau * online.weights[l] + (1.0 - tau) * target.weights[l];
    target.biases[l] = tau * online.biases[l] + (1.0 - tau) * target.biases[l];
  }
}

AdamOptimizer::AdamOptimizer(const Mlp& net, double learning_rate, double beta1, double beta2,
                             double epsilon)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {
  for (int l = 0; l < net.layer_count(); ++l) {
    m_w_.push_back(Eigen::MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols()));
    v_w_.push_back(Eigen::MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols()));
    m_b_.push_back(Eigen::VectorXd::Zero(net.biases[l].size()));
    v_b_.push_back(Eigen::VectorXd::Zero(net.biases[l].size()));
  }
}

void AdamOptimizer::step(Mlp& net, const Mlp::Gradients& grads) {
  if (grads.weights.size() != m_w_.size())
    throw DimensionMismatch("adam: gradient layer count does not match optimizer state");
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t l = 0; l < m_w_.size(); ++l) {
    m_w_[l] = beta1_ * m_w_[l] + (1.0 - beta1_) * grads.weights[l];
    v_w_[l] = beta2_ * v_w_[l] + (1.0 - beta2_) * grads.weights[l].cwiseProduct(grads.weights[l]);
    net.weights[l].array() -=
        lr_ * (m_w_[l].array() / bc1) / ((v_w_[l].array() / bc2).sqrt() + eps_);

    m_b_[l] = beta1_ * m_b_[l] + (1.0 - beta1_) * grads.biases[l];
    v_b_[l] = beta2_ * v_b_[l] + (1.0 - beta2_) * grads.biases[l].cwiseProduct(grads.biases[l]);
    net.biases[l].array() -=
        lr_ * (m_b_[l].array() / bc1) / ((v_b_[l].array() / bc2).sqrt() + eps_);
  }
}

}  // namespace quadlab
