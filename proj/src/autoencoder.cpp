#include "qgraph/autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShuffleStream = 2;

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Matrix apply_activation(Activation act, const Matrix& x) {
  if (act == Activation::Identity) return x;
  return x.unaryExpr([](double v) { return sigmoid(v); });
}

// Derivative expressed through the activation value: s(1-s) for sigmoid.
Matrix activation_grad_from_value(Activation act, const Matrix& value) {
  if (act == Activation::Identity) return Matrix::Ones(value.rows(), value.cols());
  return (value.array() * (1.0 - value.array())).matrix();
}

void check_affinity_input(const Eigen::Ref<const Matrix>& w) {
  if (w.rows() != w.cols()) throw InputError("affinity matrix must be square");
  if (!w.allFinite()) throw InputError("affinity matrix contains non-finite entries");
}

}  // namespace

std::string to_string(Activation a) {
  return a == Activation::Sigmoid ? "sigmoid" : "identity";
}

Activation activation_from_string(const std::string& name) {
  if (name == "sigmoid") return Activation::Sigmoid;
  if (name == "identity") return Activation::Identity;
  throw ConfigError("unknown activation '" + name + "' (expected sigmoid or identity)");
}

void validate(const TrainConfig& config) {
  validate(config.quantile);
  if (config.epochs < 1) throw ConfigError("epochs must be >= 1");
  if (config.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (!(config.learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
  if (config.hidden_dim < 0) throw ConfigError("hidden_dim must be >= 0");
}

Index default_hidden_dim(Index n) {
  Index p = std::max<Index>(2, (n + 9) / 10);
  p = std::min<Index>(p, 64);
  return std::min<Index>(p, n - 1);
}

AutoencoderModel init_model(Index n, Index p, Activation activation, std::uint64_t seed) {
  if (p < 1 || p >= n)
    throw ConfigError("hidden dimension must satisfy 1 <= p < n, got p=" +
                      std::to_string(p) + " n=" + std::to_string(n));
  const double s = std::sqrt(6.0 / static_cast<double>(n + p));
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> uniform(-s, s);
  AutoencoderModel model;
  model.activation = activation;
  model.psi.resize(n, p);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < p; ++j)
      model.psi(i, j) = uniform(rng);
  return model;
}

ForwardResult forward(const AutoencoderModel& model, const Eigen::Ref<const Vector>& w_col) {
  if (w_col.size() != model.n())
    throw InputError("input column length does not match model size");
  ForwardResult r;
  Matrix hidden = apply_activation(model.activation, model.psi.transpose() * w_col);
  Matrix output = apply_activation(model.activation, model.psi * hidden);
  r.hidden = hidden.col(0);
  r.output = output.col(0);
  return r;
}

double objective(const AutoencoderModel& model, const Eigen::Ref<const Matrix>& columns,
                 const QuantileParams& params, Matrix* grad) {
  if (columns.rows() != model.n())
    throw InputError("column batch row count does not match model size");

  const Matrix pre_hidden = model.psi.transpose() * columns;      // P x B
  const Matrix hidden = apply_activation(model.activation, pre_hidden);
  const Matrix pre_out = model.psi * hidden;                      // N x B
  const Matrix output = apply_activation(model.activation, pre_out);
  const Matrix residual = columns - output;

  double loss = 0.0;
  for (Index j = 0; j < residual.cols(); ++j)
    for (Index i = 0; i < residual.rows(); ++i)
      loss += quantile_huber(residual(i, j), params.tau, params.kappa);

  if (grad) {
    Matrix dloss = residual.unaryExpr([&](double r) {
      return -quantile_huber_grad(r, params.tau, params.kappa);
    });
    const Matrix g_out = dloss.cwiseProduct(activation_grad_from_value(model.activation, output));
    const Matrix g_hidden =
        (model.psi.transpose() * g_out)
            .cwiseProduct(activation_grad_from_value(model.activation, hidden));
    *grad = g_out * hidden.transpose() + columns * g_hidden.transpose();
  }
  return loss;
}

AutoencoderModel train(const Eigen::Ref<const Matrix>& w, const TrainConfig& config,
                       Index hidden_dim, TrainReport* report) {
  validate(config);
  check_affinity_input(w);
  const Index n = w.rows();
  Index p = hidden_dim > 0 ? hidden_dim
                           : (config.hidden_dim > 0 ? config.hidden_dim : default_hidden_dim(n));

  AutoencoderModel model =
      init_model(n, p, config.activation, derive_seed(config.seed, kInitStream));
  auto shuffle_rng = make_rng(derive_seed(config.seed, kShuffleStream));

  const Index batch = std::min<Index>(config.batch_size, n);
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));

  Matrix grad;
  Matrix columns(n, batch);
  if (report) report->epoch_loss.clear();

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    double epoch_loss = 0.0;
    int batch_index = 0;
    for (Index start = 0; start < n; start += batch, ++batch_index) {
      const Index count = std::min<Index>(batch, n - start);
      for (Index c = 0; c < count; ++c) columns.col(c) = w.col(order[start + c]);
      const auto block = columns.leftCols(count);

      const double loss = objective(model, block, config.quantile, &grad);
      if (!std::isfinite(loss))
        throw TrainingError("training diverged (non-finite loss) at epoch " +
                                std::to_string(epoch) + ", batch " + std::to_string(batch_index),
                            epoch, batch_index);
      epoch_loss += loss;
      model.psi.noalias() -= (config.learning_rate / static_cast<double>(count)) * grad;
    }
    if (report) report->epoch_loss.push_back(epoch_loss);
  }
  return model;
}

Matrix reconstruct(const AutoencoderModel& model, const Eigen::Ref<const Matrix>& w) {
  check_affinity_input(w);
  if (w.rows() != model.n())
    throw InputError("matrix size " + std::to_string(w.rows()) +
                     " does not match model size " + std::to_string(model.n()));
  const Matrix hidden = apply_activation(model.activation, model.psi.transpose() * w);
  Matrix w_hat = apply_activation(model.activation, model.psi * hidden);
  return 0.5 * (w_hat + w_hat.transpose());
}

void save_model(const AutoencoderModel& model, const std::string& path) {
  nlohmann::ordered_json j;
  j["n"] = model.n();
  j["p"] = model.p();
  j["activation"] = to_string(model.activation);
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(model.psi.size()));
  for (Index i = 0; i < model.n(); ++i)
    for (Index k = 0; k < model.p(); ++k)
      weights.push_back(model.psi(i, k));
  j["weights"] = weights;
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << j.dump() << '\n';
}

AutoencoderModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed model file '" + path + "': " + e.what());
  }
  AutoencoderModel model;
  const Index n = j.at("n").get<Index>();
  const Index p = j.at("p").get<Index>();
  model.activation = activation_from_string(j.at("activation").get<std::string>());
  const auto weights = j.at("weights").get<std::vector<double>>();
  if (static_cast<Index>(weights.size()) != n * p)
    throw InputError("model file '" + path + "' has wrong weight count");
  model.psi.resize(n, p);
  std::size_t idx = 0;
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < p; ++k)
      model.psi(i, k) = weights[idx++];
  return model;
}

}  // namespace qgraph
