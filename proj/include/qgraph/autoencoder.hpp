#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/loss.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

enum class Activation { Sigmoid, Identity };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

/// Single-hidden-layer autoencoder with tied weights: the same N x P matrix
/// encodes (psi^T w) and decodes (psi h). Identity activation reduces the
/// model to a linear low-rank decomposition.
struct AutoencoderModel {
  Matrix psi;
  Activation activation = Activation::Sigmoid;

  Index n() const { return psi.rows(); }
  Index p() const { return psi.cols(); }
};

struct TrainConfig {
  QuantileParams quantile;
  int epochs = 700;
  int batch_size = 32;      // clamped to N
  double learning_rate = 0.5;
  std::uint64_t seed = 0;
  Activation activation = Activation::Sigmoid;
  int hidden_dim = 0;       // 0 = default_hidden_dim(N)
};

void validate(const TrainConfig& config);

/// Per-epoch training losses (sum of pre-update batch losses).
struct TrainReport {
  std::vector<double> epoch_loss;
};

/// max(2, ceil(n/10)) capped at 64 and at n-1.
Index default_hidden_dim(Index n);

/// Glorot-uniform init on [-s, s] with s = sqrt(6/(n+p)); deterministic per seed.
AutoencoderModel init_model(Index n, Index p, Activation activation, std::uint64_t seed);

struct ForwardResult {
  Vector hidden;
  Vector output;
};

/// hidden = phi(psi^T w_col), output = phi(psi * hidden).
ForwardResult forward(const AutoencoderModel& model, const Eigen::Ref<const Vector>& w_col);

/// Quantile-Huber objective sum_{entries} rho_tau(X - phi(psi phi(psi^T X)))
/// over a batch of columns X, with the exact gradient in psi when requested.
double objective(const AutoencoderModel& model, const Eigen::Ref<const Matrix>& columns,
                 const QuantileParams& params, Matrix* grad = nullptr);

/// Mini-batch SGD on the columns of w. Deterministic for a fixed config:
/// fixed init, fixed shuffle order, serial batch updates.
AutoencoderModel train(const Eigen::Ref<const Matrix>& w, const TrainConfig& config,
                       Index hidden_dim = 0, TrainReport* report = nullptr);

/// Column-by-column reconstruction of w, symmetrized as (W + W^T)/2.
Matrix reconstruct(const AutoencoderModel& model, const Eigen::Ref<const Matrix>& w);

/// JSON checkpoint {n, p, activation, weights row-major}.
void save_model(const AutoencoderModel& model, const std::string& path);
AutoencoderModel load_model(const std::string& path);

}  // namespace qgraph
