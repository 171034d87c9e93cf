#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qgraph/autoencoder.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

/// Undirected edge with i < j.
using Edge = std::pair<int, int>;

/// Affinity reconstructed at one quantile plus its thresholded edge set
/// (edges kept sorted lexicographically).
struct QuantileReconstruction {
  double tau = 0.0;
  Matrix w_hat;
  std::vector<Edge> edges;
};

/// Edge counts beta_tau over an ascending quantile grid.
struct EdgeDecayProfile {
  std::vector<double> taus;
  std::vector<std::size_t> beta;
};

/// Edge-persistence probabilities over the base (lowest-quantile) edge set.
/// prob[k] belongs to base_edges[k]; edges outside the base set have
/// probability 0 and are not stored.
struct StochasticGraph {
  std::vector<Edge> base_edges;
  std::vector<double> prob;
  double delta = 0.4;
};

/// Upper-triangle threshold: {(i,j) : i < j, w_hat(i,j) >= threshold}.
std::vector<Edge> edge_set(const Eigen::Ref<const Matrix>& w_hat, double threshold);

/// Trains one autoencoder per quantile and thresholds each symmetrized
/// reconstruction. Per-tau seeds derive from config.seed and the tau index,
/// so entries are independent and may be trained in parallel (threads > 1).
std::vector<QuantileReconstruction> reconstruct_grid(const Eigen::Ref<const Matrix>& w,
                                                     const std::vector<double>& taus,
                                                     const TrainConfig& config,
                                                     double edge_threshold,
                                                     int threads = 1);

/// Enforces nesting in place (edges at tau_k are intersected with tau_{k-1})
/// and returns the resulting non-increasing counts.
EdgeDecayProfile decay_profile(std::vector<QuantileReconstruction>& recs);

/// Eq.-style persistence probabilities p(e) = max(delta, 1 - beta_tauhat/beta_base)
/// where tauhat is the highest quantile at which e survives. Requires nested
/// reconstructions (run decay_profile first).
StochasticGraph edge_probabilities(const std::vector<QuantileReconstruction>& recs,
                                   double delta);

/// Independent Bernoulli draw per base edge; symmetric 0/1 adjacency.
BinaryMatrix sample_realization(const StochasticGraph& graph, Index n, std::uint64_t seed);

}  // namespace qgraph
