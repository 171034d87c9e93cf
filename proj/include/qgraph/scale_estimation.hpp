#pragma once

#include <vector>

#include "qgraph/stochastic_graph.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

/// Full configuration of the robust scale-estimation pipeline.
struct ScaleEstimationConfig {
  int k = 7;
  std::vector<double> taus = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double delta = 0.4;
  int realizations = 25;
  double edge_threshold = 0.1;
  TrainConfig train;
  int threads = 1;
};

void validate(const ScaleEstimationConfig& config);

/// Mean distance to the neighbors given by a 0/1 adjacency; isolated vertices
/// take the fallback scale.
Vector realization_scales(const Eigen::Ref<const BinaryMatrix>& adj,
                          const Eigen::Ref<const Matrix>& dist,
                          const Eigen::Ref<const Vector>& fallback);

/// Seed of the r-th realization drawn by run_scale_estimation for a given
/// training seed; exposed so individual draws can be reproduced.
std::uint64_t realization_seed(std::uint64_t train_seed, int r);

/// Everything the pipeline produces, kept for export and inspection.
struct PipelineResult {
  Matrix distances;
  Vector knn_sigma;
  Matrix base_affinity;
  std::vector<QuantileReconstruction> reconstructions;  // nested after decay
  EdgeDecayProfile decay;
  StochasticGraph graph;
  Vector robust_sigma;
  Matrix robust_affinity;
};

/// Runs the whole pipeline: locally scaled affinity, per-quantile
/// reconstructions, edge decay, stochastic graph, R realizations, per-vertex
/// median scales, and the final affinity built from those scales.
PipelineResult run_scale_estimation(const Dataset& data, const ScaleEstimationConfig& config);

/// Median-of-realizations local scales (the pipeline's scale output).
Vector estimate_scales(const Dataset& data, const ScaleEstimationConfig& config);

/// Final affinity built from the robust scales.
Matrix robust_affinity(const Dataset& data, const ScaleEstimationConfig& config);

}  // namespace qgraph
