#include "qgraph/scale_estimation.hpp"

#include <algorithm>
#include <string>

#include "qgraph/affinity.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

constexpr std::uint64_t kRealizationStream = 0x2000;

double median_inplace(std::vector<double>& values) {
  const std::size_t n = values.size();
  auto mid = values.begin() + n / 2;
  std::nth_element(values.begin(), mid, values.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace

std::uint64_t realization_seed(std::uint64_t train_seed, int r) {
  return derive_seed(train_seed, kRealizationStream + r);
}

void validate(const ScaleEstimationConfig& config) {
  if (config.k < 1) throw ConfigError("k must be >= 1");
  if (config.realizations < 1) throw ConfigError("realizations must be >= 1");
  if (!(config.delta > 0.0 && config.delta < 1.0)) throw ConfigError("delta must lie in (0,1)");
  if (!(config.edge_threshold > 0.0 && config.edge_threshold < 1.0))
    throw ConfigError("edge_threshold must lie in (0,1)");
  if (config.taus.empty()) throw ConfigError("quantile grid must be non-empty");
  if (config.threads < 1) throw ConfigError("threads must be >= 1");
  validate(config.train);
}

Vector realization_scales(const Eigen::Ref<const BinaryMatrix>& adj,
                          const Eigen::Ref<const Matrix>& dist,
                          const Eigen::Ref<const Vector>& fallback) {
  const Index n = adj.rows();
  if (adj.cols() != n || dist.rows() != n || dist.cols() != n || fallback.size() != n)
    throw InputError("adjacency, distance, and fallback sizes must agree");

  Vector sigma(n);
  for (Index i = 0; i < n; ++i) {
    double sum = 0.0;
    Index count = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i || adj(i, j) == 0) continue;
      sum += dist(i, j);
      ++count;
    }
    sigma[i] = count > 0 ? sum / static_cast<double>(count) : fallback[i];
  }
  return sigma;
}

PipelineResult run_scale_estimation(const Dataset& data, const ScaleEstimationConfig& config) {
  validate(config);
  validate(data);
  if (config.k > data.size() - 1)
    throw ConfigError("k=" + std::to_string(config.k) + " exceeds N-1");

  PipelineResult result;
  result.distances = pairwise_distances(data);
  result.knn_sigma = knn_scales(result.distances, config.k);
  result.base_affinity = scaled_affinity(result.distances, result.knn_sigma);

  result.reconstructions = reconstruct_grid(result.base_affinity, config.taus, config.train,
                                            config.edge_threshold, config.threads);
  result.decay = decay_profile(result.reconstructions);
  result.graph = edge_probabilities(result.reconstructions, config.delta);

  const Index n = data.size();
  std::vector<Vector> per_realization(static_cast<std::size_t>(config.realizations));
  for (int r = 0; r < config.realizations; ++r) {
    const BinaryMatrix adj =
        sample_realization(result.graph, n, realization_seed(config.train.seed, r));
    per_realization[r] = realization_scales(adj, result.distances, result.knn_sigma);
  }

  result.robust_sigma.resize(n);
  std::vector<double> values(static_cast<std::size_t>(config.realizations));
  for (Index i = 0; i < n; ++i) {
    for (int r = 0; r < config.realizations; ++r) values[r] = per_realization[r][i];
    result.robust_sigma[i] = median_inplace(values);
  }

  result.robust_affinity = scaled_affinity(result.distances, result.robust_sigma);
  return result;
}

Vector estimate_scales(const Dataset& data, const ScaleEstimationConfig& config) {
  return run_scale_estimation(data, config).robust_sigma;
}

Matrix robust_affinity(const Dataset& data, const ScaleEstimationConfig& config) {
  return run_scale_estimation(data, config).robust_affinity;
}

}  // namespace qgraph
