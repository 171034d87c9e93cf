#pragma once

#include <cstdint>
#include <optional>

#include "qgraph/types.hpp"

namespace qgraph {

struct ClusteringResult {
  IntVector assignments;
  int n_clusters = 0;
  std::optional<double> nmi;
};

/// Symmetric normalized Laplacian L = D^{-1/2} (D - W) D^{-1/2}.
/// Throws DegenerateGraphError naming the first zero-degree vertex.
Matrix normalized_laplacian(const Eigen::Ref<const Matrix>& w);

/// Eigenvectors of the c smallest Laplacian eigenvalues, rows rescaled to
/// unit norm (zero rows left as zero).
Matrix spectral_embed(const Eigen::Ref<const Matrix>& laplacian, int c);

/// Lloyd's algorithm with k-means++ seeding, best of `restarts` runs.
/// Empty clusters are re-seeded from the point farthest from its centroid.
IntVector kmeans(const Eigen::Ref<const Matrix>& points, int c, std::uint64_t seed,
                 int restarts = 10, int max_iter = 300);

/// Normalized mutual information 2 I(Y;Yhat) / (H(Y) + H(Yhat)), natural-log
/// entropies, in [0,1]. Two constant labelings give 1; exactly one constant
/// labeling gives 0.
double nmi(const Eigen::Ref<const IntVector>& y, const Eigen::Ref<const IntVector>& y_hat);

/// normalized_laplacian -> spectral_embed -> kmeans. When ground truth is
/// given the result carries its NMI.
ClusteringResult spectral_cluster(const Eigen::Ref<const Matrix>& w, int c, std::uint64_t seed,
                                  int restarts = 10,
                                  const std::optional<IntVector>& truth = std::nullopt);

}  // namespace qgraph
