#pragma once

#include <Eigen/Core>

#include "qgraph/types.hpp"

namespace qgraph {

/// Dense Euclidean distance matrix: symmetric, zero diagonal.
Matrix pairwise_distances(const Dataset& data);

/// Per-sample local scale: distance to the k-th nearest neighbor, self
/// excluded. Rows whose k-th neighbor distance is 0 (duplicate points) fall
/// back to the smallest positive distance in the row; an all-zero row is an
/// InputError.
Vector knn_scales(const Eigen::Ref<const Matrix>& dist, int k);

/// Locally scaled Gaussian affinity w_ij = exp(-d_ij^2 / (sigma_i sigma_j)),
/// zero diagonal. Entries lie in [0,1] and the result is exactly symmetric.
Matrix scaled_affinity(const Eigen::Ref<const Matrix>& dist,
                       const Eigen::Ref<const Vector>& scales);

}  // namespace qgraph
