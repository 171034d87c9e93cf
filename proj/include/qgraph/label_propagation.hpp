#pragma once

#include <optional>

#include "qgraph/scale_estimation.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

/// Moore-Penrose pseudo-inverse of a symmetric PSD Laplacian via
/// eigendecomposition: eigenvalues below rel_tol * lambda_max are treated as
/// zero and excluded, K = sum_{lambda > cut} (1/lambda) u u^T.
Matrix laplacian_kernel(const Eigen::Ref<const Matrix>& laplacian, double rel_tol = 1e-9);

/// Squared RKHS distances S_ij = K_ii + K_jj - 2 K_ij; negative rounding
/// noise clamped to zero, exact zero diagonal.
Matrix rkhs_distances(const Eigen::Ref<const Matrix>& kernel);

/// Greedy-walk instance: RKHS distance matrix, classes of the first C
/// samples, and the walk-length cap.
struct PropagationProblem {
  Matrix dist_rkhs;
  IntVector labeled_classes;  // class of sample i, for i in [0, C)
  int maxwalk = 5;
};

void validate(const PropagationProblem& problem);

/// Labels every sample: the first C keep their given classes; each unlabeled
/// sample walks to successive unvisited nearest neighbors (stopping at a
/// labeled vertex or after maxwalk hops) while tracking the running minimum
/// distance to every labeled anchor, then takes the class of the closest
/// anchor. Ties break toward the lowest index.
IntVector greedy_propagate(const PropagationProblem& problem);

struct PropagationResult {
  IntVector labels;
  std::optional<double> accuracy;  // over the unlabeled part, when truth known
};

/// Full composition: robust affinity -> normalized Laplacian -> kernel ->
/// RKHS distances -> greedy walk. The first n_labeled samples carry the
/// seed classes (taken from data.labels); accuracy covers the rest.
PropagationResult propagate(const Dataset& data, const ScaleEstimationConfig& config,
                            int n_labeled, int maxwalk = 5);

/// Same walk on a caller-supplied affinity (used for baseline comparisons).
PropagationResult propagate_with_affinity(const Eigen::Ref<const Matrix>& w,
                                          const Dataset& data, int n_labeled, int maxwalk = 5);

}  // namespace qgraph
