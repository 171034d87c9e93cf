#include "qgraph/label_propagation.hpp"

#include <Eigen/Eigenvalues>

#include <limits>
#include <string>
#include <vector>

#include "qgraph/spectral.hpp"

namespace qgraph {

Matrix laplacian_kernel(const Eigen::Ref<const Matrix>& laplacian, double rel_tol) {
  if (laplacian.rows() != laplacian.cols()) throw InputError("laplacian must be square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(laplacian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen decomposition of the laplacian failed to converge");

  const Vector& values = solver.eigenvalues();
  const double lambda_max = values.cwiseAbs().maxCoeff();
  if (lambda_max <= 0.0)
    throw DegenerateGraphError("laplacian spectrum is entirely zero; kernel undefined");
  const double cut = rel_tol * lambda_max;

  Vector inv = Vector::Zero(values.size());
  for (Index i = 0; i < values.size(); ++i)
    if (values[i] > cut) inv[i] = 1.0 / values[i];
  Matrix kernel =
      solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
  kernel = 0.5 * (kernel + kernel.transpose()).eval();
  return kernel;
}

Matrix rkhs_distances(const Eigen::Ref<const Matrix>& kernel) {
  if (kernel.rows() != kernel.cols()) throw InputError("kernel must be square");
  const Vector diag = kernel.diagonal();
  Matrix s = diag.replicate(1, kernel.rows()) + diag.transpose().replicate(kernel.rows(), 1) -
             2.0 * kernel;
  s = s.cwiseMax(0.0);
  s = 0.5 * (s + s.transpose()).eval();
  s.diagonal().setZero();
  return s;
}

void validate(const PropagationProblem& problem) {
  const Index n = problem.dist_rkhs.rows();
  const Index c = problem.labeled_classes.size();
  if (problem.dist_rkhs.cols() != n) throw InputError("distance matrix must be square");
  if (c < 2) throw InputError("need at least 2 labeled samples");
  if (c >= n) throw InputError("need at least one unlabeled sample");
  if (problem.labeled_classes.minCoeff() < 0) throw InputError("class ids must be >= 0");
  if (problem.maxwalk < 0) throw ConfigError("maxwalk must be >= 0");
}

IntVector greedy_propagate(const PropagationProblem& problem) {
  validate(problem);
  const Matrix& s = problem.dist_rkhs;
  const Index n = s.rows();
  const Index c = problem.labeled_classes.size();

  IntVector labels(n);
  labels.head(c) = problem.labeled_classes;

  std::vector<char> visited(static_cast<std::size_t>(n));
  Vector gamma(c);

  for (Index j = c; j < n; ++j) {
    std::fill(visited.begin(), visited.end(), 0);
    visited[j] = 1;
    Index ind = j;
    for (Index i = 0; i < c; ++i) gamma[i] = s(j, i);

    for (int iter = 0; iter < problem.maxwalk; ++iter) {
      // Unvisited nearest neighbor of the current vertex.
      Index t = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Index v = 0; v < n; ++v) {
        if (visited[v]) continue;
        if (s(ind, v) < best) {
          best = s(ind, v);
          t = v;
        }
      }
      if (t < 0 || t < c) break;  // exhausted, or reached a labeled vertex
      ind = t;
      visited[t] = 1;
      for (Index i = 0; i < c; ++i) gamma[i] = std::min(gamma[i], s(ind, i));
    }

    Index anchor = 0;
    for (Index i = 1; i < c; ++i)
      if (gamma[i] < gamma[anchor]) anchor = i;
    labels[j] = problem.labeled_classes[anchor];
  }
  return labels;
}

namespace {

PropagationResult propagate_impl(const Matrix& w, const Dataset& data, int n_labeled,
                                 int maxwalk) {
  if (!data.has_labels()) throw InputError("propagation needs labeled seed samples");
  if (n_labeled < 2 || n_labeled >= data.size())
    throw InputError("n_labeled must lie in [2, N-1], got " + std::to_string(n_labeled));

  PropagationProblem problem;
  problem.dist_rkhs = rkhs_distances(laplacian_kernel(normalized_laplacian(w)));
  problem.labeled_classes = data.labels->head(n_labeled);
  problem.maxwalk = maxwalk;

  PropagationResult result;
  result.labels = greedy_propagate(problem);

  Index correct = 0;
  for (Index i = n_labeled; i < data.size(); ++i)
    if (result.labels[i] == (*data.labels)[i]) ++correct;
  result.accuracy =
      static_cast<double>(correct) / static_cast<double>(data.size() - n_labeled);
  return result;
}

}  // namespace

PropagationResult propagate(const Dataset& data, const ScaleEstimationConfig& config,
                            int n_labeled, int maxwalk) {
  return propagate_impl(robust_affinity(data, config), data, n_labeled, maxwalk);
}

PropagationResult propagate_with_affinity(const Eigen::Ref<const Matrix>& w,
                                          const Dataset& data, int n_labeled, int maxwalk) {
  return propagate_impl(w, data, n_labeled, maxwalk);
}

}  // namespace qgraph
