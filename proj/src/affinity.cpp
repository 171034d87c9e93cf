#include "qgraph/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qgraph {

void validate(const Dataset& data) {
  if (data.samples.rows() < 2)
    throw InputError("dataset needs at least 2 samples, got " +
                     std::to_string(data.samples.rows()));
  if (data.samples.cols() < 1)
    throw InputError("dataset needs at least 1 feature");
  if (!data.samples.allFinite())
    throw InputError("dataset contains non-finite feature values");
  if (data.labels && data.labels->size() != data.samples.rows())
    throw InputError("label vector length " + std::to_string(data.labels->size()) +
                     " does not match sample count " + std::to_string(data.samples.rows()));
  if (data.labels && data.labels->size() > 0 && data.labels->minCoeff() < 0)
    throw InputError("class ids must be >= 0");
}

Matrix pairwise_distances(const Dataset& data) {
  validate(data);
  const Matrix& x = data.samples;
  const Index n = x.rows();
  const Vector sq = x.rowwise().squaredNorm();
  Matrix d2 = sq.replicate(1, n) + sq.transpose().replicate(n, 1) - 2.0 * x * x.transpose();
  Matrix d = d2.cwiseMax(0.0).cwiseSqrt();
  d.diagonal().setZero();
  // Gram-based expansion loses symmetry in the last ulp; restore it exactly.
  d = 0.5 * (d + d.transpose()).eval();
  return d;
}

Vector knn_scales(const Eigen::Ref<const Matrix>& dist, int k) {
  const Index n = dist.rows();
  if (dist.cols() != n) throw InputError("distance matrix must be square");
  if (k < 1 || k > n - 1)
    throw InputError("k must be in [1, N-1], got " + std::to_string(k));

  Vector sigma(n);
  std::vector<double> row(static_cast<std::size_t>(n) - 1);
  for (Index i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (Index j = 0; j < n; ++j)
      if (j != i) row[m++] = dist(i, j);
    std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
    double s = row[k - 1];
    if (s == 0.0) {
      // >= k duplicates of sample i; use the smallest positive distance instead.
      double smallest = std::numeric_limits<double>::infinity();
      for (double v : row)
        if (v > 0.0) smallest = std::min(smallest, v);
      if (!std::isfinite(smallest))
        throw InputError("sample " + std::to_string(i) +
                         " is identical to every other sample; no positive scale exists");
      s = smallest;
    }
    sigma[i] = s;
  }
  return sigma;
}

Matrix scaled_affinity(const Eigen::Ref<const Matrix>& dist,
                       const Eigen::Ref<const Vector>& scales) {
  const Index n = dist.rows();
  if (dist.cols() != n) throw InputError("distance matrix must be square");
  if (scales.size() != n) throw InputError("scale vector length must match matrix size");
  if (scales.minCoeff() <= 0.0 || !scales.allFinite())
    throw InputError("local scales must be strictly positive and finite");

  Matrix w(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const double v = std::exp(-dist(i, j) * dist(i, j) / (scales[i] * scales[j]));
      w(i, j) = v;
      w(j, i) = v;
    }
    w(j, j) = 0.0;
  }
  return w;
}

}  // namespace qgraph
