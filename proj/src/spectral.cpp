#include "qgraph/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

void check_square_symmetric(const Eigen::Ref<const Matrix>& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + " must be square");
  if (!m.allFinite()) throw InputError(std::string(what) + " contains non-finite entries");
}

// One Lloyd run from a k-means++ seeding; returns inertia.
double lloyd_run(const Eigen::Ref<const Matrix>& points, int c, std::mt19937_64& rng,
                 int max_iter, IntVector& assignments) {
  const Index n = points.rows();
  Matrix centroids(c, points.cols());
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  // k-means++ seeding.
  std::uniform_int_distribution<Index> pick(0, n - 1);
  centroids.row(0) = points.row(pick(rng));
  Vector d2 = (points.rowwise() - centroids.row(0)).rowwise().squaredNorm();
  for (int k = 1; k < c; ++k) {
    const double total = d2.sum();
    Index chosen = 0;
    if (total > 0.0) {
      const double target = uniform(rng) * total;
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = pick(rng);
    }
    centroids.row(k) = points.row(chosen);
    d2 = d2.cwiseMin((points.rowwise() - centroids.row(k)).rowwise().squaredNorm());
  }

  assignments.resize(n);
  assignments.setZero();
  IntVector counts(c);
  double inertia = 0.0;

  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    inertia = 0.0;
    for (Index i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      int best_k = 0;
      for (int k = 0; k < c; ++k) {
        const double dist = (points.row(i) - centroids.row(k)).squaredNorm();
        if (dist < best) {
          best = dist;
          best_k = k;
        }
      }
      if (assignments[i] != best_k) {
        assignments[i] = best_k;
        changed = true;
      }
      inertia += best;
    }

    counts.setZero();
    Matrix sums = Matrix::Zero(c, points.cols());
    for (Index i = 0; i < n; ++i) {
      sums.row(assignments[i]) += points.row(i);
      counts[assignments[i]] += 1;
    }
    for (int k = 0; k < c; ++k) {
      if (counts[k] > 0) {
        centroids.row(k) = sums.row(k) / counts[k];
      } else {
        // Re-seed an empty cluster from the point farthest from its centroid.
        Index farthest = 0;
        double worst = -1.0;
        for (Index i = 0; i < n; ++i) {
          const double dist = (points.row(i) - centroids.row(assignments[i])).squaredNorm();
          if (dist > worst) {
            worst = dist;
            farthest = i;
          }
        }
        centroids.row(k) = points.row(farthest);
        changed = true;
      }
    }
    if (!changed && iter > 0) break;
  }
  return inertia;
}

double entropy(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double c : counts) {
    if (c <= 0.0) continue;
    const double p = c / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

Matrix normalized_laplacian(const Eigen::Ref<const Matrix>& w) {
  check_square_symmetric(w, "affinity matrix");
  const Index n = w.rows();
  Vector degree = w.rowwise().sum();
  for (Index i = 0; i < n; ++i)
    if (!(degree[i] > 0.0))
      throw DegenerateGraphError("vertex " + std::to_string(i) + " has zero degree", i);

  const Vector inv_sqrt = degree.array().rsqrt();
  Matrix l = -(inv_sqrt * inv_sqrt.transpose()).cwiseProduct(w);
  l.diagonal().array() += 1.0;  // I - D^{-1/2} W D^{-1/2}
  l = 0.5 * (l + l.transpose()).eval();
  return l;
}

Matrix spectral_embed(const Eigen::Ref<const Matrix>& laplacian, int c) {
  check_square_symmetric(laplacian, "laplacian");
  const Index n = laplacian.rows();
  if (c < 2 || c > n) throw ConfigError("cluster count must lie in [2, N]");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(laplacian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen decomposition of the laplacian failed to converge");

  Matrix embedding = solver.eigenvectors().leftCols(c);
  for (Index i = 0; i < n; ++i) {
    const double norm = embedding.row(i).norm();
    if (norm > 0.0) embedding.row(i) /= norm;
  }
  return embedding;
}

IntVector kmeans(const Eigen::Ref<const Matrix>& points, int c, std::uint64_t seed,
                 int restarts, int max_iter) {
  const Index n = points.rows();
  if (c < 1 || c > n) throw ConfigError("cluster count must lie in [1, N]");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  if (c == 1) return IntVector::Zero(n);

  auto rng = make_rng(seed);
  IntVector best_assignments, assignments;
  double best_inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    const double inertia = lloyd_run(points, c, rng, max_iter, assignments);
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best_assignments = assignments;
    }
  }
  return best_assignments;
}

double nmi(const Eigen::Ref<const IntVector>& y, const Eigen::Ref<const IntVector>& y_hat) {
  if (y.size() != y_hat.size()) throw InputError("label vectors must have equal length");
  if (y.size() == 0) throw InputError("label vectors must be non-empty");
  const Index n = y.size();
  const int cy = y.maxCoeff() + 1;
  const int ch = y_hat.maxCoeff() + 1;
  if (y.minCoeff() < 0 || y_hat.minCoeff() < 0) throw InputError("class ids must be >= 0");

  Matrix joint = Matrix::Zero(cy, ch);
  for (Index i = 0; i < n; ++i) joint(y[i], y_hat[i]) += 1.0;

  std::vector<double> row_counts(cy, 0.0), col_counts(ch, 0.0);
  for (int a = 0; a < cy; ++a)
    for (int b = 0; b < ch; ++b) {
      row_counts[a] += joint(a, b);
      col_counts[b] += joint(a, b);
    }

  const double nn = static_cast<double>(n);
  const double hy = entropy(row_counts, nn);
  const double hh = entropy(col_counts, nn);
  if (hy == 0.0 && hh == 0.0) return 1.0;  // both constant: identical partitions
  if (hy == 0.0 || hh == 0.0) return 0.0;

  double mi = 0.0;
  for (int a = 0; a < cy; ++a)
    for (int b = 0; b < ch; ++b) {
      const double c = joint(a, b);
      if (c <= 0.0) continue;
      mi += (c / nn) * std::log(c * nn / (row_counts[a] * col_counts[b]));
    }
  const double value = 2.0 * mi / (hy + hh);
  return std::min(1.0, std::max(0.0, value));
}

ClusteringResult spectral_cluster(const Eigen::Ref<const Matrix>& w, int c, std::uint64_t seed,
                                  int restarts, const std::optional<IntVector>& truth) {
  ClusteringResult result;
  result.n_clusters = c;
  const Matrix laplacian = normalized_laplacian(w);
  const Matrix embedding = spectral_embed(laplacian, c);
  result.assignments = kmeans(embedding, c, seed, restarts);
  if (truth) result.nmi = nmi(*truth, result.assignments);
  return result;
}

}  // namespace qgraph
