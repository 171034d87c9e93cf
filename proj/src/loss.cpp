#include "qgraph/loss.hpp"

#include <string>

namespace qgraph {

void validate(const QuantileParams& params) {
  if (!(params.tau > 0.0 && params.tau < 1.0))
    throw ConfigError("tau must lie in (0,1), got " + std::to_string(params.tau));
  if (!(params.kappa > 0.0))
    throw ConfigError("kappa must be > 0, got " + std::to_string(params.kappa));
}

double elementwise_loss(const Eigen::Ref<const Matrix>& residuals,
                        const QuantileParams& params) {
  validate(params);
  if (!residuals.allFinite()) throw InputError("residual matrix contains non-finite entries");
  double total = 0.0;
  for (Index j = 0; j < residuals.cols(); ++j)
    for (Index i = 0; i < residuals.rows(); ++i)
      total += quantile_huber(residuals(i, j), params.tau, params.kappa);
  return total;
}

}  // namespace qgraph
