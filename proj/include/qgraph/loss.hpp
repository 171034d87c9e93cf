#pragma once

#include <Eigen/Core>

#include "qgraph/types.hpp"

namespace qgraph {

/// Quantile level and smoothing width of the quantile-Huber loss.
struct QuantileParams {
  double tau = 0.5;
  double kappa = 0.4;
};

/// Throws ConfigError unless 0 < tau < 1 and kappa > 0.
void validate(const QuantileParams& params);

/// Check-function (pinball) loss: (-tau + 1[r >= 0]) * r.
/// Nonnegative, zero iff r == 0; reduces to |r|/2 at tau = 0.5.
template <typename Scalar>
Scalar quantile_loss(Scalar r, Scalar tau) {
  return (r >= Scalar(0) ? (Scalar(1) - tau) : -tau) * r;
}

/// C1 smoothing of the check function: quadratic r^2/(2*kappa) on the band
/// [-kappa*tau, (1-tau)*kappa], linear with matched value/slope outside.
/// Exact breakpoints take the quadratic branch.
template <typename Scalar>
Scalar quantile_huber(Scalar r, Scalar tau, Scalar kappa) {
  if (r < -tau * kappa)
    return tau * (-r) - kappa * tau * tau / Scalar(2);
  if (r > (Scalar(1) - tau) * kappa) {
    const Scalar omt = Scalar(1) - tau;
    return omt * r - kappa * omt * omt / Scalar(2);
  }
  return r * r / (Scalar(2) * kappa);
}

/// Derivative of quantile_huber in r: -tau / r/kappa / (1-tau); continuous.
template <typename Scalar>
Scalar quantile_huber_grad(Scalar r, Scalar tau, Scalar kappa) {
  if (r < -tau * kappa) return -tau;
  if (r > (Scalar(1) - tau) * kappa) return Scalar(1) - tau;
  return r / kappa;
}

inline double quantile_huber(double r, const QuantileParams& p) {
  return quantile_huber(r, p.tau, p.kappa);
}

inline double quantile_huber_grad(double r, const QuantileParams& p) {
  return quantile_huber_grad(r, p.tau, p.kappa);
}

/// Sum of quantile_huber over all entries of a residual matrix.
double elementwise_loss(const Eigen::Ref<const Matrix>& residuals,
                        const QuantileParams& params);

}  // namespace qgraph
