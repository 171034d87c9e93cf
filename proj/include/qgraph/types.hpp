#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace qgraph {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using BinaryMatrix = Eigen::MatrixXi;
using Index = Eigen::Index;

/// Thrown on malformed inputs (bad shapes, non-finite entries, parse failures).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown on invalid configuration values.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when SGD produces a non-finite loss; records where it happened.
class TrainingError : public std::runtime_error {
public:
  TrainingError(const std::string& msg, int epoch, int batch)
      : std::runtime_error(msg), epoch(epoch), batch(batch) {}
  int epoch;
  int batch;
};

/// Thrown for graphs the spectral machinery cannot handle (zero-degree
/// vertices, empty base edge sets, all-zero spectra).
class DegenerateGraphError : public std::runtime_error {
public:
  explicit DegenerateGraphError(const std::string& msg, Index vertex = -1)
      : std::runtime_error(msg), vertex(vertex) {}
  Index vertex;
};

/// N samples by D features, with optional integer class labels.
struct Dataset {
  Matrix samples;
  std::optional<IntVector> labels;

  Index size() const { return samples.rows(); }
  Index dim() const { return samples.cols(); }
  bool has_labels() const { return labels.has_value(); }
};

/// Checks the Dataset invariants; throws InputError on violation.
void validate(const Dataset& data);

}  // namespace qgraph
