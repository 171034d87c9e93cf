#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qgraph/types.hpp"

namespace qgraph {

/// Gaussian corruption applied to a random subset of samples.
struct NoiseSpec {
  double sigma_noise = 0.1;
  double fraction = 1.0;  // in (0, 1]
  std::uint64_t seed = 0;
};

void validate(const NoiseSpec& spec);

/// Two interleaved Archimedean spirals (labels 0/1) with isotropic Gaussian
/// jitter of sd noise_sd; deterministic per seed.
Dataset gen_two_spirals(int n_per_class, double noise_sd = 0.02, std::uint64_t seed = 0);

/// Radially warped Gaussian arms around the origin, one arm per class.
Dataset gen_pinwheel(int n_per_class, int n_classes = 5, std::uint64_t seed = 0);

/// Adds iid zero-mean Gaussian noise (sd sigma_noise) to every feature of a
/// seeded random subset of ceil(fraction * N) samples; labels unchanged.
Dataset add_noise(const Dataset& data, const NoiseSpec& spec);

/// Headerless numeric CSV; label_column (negative counts from the end, -1 =
/// last) extracts integer labels. Optional per-column z-scoring of features.
Dataset load_csv(const std::string& path, std::optional<int> label_column = std::nullopt,
                 bool standardize = false);

/// Writes samples (and the label column, when present) as headerless CSV.
void save_csv(const Dataset& data, const std::string& path);

}  // namespace qgraph
