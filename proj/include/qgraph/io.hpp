#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/stochastic_graph.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

/// Dense row-major CSV with full round-trip precision.
void write_matrix_csv(const Eigen::Ref<const Matrix>& m, const std::string& path);
Matrix read_matrix_csv(const std::string& path);

/// Row-major JSON: {"rows": r, "cols": c, "data": [...]}.
void write_matrix_json(const Eigen::Ref<const Matrix>& m, const std::string& path);

/// "tau,beta" CSV for plotting edge-decay curves.
void write_decay_csv(const EdgeDecayProfile& profile, const std::string& path);

/// "i,j,probability" CSV of the stochastic graph's base edges.
void write_edge_probabilities_csv(const StochasticGraph& graph, const std::string& path);

/// FNV-1a 64-bit digest of a file, rendered as 16 hex digits.
std::string file_checksum(const std::string& path);

}  // namespace qgraph
