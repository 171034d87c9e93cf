#include "qgraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgraph {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void write_matrix_csv(const Eigen::Ref<const Matrix>& m, const std::string& path) {
  auto out = open_out(path);
  char buf[64];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << buf;
      if (j + 1 < m.cols()) out << ',';
    }
    out << '\n';
  }
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InputError("non-numeric cell '" + cell + "' in '" + path + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("ragged matrix row in '" + path + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("'" + path + "' is empty");
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[i][j];
  return m;
}

void write_matrix_json(const Eigen::Ref<const Matrix>& m, const std::string& path) {
  auto out = open_out(path);
  char buf[64];
  out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"data\":[";
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << buf;
      if (i + 1 < m.rows() || j + 1 < m.cols()) out << ',';
    }
  out << "]}\n";
}

void write_decay_csv(const EdgeDecayProfile& profile, const std::string& path) {
  auto out = open_out(path);
  out << "tau,beta\n";
  char buf[32];
  for (std::size_t i = 0; i < profile.taus.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%g", profile.taus[i]);
    out << buf << ',' << profile.beta[i] << '\n';
  }
}

void write_edge_probabilities_csv(const StochasticGraph& graph, const std::string& path) {
  auto out = open_out(path);
  out << "i,j,probability\n";
  char buf[64];
  for (std::size_t e = 0; e < graph.base_edges.size(); ++e) {
    std::snprintf(buf, sizeof(buf), "%.17g", graph.prob[e]);
    out << graph.base_edges[e].first << ',' << graph.base_edges[e].second << ',' << buf << '\n';
  }
}

std::string file_checksum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for checksum");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char chunk[4096];
  while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace qgraph
