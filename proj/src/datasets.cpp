#include "qgraph/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw InputError("non-numeric cell at row " + std::to_string(row + 1) + ", column " +
                     std::to_string(col + 1) + ": '" + cell + "'");
  return value;
}

}  // namespace

void validate(const NoiseSpec& spec) {
  if (!(spec.sigma_noise > 0.0)) throw ConfigError("sigma_noise must be > 0");
  if (!(spec.fraction > 0.0 && spec.fraction <= 1.0))
    throw ConfigError("fraction must lie in (0,1]");
}

Dataset gen_two_spirals(int n_per_class, double noise_sd, std::uint64_t seed) {
  if (n_per_class < 10) throw ConfigError("n_per_class must be >= 10");
  if (noise_sd < 0.0) throw ConfigError("noise_sd must be >= 0");

  const int n = 2 * n_per_class;
  const double t_min = 0.25, t_max = 1.0;
  const double omega = 2.0 * kPi;

  Dataset data;
  data.samples.resize(n, 2);
  IntVector labels(n);
  auto rng = make_rng(seed);
  std::normal_distribution<double> jitter(0.0, 1.0);

  for (int arm = 0; arm < 2; ++arm) {
    const double rotation = arm == 0 ? 0.0 : kPi;
    for (int i = 0; i < n_per_class; ++i) {
      // sqrt spacing makes the points near-uniform in arc length
      const double u = static_cast<double>(i) / (n_per_class - 1);
      const double t = std::sqrt(t_min * t_min + (t_max * t_max - t_min * t_min) * u);
      const double angle = omega * t + rotation;
      const int row = arm * n_per_class + i;
      data.samples(row, 0) = t * std::cos(angle) + noise_sd * jitter(rng);
      data.samples(row, 1) = t * std::sin(angle) + noise_sd * jitter(rng);
      labels[row] = arm;
    }
  }
  data.labels = labels;
  return data;
}

Dataset gen_pinwheel(int n_per_class, int n_classes, std::uint64_t seed) {
  if (n_per_class < 1) throw ConfigError("n_per_class must be >= 1");
  if (n_classes < 2) throw ConfigError("n_classes must be >= 2");

  const double radial_std = 0.3;
  const double tangential_std = 0.05;
  const double rate = 0.25;

  const int n = n_classes * n_per_class;
  Dataset data;
  data.samples.resize(n, 2);
  IntVector labels(n);
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int c = 0; c < n_classes; ++c) {
    const double base_angle = 2.0 * kPi * c / n_classes;
    for (int i = 0; i < n_per_class; ++i) {
      const double radial = 1.0 + radial_std * gauss(rng);
      const double tangential = tangential_std * gauss(rng);
      const double angle = base_angle + rate * std::exp(radial);
      const int row = c * n_per_class + i;
      data.samples(row, 0) = radial * std::cos(angle) - tangential * std::sin(angle);
      data.samples(row, 1) = radial * std::sin(angle) + tangential * std::cos(angle);
      labels[row] = c;
    }
  }
  data.labels = labels;
  return data;
}

Dataset add_noise(const Dataset& data, const NoiseSpec& spec) {
  validate(spec);
  validate(data);
  const Index n = data.size();
  const Index affected =
      std::min<Index>(n, static_cast<Index>(std::ceil(spec.fraction * static_cast<double>(n))));

  auto rng = make_rng(spec.seed);
  std::vector<Index> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), Index(0));
  // Partial Fisher-Yates: the first `affected` entries are the chosen rows.
  for (Index i = 0; i < affected; ++i) {
    std::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(rows[i], rows[pick(rng)]);
  }

  std::normal_distribution<double> gauss(0.0, spec.sigma_noise);
  Dataset noisy = data;
  for (Index i = 0; i < affected; ++i)
    for (Index d = 0; d < data.dim(); ++d)
      noisy.samples(rows[i], d) += gauss(rng);
  return noisy;
}

Dataset load_csv(const std::string& path, std::optional<int> label_column, bool standardize) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      ++lineno;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ss, cell, ',')) row.push_back(parse_cell(cell, lineno, col++));
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("ragged row " + std::to_string(lineno + 1) + ": expected " +
                       std::to_string(rows.front().size()) + " cells, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
    ++lineno;
  }
  if (rows.size() < 2) throw InputError("'" + path + "' needs at least 2 data rows");

  const int total_cols = static_cast<int>(rows.front().size());
  int label_idx = -1;
  if (label_column) {
    label_idx = *label_column < 0 ? total_cols + *label_column : *label_column;
    if (label_idx < 0 || label_idx >= total_cols)
      throw InputError("label column " + std::to_string(*label_column) +
                       " out of range for " + std::to_string(total_cols) + " columns");
    if (total_cols < 2) throw InputError("no feature columns left after removing labels");
  }

  Dataset data;
  const Index n = static_cast<Index>(rows.size());
  const Index d = total_cols - (label_idx >= 0 ? 1 : 0);
  data.samples.resize(n, d);
  IntVector labels(n);
  for (Index i = 0; i < n; ++i) {
    Index feat = 0;
    for (int c = 0; c < total_cols; ++c) {
      if (c == label_idx) {
        const double v = rows[i][c];
        if (std::abs(v - std::round(v)) > 1e-9)
          throw InputError("non-integer label at row " + std::to_string(i + 1) + ", column " +
                           std::to_string(c + 1));
        labels[i] = static_cast<int>(std::llround(v));
      } else {
        data.samples(i, feat++) = rows[i][c];
      }
    }
  }
  if (label_idx >= 0) data.labels = labels;

  if (standardize) {
    for (Index c = 0; c < data.dim(); ++c) {
      const double mean = data.samples.col(c).mean();
      data.samples.col(c).array() -= mean;
      const double sd = std::sqrt(data.samples.col(c).squaredNorm() / static_cast<double>(n));
      if (sd > 0.0) data.samples.col(c) /= sd;
    }
  }
  validate(data);
  return data;
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  char buf[64];
  for (Index i = 0; i < data.size(); ++i) {
    for (Index c = 0; c < data.dim(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.samples(i, c));
      out << buf;
      if (c + 1 < data.dim() || data.has_labels()) out << ',';
    }
    if (data.has_labels()) out << (*data.labels)[i];
    out << '\n';
  }
}

}  // namespace qgraph
