#include "qgraph/stochastic_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

constexpr std::uint64_t kTauStream = 0x100;

std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.first) << 32) | static_cast<std::uint32_t>(e.second);
}

void check_tau_grid(const std::vector<double>& taus) {
  if (taus.empty()) throw ConfigError("quantile grid must be non-empty");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0 && taus[i] < 1.0))
      throw ConfigError("quantiles must lie in (0,1), got " + std::to_string(taus[i]));
    if (i > 0 && !(taus[i] > taus[i - 1]))
      throw ConfigError("quantile grid must be strictly ascending");
  }
}

}  // namespace

std::vector<Edge> edge_set(const Eigen::Ref<const Matrix>& w_hat, double threshold) {
  if (w_hat.rows() != w_hat.cols()) throw InputError("matrix must be square");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ConfigError("edge threshold must lie in (0,1)");
  std::vector<Edge> edges;
  const int n = static_cast<int>(w_hat.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w_hat(i, j) >= threshold) edges.emplace_back(i, j);
  return edges;
}

std::vector<QuantileReconstruction> reconstruct_grid(const Eigen::Ref<const Matrix>& w,
                                                     const std::vector<double>& taus,
                                                     const TrainConfig& config,
                                                     double edge_threshold,
                                                     int threads) {
  check_tau_grid(taus);
  validate(config);
  const std::size_t count = taus.size();
  std::vector<QuantileReconstruction> recs(count);
  std::vector<std::exception_ptr> errors(count);

  auto run_one = [&](std::size_t it) {
    try {
      TrainConfig local = config;
      local.quantile.tau = taus[it];
      local.seed = derive_seed(config.seed, kTauStream + it);
      AutoencoderModel model = train(w, local);
      recs[it].tau = taus[it];
      recs[it].w_hat = reconstruct(model, w);
      recs[it].edges = edge_set(recs[it].w_hat, edge_threshold);
    } catch (const TrainingError& e) {
      errors[it] = std::make_exception_ptr(TrainingError(
          "tau=" + std::to_string(taus[it]) + ": " + e.what(), e.epoch, e.batch));
    } catch (...) {
      errors[it] = std::current_exception();
    }
  };

  if (threads <= 1) {
    for (std::size_t it = 0; it < count; ++it) run_one(it);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(threads, static_cast<int>(count));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t it = next.fetch_add(1); it < count; it = next.fetch_add(1)) run_one(it);
      });
    for (auto& th : pool) th.join();
  }

  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return recs;
}

EdgeDecayProfile decay_profile(std::vector<QuantileReconstruction>& recs) {
  if (recs.empty()) throw InputError("need at least one reconstruction");
  EdgeDecayProfile profile;
  profile.taus.reserve(recs.size());
  profile.beta.reserve(recs.size());
  for (std::size_t k = 0; k < recs.size(); ++k) {
    if (k > 0) {
      std::vector<Edge> nested;
      nested.reserve(recs[k].edges.size());
      std::set_intersection(recs[k].edges.begin(), recs[k].edges.end(),
                            recs[k - 1].edges.begin(), recs[k - 1].edges.end(),
                            std::back_inserter(nested));
      recs[k].edges = std::move(nested);
    }
    profile.taus.push_back(recs[k].tau);
    profile.beta.push_back(recs[k].edges.size());
  }
  return profile;
}

StochasticGraph edge_probabilities(const std::vector<QuantileReconstruction>& recs,
                                   double delta) {
  if (recs.empty()) throw InputError("need at least one reconstruction");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0,1)");
  const std::size_t base_count = recs[0].edges.size();
  if (base_count == 0)
    throw DegenerateGraphError("base reconstruction (tau=" + std::to_string(recs[0].tau) +
                               ") has no edges");

  std::vector<std::unordered_set<std::uint64_t>> members(recs.size());
  for (std::size_t k = 1; k < recs.size(); ++k) {
    members[k].reserve(recs[k].edges.size() * 2);
    for (const Edge& e : recs[k].edges) members[k].insert(edge_key(e));
  }

  StochasticGraph graph;
  graph.delta = delta;
  graph.base_edges = recs[0].edges;
  graph.prob.resize(base_count);
  const double beta_base = static_cast<double>(base_count);
  for (std::size_t e = 0; e < base_count; ++e) {
    const std::uint64_t key = edge_key(graph.base_edges[e]);
    std::size_t last = 0;
    while (last + 1 < recs.size() && members[last + 1].count(key)) ++last;
    const double beta_hat = static_cast<double>(recs[last].edges.size());
    graph.prob[e] = std::max(delta, 1.0 - beta_hat / beta_base);
  }
  return graph;
}

BinaryMatrix sample_realization(const StochasticGraph& graph, Index n, std::uint64_t seed) {
  BinaryMatrix adj = BinaryMatrix::Zero(n, n);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::size_t e = 0; e < graph.base_edges.size(); ++e) {
    const auto& [i, j] = graph.base_edges[e];
    if (i < 0 || j >= static_cast<int>(n)) throw InputError("edge index out of range");
    if (uniform(rng) < graph.prob[e]) {
      adj(i, j) = 1;
      adj(j, i) = 1;
    }
  }
  return adj;
}

}  // namespace qgraph
