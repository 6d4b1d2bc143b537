#include "hitwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hitwalk/error.hpp"

namespace hitwalk {

Matrix column_normalized(const Matrix& m) {
  Matrix t = m;
  for (int j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i) s += m(i, j);
    if (!(s > 0.0)) throw InvalidInput("column " + std::to_string(j) + " has non-positive sum");
    for (int i = 0; i < m.rows(); ++i) t(i, j) = m(i, j) / s;
  }
  return t;
}

TransitionMatrix transition_simple(const Graph& g) {
  return TransitionMatrix{column_normalized(g.adj), WalkKind::simple};
}

TransitionMatrix transition_merw(const Graph& g, const PerronData& p) {
  if (static_cast<int>(p.eigenvector.size()) != g.n)
    throw InvalidInput("perron data does not match the graph");
  Matrix weighted(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) weighted(i, j) = p.eigenvector[i] * g.adj(i, j);
  return TransitionMatrix{column_normalized(weighted), WalkKind::merw};
}

std::vector<double> hitting_vector(const Matrix& m, double* residual) {
  if (!m.square()) throw InvalidInput("hitting_vector needs a square matrix");
  const int n = m.rows();
  if (n == 0) {
    if (residual) *residual = 0.0;
    return {};
  }
  // h = column sums of (I - M)^{-1}  <=>  (I - M)^T h = 1.
  Matrix system(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) system(i, j) = (i == j ? 1.0 : 0.0) - m(j, i);
  SolveResult r = solve(system, std::vector<double>(n, 1.0));
  if (residual) *residual = r.residual;
  return std::move(r.x);
}

HittingReport hit_full(const Graph& g, int target, WalkKind kind) {
  const TransitionMatrix t =
      kind == WalkKind::simple ? transition_simple(g) : transition_merw(g, perron(g));
  return hit_full(t, target);
}

HittingReport hit_full(const TransitionMatrix& t, int target) {
  const int n = t.probs.rows();
  if (target < 0 || target >= n) throw IndexOutOfRange("target out of range");
  double residual = 0.0;
  const std::vector<double> h = hitting_vector(drop_index(t.probs, target), &residual);
  HittingReport report;
  report.target = target;
  report.walk = t.kind;
  report.method = HitMethod::full;
  report.residual = residual;
  report.times.resize(n, 0.0);
  for (int u = 0, k = 0; u < n; ++u) {
    if (u == target) continue;
    report.times[u] = h[k++];
  }
  return report;
}

namespace {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

McEstimate hit_monte_carlo(const Graph& g, int target, int source, WalkKind kind,
                           long long samples, std::uint64_t seed, long long max_steps) {
  if (target < 0 || target >= g.n || source < 0 || source >= g.n)
    throw IndexOutOfRange("vertex out of range");
  if (samples < 1) throw InvalidInput("samples must be >= 1");

  // Per-vertex cumulative step weights: adjacency for the simple walk,
  // Perron-weighted adjacency for MERW.
  std::vector<double> merw_weight;
  if (kind == WalkKind::merw) merw_weight = perron(g).eigenvector;
  std::vector<std::vector<int>> nbrs(g.n);
  std::vector<std::vector<double>> cumulative(g.n);
  for (int v = 0; v < g.n; ++v) {
    nbrs[v] = g.neighbors(v);
    double acc = 0.0;
    for (int u : nbrs[v]) {
      acc += kind == WalkKind::merw ? g.adj(u, v) * merw_weight[u] : g.adj(u, v);
      cumulative[v].push_back(acc);
    }
  }

  std::mt19937_64 rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (long long s = 0; s < samples; ++s) {
    long long steps = 0;
    int v = source;
    while (v != target) {
      if (++steps > max_steps)
        throw WalkLimitExceeded("single walk exceeded " + std::to_string(max_steps) + " steps");
      const auto& cum = cumulative[v];
      const double r = uniform01(rng) * cum.back();
      std::size_t idx = std::upper_bound(cum.begin(), cum.end(), r) - cum.begin();
      if (idx >= cum.size()) idx = cum.size() - 1;
      v = nbrs[v][idx];
    }
    const double value = static_cast<double>(steps);
    const double delta = value - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (value - mean);
  }

  McEstimate est;
  est.estimate = mean;
  est.samples = samples;
  est.seed = seed;
  est.std_error =
      samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples))
                  : 0.0;
  return est;
}

const char* walk_kind_name(WalkKind k) { return k == WalkKind::simple ? "simple" : "merw"; }

const char* hit_method_name(HitMethod m) {
  switch (m) {
    case HitMethod::full: return "full";
    case HitMethod::quotient: return "quotient";
    case HitMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

}  // namespace hitwalk
