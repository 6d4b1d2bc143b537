#pragma once

#include <cstdint>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/linalg.hpp"
#include "hitwalk/matrix.hpp"

namespace hitwalk {

// Convention used everywhere in this library: transition matrices are
// COLUMN-stochastic. Entry (i, j) of T(A) is a_ij / sum_l a_lj, the probability
// of stepping from vertex j to vertex i. Hitting times to a target v are read
// from the column sums of (I - T_{-v})^{-1}. Do not switch to the row
// convention; every quotient identity below is stated column-wise.

enum class WalkKind { simple, merw };

struct TransitionMatrix {
  Matrix probs;  // probs(i, j) = P(j -> i)
  WalkKind kind = WalkKind::simple;
};

// T(.): divides each column by its sum. Throws InvalidInput on a non-positive
// column sum.
Matrix column_normalized(const Matrix& m);

TransitionMatrix transition_simple(const Graph& g);

// T(D_nu A) = (1/lambda1) D_nu A D_nu^{-1}; computed by column-normalizing
// D_nu A so that columns sum to one exactly.
TransitionMatrix transition_merw(const Graph& g, const PerronData& p);

// Column sums of (I - M)^{-1}, i.e. -1^T (M - I)^{-1}. Entry u is the expected
// absorption time from state u when M is the substochastic part of an
// absorbing chain. Throws SingularMatrix if I - M is singular.
std::vector<double> hitting_vector(const Matrix& m, double* residual = nullptr);

enum class HitMethod { full, quotient, monte_carlo };

struct HittingReport {
  int target = 0;
  WalkKind walk = WalkKind::simple;
  HitMethod method = HitMethod::full;
  std::vector<double> times;  // times[target] == 0
  double residual = 0.0;
};

// Exact per-source hitting times to `target` via the absorbing-chain solve.
HittingReport hit_full(const Graph& g, int target, WalkKind kind);
HittingReport hit_full(const TransitionMatrix& t, int target);

inline constexpr const char* kMonteCarloRng = "mt19937_64";

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sample stdev / sqrt(samples)
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Seeded first-passage sampling; reproducible for a fixed seed. Uniform
// variates come from the top 53 bits of mt19937_64 output, so runs are
// identical across platforms. A single walk exceeding max_steps throws
// WalkLimitExceeded.
McEstimate hit_monte_carlo(const Graph& g, int target, int source, WalkKind kind,
                           long long samples, std::uint64_t seed,
                           long long max_steps = 1'000'000'000LL);

const char* walk_kind_name(WalkKind k);
const char* hit_method_name(HitMethod m);

}  // namespace hitwalk
