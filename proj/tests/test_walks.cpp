#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hitwalk/error.hpp"
#include "hitwalk/graph.hpp"
#include "hitwalk/walks.hpp"

#include "oracle.hpp"

using namespace hitwalk;

namespace {

double column_sum_error(const Matrix& t) {
  double worst = 0.0;
  for (int j = 0; j < t.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < t.rows(); ++i) s += t(i, j);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

// Explicit (1/lambda) D_nu A D_nu^{-1} for comparison against transition_merw.
Matrix merw_by_formula(const Graph& g, const PerronData& p) {
  Matrix m(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      m(i, j) = p.eigenvector[i] * g.adj(i, j) / (p.eigenvalue * p.eigenvector[j]);
  return m;
}

}  // namespace

TEST_CASE("transition_simple on K2 and C3") {
  const Matrix k2 = transition_simple(generate("complete", {2})).probs;
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(1, 0) == 1.0);
  CHECK(k2(0, 0) == 0.0);
  const Matrix c3 = transition_simple(generate("cycle", {3})).probs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c3(i, j) == (i == j ? 0.0 : 0.5));
}

TEST_CASE("transition_simple on the star: hand-normalized columns") {
  const Matrix t = transition_simple(generate("star", {3})).probs;
  // centre column spreads to the leaves, leaf columns return to the centre
  for (int leaf = 1; leaf <= 3; ++leaf) {
    CHECK(t(leaf, 0) == doctest::Approx(1.0 / 3.0));
    CHECK(t(0, leaf) == 1.0);
  }
  CHECK(t(0, 0) == 0.0);
  CHECK(column_sum_error(t) <= 1e-12);
}

TEST_CASE("transition_merw matches the similarity formula and simple walk on regular graphs") {
  for (const auto& [name, g] : family_suite()) {
    CAPTURE(name);
    const PerronData p = perron(g);
    const TransitionMatrix tm = transition_merw(g, p);
    CHECK(column_sum_error(tm.probs) <= 1e-12);
    CHECK(max_abs_diff(tm.probs, merw_by_formula(g, p)) <= 1e-10);
    if (g.is_regular() || biregular(g).has_value())
      CHECK(max_abs_diff(tm.probs, transition_simple(g).probs) <= 1e-10);
  }
}

TEST_CASE("transition_merw on the star equals the simple walk (biregular)") {
  const Graph g = generate("star", {3});
  const Matrix t = transition_merw(g, perron(g)).probs;
  for (int leaf = 1; leaf <= 3; ++leaf) {
    CHECK(t(leaf, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(t(0, leaf) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("transition_merw on cone(C4): apex column uniform, rim columns differ from simple") {
  const Graph g = cone(generate("cycle", {4}));  // apex is vertex 4
  const PerronData p = perron(g);
  const Matrix tm = transition_merw(g, p).probs;
  const Matrix ts = transition_simple(g).probs;
  const double lambda = 1.0 + std::sqrt(5.0);
  for (int rim = 0; rim < 4; ++rim) {
    CHECK(tm(rim, 4) == doctest::Approx(0.25).epsilon(1e-10));
    // rim column: each rim neighbour nu=1, apex nu=lambda-2, column sum lambda
    CHECK(tm(4, rim) == doctest::Approx((lambda - 2.0) / lambda).epsilon(1e-10));
    CHECK(std::abs(tm(4, rim) - ts(4, rim)) > 0.04);
  }
}

TEST_CASE("hitting_vector base cases") {
  Matrix half(1, 1);
  half(0, 0) = 0.5;
  CHECK(hitting_vector(half)[0] == doctest::Approx(2.0).epsilon(1e-14));
  Matrix zero(1, 1);
  CHECK(hitting_vector(zero)[0] == doctest::Approx(1.0).epsilon(1e-14));
  // K2 with the target removed: single absorbing step
  const Matrix t = transition_simple(generate("complete", {2})).probs;
  CHECK(hitting_vector(drop_index(t, 0))[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hit_full on K2, C5 and Q3") {
  const HittingReport k2 = hit_full(generate("complete", {2}), 0, WalkKind::simple);
  CHECK(k2.times[0] == 0.0);
  CHECK(k2.times[1] == doctest::Approx(1.0).epsilon(1e-12));

  // adjacent hitting on a cycle is n - 1 = 2e/k - 1
  const HittingReport c5 = hit_full(generate("cycle", {5}), 0, WalkKind::simple);
  CHECK(c5.times[1] == doctest::Approx(4.0).epsilon(1e-12));

  // frozen from the independent first-step oracle
  const Graph q3 = generate("hypercube", {3});
  const std::vector<double> ref = oracle::hitting_simple(q3, 0);
  CHECK(ref[7] == doctest::Approx(10.0).epsilon(1e-12));
  const HittingReport full = hit_full(q3, 0, WalkKind::simple);
  CHECK(full.times[7] == doctest::Approx(10.0).epsilon(1e-10));
  for (int v = 0; v < q3.n; ++v) CHECK(full.times[v] == doctest::Approx(ref[v]).epsilon(1e-10));
}

TEST_CASE("hit_full matches the oracle for both walks across the family suite") {
  for (const auto& [name, g] : family_suite()) {
    CAPTURE(name);
    const int target = g.n / 2;
    const HittingReport simple = hit_full(g, target, WalkKind::simple);
    const HittingReport merw = hit_full(g, target, WalkKind::merw);
    const std::vector<double> ref_simple = oracle::hitting_simple(g, target);
    const std::vector<double> ref_merw = oracle::hitting_merw(g, target);
    for (int v = 0; v < g.n; ++v) {
      CHECK(std::abs(simple.times[v] - ref_simple[v]) <= 1e-8);
      CHECK(std::abs(merw.times[v] - ref_merw[v]) <= 1e-8);
    }
  }
}

TEST_CASE("hit_full report invariants: zero at target, >= 1 elsewhere, first-step consistency") {
  for (const auto& [name, g] : family_suite()) {
    CAPTURE(name);
    for (WalkKind kind : {WalkKind::simple, WalkKind::merw}) {
      const TransitionMatrix t = kind == WalkKind::simple
                                     ? transition_simple(g)
                                     : transition_merw(g, perron(g));
      const int target = 0;
      const HittingReport r = hit_full(t, target);
      CHECK(r.times[target] == 0.0);
      for (int u = 0; u < g.n; ++u) {
        if (u == target) continue;
        CHECK(r.times[u] >= 1.0 - 1e-9);
        double expect = 1.0;
        for (int x = 0; x < g.n; ++x) expect += t.probs(x, u) * r.times[x];
        CHECK(std::abs(r.times[u] - expect) <= 1e-8);
      }
    }
  }
}

TEST_CASE("monte carlo: K2 is deterministic") {
  const McEstimate e =
      hit_monte_carlo(generate("complete", {2}), 0, 1, WalkKind::simple, 1000, 99);
  CHECK(e.estimate == 1.0);
  CHECK(e.std_error == 0.0);
  CHECK(e.samples == 1000);
}

TEST_CASE("monte carlo: C5 and Petersen estimates within 4 standard errors") {
  const McEstimate c5 =
      hit_monte_carlo(generate("cycle", {5}), 0, 1, WalkKind::simple, 100000, 7);
  CHECK(std::abs(c5.estimate - 4.0) <= 4.0 * c5.std_error);
  const McEstimate pet =
      hit_monte_carlo(generate("petersen"), 0, 1, WalkKind::simple, 100000, 7);
  CHECK(std::abs(pet.estimate - 9.0) <= 4.0 * pet.std_error);
}

TEST_CASE("monte carlo tracks the exact solve across a family sample") {
  // one (target, source) pair per instance at 1e5 samples; every estimate is
  // expected inside 4 standard errors of the absorbing-chain value
  const char* names[] = {"C5", "C12", "K8", "K3,5", "Q3", "Petersen", "P8", "W8", "K1,6"};
  int misses = 0;
  int trials = 0;
  for (const auto& [name, g] : family_suite()) {
    if (std::find_if(std::begin(names), std::end(names),
                     [&, label = name](const char* n) { return label == n; }) == std::end(names))
      continue;
    for (WalkKind kind : {WalkKind::simple, WalkKind::merw}) {
      const int target = 0;
      const int source = g.n - 1;
      const HittingReport exact = hit_full(g, target, kind);
      const McEstimate e = hit_monte_carlo(g, target, source, kind, 100000, 20250808);
      ++trials;
      if (std::abs(e.estimate - exact.times[source]) > 4.0 * e.std_error) ++misses;
    }
  }
  CHECK(trials == 18);
  // >= 95% of trials inside the gate
  CHECK(misses * 20 <= trials);
}

TEST_CASE("monte carlo is reproducible for a fixed seed") {
  const Graph g = generate("cycle", {6});
  const McEstimate a = hit_monte_carlo(g, 0, 3, WalkKind::merw, 5000, 1234);
  const McEstimate b = hit_monte_carlo(g, 0, 3, WalkKind::merw, 5000, 1234);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  const McEstimate c = hit_monte_carlo(g, 0, 3, WalkKind::merw, 5000, 1235);
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("monte carlo walk limit") {
  CHECK_THROWS_AS(
      hit_monte_carlo(generate("cycle", {9}), 0, 4, WalkKind::simple, 10, 1, /*max_steps=*/3),
      WalkLimitExceeded);
}

TEST_CASE("monte carlo input validation") {
  const Graph g = generate("cycle", {5});
  CHECK_THROWS_AS(hit_monte_carlo(g, 0, 9, WalkKind::simple, 10, 1), IndexOutOfRange);
  CHECK_THROWS_AS(hit_monte_carlo(g, 0, 1, WalkKind::simple, 0, 1), InvalidInput);
}
