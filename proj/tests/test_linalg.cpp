#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hitwalk/error.hpp"
#include "hitwalk/graph.hpp"
#include "hitwalk/linalg.hpp"

#include "oracle.hpp"

using namespace hitwalk;

namespace {

void check_perron_invariants(const Matrix& adj, const PerronData& p) {
  const int n = adj.rows();
  double norm2 = 0.0;
  for (double v : p.eigenvector) {
    CHECK(v > 0.0);
    norm2 += v * v;
  }
  CHECK(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12);
  const std::vector<double> ax = adj * p.eigenvector;
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(ax[i] - p.eigenvalue * p.eigenvector[i]) <= 1e-10 * p.eigenvalue);
}

}  // namespace

TEST_CASE("perron on C4: lambda 2, uniform vector") {
  const Graph g = generate("cycle", {4});
  const PerronData p = perron(g);
  CHECK(p.eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
  for (double v : p.eigenvector) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  check_perron_invariants(g.adj, p);
}

TEST_CASE("perron on the star K_{1,3}: lambda sqrt(3), vector (sqrt3,1,1,1)") {
  const Graph g = generate("star", {3});
  const PerronData p = perron(g);
  CHECK(p.eigenvalue == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(p.eigenvector[0] / p.eigenvector[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(p.eigenvector[1] == doctest::Approx(p.eigenvector[2]).epsilon(1e-12));
  CHECK(p.eigenvector[1] == doctest::Approx(p.eigenvector[3]).epsilon(1e-12));
  check_perron_invariants(g.adj, p);
}

TEST_CASE("perron on cone(C4): lambda 1 + sqrt(5)") {
  const Graph g = cone(generate("cycle", {4}));
  const PerronData p = perron(g);
  CHECK(p.eigenvalue == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-12));
  check_perron_invariants(g.adj, p);
}

TEST_CASE("perron is scale-equivariant in the eigenvalue") {
  const Graph g = generate("petersen");
  const PerronData p1 = perron(g);
  Matrix doubled = g.adj;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) doubled(i, j) *= 2.0;
  const PerronData p2 = perron(doubled);
  CHECK(p2.eigenvalue == doctest::Approx(2.0 * p1.eigenvalue).epsilon(1e-12));
  for (int i = 0; i < g.n; ++i)
    CHECK(std::abs(p2.eigenvector[i] - p1.eigenvector[i]) <= 1e-10);
}

TEST_CASE("perron converges on bipartite instances") {
  for (const char* family : {"path", "hypercube"}) {
    const Graph g = generate(family, {family == std::string("path") ? 8 : 4});
    check_perron_invariants(g.adj, perron(g));
  }
  const Graph kab = generate("complete_bipartite", {3, 4});
  const PerronData p = perron(kab);
  CHECK(p.eigenvalue == doctest::Approx(std::sqrt(12.0)).epsilon(1e-12));
  check_perron_invariants(kab.adj, p);
}

TEST_CASE("perron agrees with the independent oracle on the family suite") {
  for (const auto& [name, g] : family_suite()) {
    CAPTURE(name);
    const PerronData p = perron(g);
    check_perron_invariants(g.adj, p);
    const oracle::Perron ref = oracle::perron(g);
    CHECK(p.eigenvalue == doctest::Approx(static_cast<double>(ref.eigenvalue)).epsilon(1e-10));
  }
}

TEST_CASE("solve: identity and diagonal") {
  CHECK(solve(Matrix::identity(3), {1.0, -2.0, 5.0}).x == std::vector<double>{1.0, -2.0, 5.0});
  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  const SolveResult r = solve(d, {2.0, 8.0});
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("solve: 1x1 geometric series (I - Q) x = 1") {
  Matrix m(1, 1);
  m(0, 0) = 1.0 - 0.5;  // I - [[1/2]]
  const SolveResult r = solve(m, {1.0});
  CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("solve rejects singular matrices") {
  Matrix s(2, 2, 1.0);
  CHECK_THROWS_AS(solve(s, {1.0, 1.0}), SingularMatrix);
  Matrix z(2, 2);
  CHECK_THROWS_AS(solve(z, {1.0, 1.0}), SingularMatrix);
}

TEST_CASE("solve residual bound holds on random systems") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    Matrix m(n, n);
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) {
      b[i] = 10.0 * u(rng);
      for (int j = 0; j < n; ++j) m(i, j) = u(rng);
      m(i, i) += n;  // keep well-conditioned
    }
    const SolveResult r = solve(m, b);
    CHECK(r.residual <= 1e-9 * (1.0 + inf_norm(b)));
  }
}
