#pragma once

// Test-only reference implementations, kept independent of the library's
// solver path: hitting times come from the first-step equations solved by
// Gauss-Jordan elimination in long double, and the Perron vector from a
// plain shifted power iteration with 1-norm normalization. Unit tests freeze
// expected values computed here and assert the library against them.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hitwalk/graph.hpp"

namespace oracle {

// Solves the dense system a x = b by Gauss-Jordan with partial pivoting.
inline std::vector<long double> gauss_jordan(std::vector<std::vector<long double>> a,
                                             std::vector<long double> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0L) throw std::runtime_error("oracle: singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const long double d = a[col][col];
    for (int c = 0; c < n; ++c) a[col][c] /= d;
    b[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0L) continue;
      const long double f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Independent Perron eigenvector: power iteration on A + I/2 in long double,
// normalized by the 1-norm, run to a fixed-point of the iterate.
struct Perron {
  long double eigenvalue = 0.0L;
  std::vector<long double> vec;  // positive, 1-norm normalized
};

inline Perron perron(const hitwalk::Graph& g) {
  const int n = g.n;
  std::vector<long double> x(n, 1.0L / n);
  for (int iter = 0; iter < 200000; ++iter) {
    std::vector<long double> y(n, 0.0L);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) y[i] += static_cast<long double>(g.adj(i, j)) * x[j];
    for (int i = 0; i < n; ++i) y[i] += 0.5L * x[i];
    long double norm = 0.0L;
    for (int i = 0; i < n; ++i) norm += std::abs(y[i]);
    long double change = 0.0L;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      change = std::max(change, std::abs(y[i] - x[i]));
    }
    x = y;
    if (iter > 2 && change < 1e-19L) break;
  }
  Perron p;
  p.vec = x;
  std::vector<long double> ax(n, 0.0L);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) ax[i] += static_cast<long double>(g.adj(i, j)) * x[j];
  long double num = 0.0L, den = 0.0L;
  for (int i = 0; i < n; ++i) {
    num += ax[i] * x[i];
    den += x[i] * x[i];
  }
  p.eigenvalue = num / den;
  return p;
}

// Expected hitting times to `target` from the first-step equations
//   h_u = 1 + sum_x P(u -> x) h_x,   h_target = 0,
// with P(u -> x) proportional to the step weight w(u, x).
inline std::vector<double> hitting_from_weights(const hitwalk::Graph& g, int target,
                                                const std::vector<std::vector<long double>>& w) {
  const int n = g.n;
  std::vector<int> index(n, -1);
  std::vector<int> vertex;
  for (int v = 0; v < n; ++v)
    if (v != target) {
      index[v] = static_cast<int>(vertex.size());
      vertex.push_back(v);
    }
  const int m = static_cast<int>(vertex.size());
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m, 0.0L));
  std::vector<long double> b(m, 1.0L);
  for (int r = 0; r < m; ++r) {
    const int u = vertex[r];
    long double total = 0.0L;
    for (int x = 0; x < n; ++x) total += w[u][x];
    a[r][r] = 1.0L;
    for (int x = 0; x < n; ++x) {
      if (x == target || w[u][x] == 0.0L) continue;
      a[r][index[x]] -= w[u][x] / total;
    }
  }
  const std::vector<long double> h = gauss_jordan(std::move(a), std::move(b));
  std::vector<double> out(n, 0.0);
  for (int r = 0; r < m; ++r) out[vertex[r]] = static_cast<double>(h[r]);
  return out;
}

inline std::vector<double> hitting_simple(const hitwalk::Graph& g, int target) {
  std::vector<std::vector<long double>> w(g.n, std::vector<long double>(g.n, 0.0L));
  for (int u = 0; u < g.n; ++u)
    for (int x = 0; x < g.n; ++x) w[u][x] = static_cast<long double>(g.adj(x, u));
  return hitting_from_weights(g, target, w);
}

inline std::vector<double> hitting_merw(const hitwalk::Graph& g, int target) {
  const Perron p = oracle::perron(g);
  std::vector<std::vector<long double>> w(g.n, std::vector<long double>(g.n, 0.0L));
  for (int u = 0; u < g.n; ++u)
    for (int x = 0; x < g.n; ++x)
      w[u][x] = static_cast<long double>(g.adj(x, u)) * p.vec[x];
  return hitting_from_weights(g, target, w);
}

}  // namespace oracle
