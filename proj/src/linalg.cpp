#include "hitwalk/linalg.hpp"

#include <cmath>

#include "hitwalk/error.hpp"

namespace hitwalk {

namespace {

constexpr int kMaxPowerIterations = 100000;
constexpr double kPivotFloor = 1e-13;

}  // namespace

PerronData perron(const Matrix& adjacency) {
  if (!adjacency.square() || adjacency.rows() == 0)
    throw InvalidInput("perron needs a non-empty square matrix");
  const int n = adjacency.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adjacency(i, j) < 0.0) throw InvalidInput("perron needs non-negative entries");

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  double residual = 0.0;
  int iter = 0;
  while (true) {
    std::vector<double> ax = adjacency * x;
    lambda = dot(x, ax);  // Rayleigh quotient of the unshifted matrix
    residual = 0.0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
    // Convergence is judged on the eigenvector residual rather than on Rayleigh
    // stagnation: the quotient error is quadratic in the vector error, so it
    // stalls below 1e-13 while the residual can still sit near 1e-7.
    if (residual <= 1e-12 * std::max(lambda, 1.0) || iter >= kMaxPowerIterations) break;
    ++iter;
    // Shifted iterate y = (A + I) x.
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      ax[i] += x[i];
      norm += ax[i] * ax[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NoConvergence("power iteration collapsed to zero");
    for (int i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  if (residual > 1e-10 * std::max(lambda, 1.0))
    throw NoConvergence("power iteration hit the iteration cap with residual above tolerance");
  for (int i = 0; i < n; ++i)
    if (!(x[i] > 0.0)) throw NoConvergence("dominant eigenvector is not entrywise positive");
  return PerronData{lambda, std::move(x)};
}

PerronData perron(const Graph& g) { return perron(g.adj); }

namespace {

struct LuFactors {
  Matrix lu;
  std::vector<int> perm;
};

LuFactors lu_factor(const Matrix& m) {
  const int n = m.rows();
  LuFactors f{m, std::vector<int>(n)};
  std::vector<double> scale(n);
  for (int i = 0; i < n; ++i) {
    f.perm[i] = i;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s = std::max(s, std::abs(f.lu(i, j)));
    if (s == 0.0) throw SingularMatrix("zero row in matrix");
    scale[i] = s;
  }
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = std::abs(f.lu(f.perm[k], k)) / scale[f.perm[k]];
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::abs(f.lu(f.perm[i], k)) / scale[f.perm[i]];
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best < kPivotFloor) throw SingularMatrix("pivot below 1e-13 of row scale");
    std::swap(f.perm[k], f.perm[pivot]);
    const int pk = f.perm[k];
    for (int i = k + 1; i < n; ++i) {
      const int pi = f.perm[i];
      const double factor = f.lu(pi, k) / f.lu(pk, k);
      f.lu(pi, k) = factor;
      if (factor == 0.0) continue;
      for (int j = k + 1; j < n; ++j) f.lu(pi, j) -= factor * f.lu(pk, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
  const int n = f.lu.rows();
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (int j = 0; j < i; ++j) s -= f.lu(f.perm[i], j) * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= f.lu(f.perm[i], j) * x[j];
    x[i] = s / f.lu(f.perm[i], i);
  }
  return x;
}

// Residual b - Mx accumulated in extended precision so refinement steps see
// the true rounding error.
std::vector<double> long_residual(const Matrix& m, const std::vector<double>& x,
                                  const std::vector<double>& b) {
  const int n = m.rows();
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) {
    long double s = b[i];
    for (int j = 0; j < n; ++j) s -= static_cast<long double>(m(i, j)) * x[j];
    r[i] = static_cast<double>(s);
  }
  return r;
}

}  // namespace

SolveResult solve(const Matrix& m, const std::vector<double>& b) {
  if (!m.square()) throw InvalidInput("solve needs a square matrix");
  const int n = m.rows();
  if (static_cast<int>(b.size()) != n) throw InvalidInput("solve: rhs size mismatch");
  if (n == 0) return SolveResult{{}, 0.0};

  const LuFactors f = lu_factor(m);
  std::vector<double> x = lu_solve(f, b);

  // Two rounds of iterative refinement keep separately assembled systems for
  // the same chain (full vs quotient route) in agreement even when hitting
  // times reach ~1e4.
  for (int round = 0; round < 2; ++round) {
    const std::vector<double> r = long_residual(m, x, b);
    const std::vector<double> dx = lu_solve(f, r);
    for (int i = 0; i < n; ++i) x[i] += dx[i];
  }

  double residual = inf_norm(long_residual(m, x, b));
  return SolveResult{std::move(x), residual};
}

}  // namespace hitwalk
