#pragma once

#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/matrix.hpp"

namespace hitwalk {

// Dominant eigenpair of a connected non-negative matrix. The eigenvector is
// entrywise positive with unit Euclidean norm.
struct PerronData {
  double eigenvalue = 0.0;
  std::vector<double> eigenvector;
};

// Power iteration on A + I; the +1 shift keeps the dominant eigenvalue of the
// iterated matrix strictly largest in modulus even on bipartite graphs, whose
// spectrum contains -lambda1. The reported eigenvalue is the final Rayleigh
// quotient of the unshifted matrix.
PerronData perron(const Matrix& adjacency);
PerronData perron(const Graph& g);

struct SolveResult {
  std::vector<double> x;
  double residual = 0.0;  // max-norm of Mx - b
};

// LU solve with scaled partial pivoting. Throws SingularMatrix when the best
// available pivot falls below 1e-13 of its row scale.
SolveResult solve(const Matrix& m, const std::vector<double>& b);

}  // namespace hitwalk
