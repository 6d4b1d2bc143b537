#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/matrix.hpp"

namespace hitwalk {

// 0/1 integer matrix; kept in exact integer arithmetic so Bose-Mesner closure
// can be verified without tolerances.
struct IntMatrix {
  int n = 0;
  std::vector<long long> values;

  IntMatrix() = default;
  explicit IntMatrix(int n_) : n(n_), values(static_cast<std::size_t>(n_) * n_, 0) {}
  static IntMatrix identity(int n);

  long long& at(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
  long long at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Symmetric association scheme: relations A_0 = I, A_1..A_d symmetric 0/1 with
// zero diagonal, summing to the all-ones matrix, with A_i A_j = sum_k p_ij^k A_k
// exactly in integers.
struct AssociationScheme {
  int n = 0;
  int d = 0;
  std::vector<IntMatrix> relations;
  std::vector<std::vector<std::vector<long long>>> p;  // p[i][j][k]

  // P^k with (i, j) entry p_ij^k: the quotient of relation graph G_k with
  // respect to any vertex's relation partition, up to per-column scaling that
  // the column normalization T(.) removes.
  Matrix pmatrix(int k) const;
};

struct SchemeWitness {
  std::string axiom;
  int i = -1, j = -1, u = -1, v = -1;
};

struct SchemeCheck {
  std::optional<AssociationScheme> scheme;
  std::optional<SchemeWitness> witness;
  bool ok() const { return scheme.has_value(); }
};

SchemeCheck validate_scheme(const std::vector<IntMatrix>& relations);

// Relation graphs as plain graphs (for oracle cross-checks and connectivity).
Graph relation_graph(const AssociationScheme& s, int i);
Graph union_graph(const AssociationScheme& s, const std::vector<int>& relations);

// Hitting time in relation graph G_i from any vertex in start relation j to
// the base vertex, computed through T(P^i). Throws DisconnectedRelation when
// G_i is disconnected.
double hit_relation_graph(const AssociationScheme& s, int i, int j);

// Hitting time in the union graph of the given relations, from relation class
// j, through the summed quotient q_ij = sum_x p_ij^{e_x}.
double hit_t_distance_regular(const AssociationScheme& s, const std::vector<int>& relations,
                              int j);

// Adjacent-pair hitting time in a connected relation graph: |V| - 1,
// cross-checked internally against hit_relation_graph(s, i, i).
double scheme_adjacent_hitting(const AssociationScheme& s, int i);

// Bundled catalog.
AssociationScheme trivial_scheme(int n);
SchemeCheck distance_scheme(const Graph& g);
AssociationScheme hamming_scheme(int d);  // H(d,2): distance scheme of Q_d
AssociationScheme johnson_scheme_4_2();
AssociationScheme petersen_scheme();
std::vector<std::pair<std::string, AssociationScheme>> scheme_catalog();

}  // namespace hitwalk
