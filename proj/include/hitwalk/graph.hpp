#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitwalk/matrix.hpp"

namespace hitwalk {

// Finite connected graph. Input graphs are simple undirected 0/1 graphs;
// quotient graphs reuse the same type with directed = true, real non-negative
// weights and loops allowed.
//
// Edges are read column-wise throughout: vertex v's (out-)neighbours are the
// nonzero rows of column v, matching the column-normalized transition
// convention used by the walk code.
struct Graph {
  int n = 0;
  Matrix adj;
  bool directed = false;
  std::vector<std::string> labels;  // optional vertex names, empty or size n

  double weighted_degree(int v) const;    // column sum
  int degree(int v) const;                // neighbour count
  std::vector<int> neighbors(int v) const;
  int edge_count() const;                 // undirected only
  bool is_regular(int* k = nullptr) const;
};

// Builds a simple undirected graph from an edge list and validates the input
// invariants (0/1 symmetric adjacency, zero diagonal, connected).
Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n);

// Wraps an arbitrary non-negative adjacency matrix, checking connectivity
// (strong connectivity when directed) and symmetry when undirected.
Graph graph_from_adjacency(Matrix adj, bool directed);

// Canonical generators; vertex orderings are frozen per family:
//   cycle n           0..n-1 around the cycle
//   path n            0-1-...-(n-1)
//   complete n
//   complete_bipartite a b   side A = 0..a-1, side B = a..a+b-1
//   star m            K_{1,m}, centre 0, leaves 1..m
//   hypercube d       binary-counter order, edge x ~ x^bit
//   petersen          outer 5-cycle 0..4, inner pentagram 5..9, spokes i~i+5
//   wheel n           n total vertices: cone over cycle(n-1), apex last
Graph generate(const std::string& family, const std::vector<int>& params = {});

// Cone over g: n+1 vertices, vertex n is the apex adjacent to all of 0..n-1.
Graph cone(const Graph& g);

bool connected(const Matrix& adj, bool directed);

std::vector<int> bfs_distances(const Graph& g, int source);

// Bipartition with per-side constant degrees, when the graph is biregular.
struct Bipartition {
  std::vector<int> side;  // 0/1 per vertex, side[0] == 0
  int degree0 = 0;
  int degree1 = 0;
};
std::optional<Bipartition> biregular(const Graph& g);

// The acceptance/verification family suite: cycles C3..C12, completes K2..K8,
// complete bipartite up to 5+5, hypercubes Q2..Q4, Petersen, paths P2..P8,
// wheels on 4..8 vertices, stars K_{1,1}..K_{1,6}.
std::vector<std::pair<std::string, Graph>> family_suite();

}  // namespace hitwalk
