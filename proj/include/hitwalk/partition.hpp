#pragma once

#include <optional>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/linalg.hpp"
#include "hitwalk/matrix.hpp"

namespace hitwalk {

enum class QuotientKind { equitable, weight };

// Ordered list of disjoint non-empty vertex blocks covering the vertex set.
// A stabilized partition has blocks[0] = {center}.
struct Partition {
  std::vector<std::vector<int>> blocks;  // vertices ascending within a block
  std::optional<int> center;

  int size() const { return static_cast<int>(blocks.size()); }
  std::vector<int> block_index(int n) const;  // vertex -> block
};

// Validates disjointness, coverage of 0..n-1, non-empty blocks, and that
// blocks[0] == {center} when a center is given.
Partition make_partition(std::vector<std::vector<int>> blocks, std::optional<int> center, int n);

// Quotient of a (weight-)equitable partition. entries(i, j) counts (weighted)
// neighbours in block i of any vertex of block j, so columns describe where a
// block's vertices send their edges, matching the column-stochastic walk
// convention.
struct QuotientMatrix {
  Matrix entries;
  QuotientKind kind = QuotientKind::equitable;
  std::vector<int> block_sizes;
  std::vector<double> nu_block;  // per-block Perron value; equitable kind only
  double lambda1 = 0.0;          // column sum; weight kind only
};

// Two vertices of the same block whose (weight-)counts into `block` differ.
struct PartitionWitness {
  int block = 0;
  int u = 0;
  int v = 0;
};

struct EquitableCheck {
  std::optional<QuotientMatrix> quotient;
  std::optional<PartitionWitness> witness;
  bool ok() const { return quotient.has_value(); }
};

EquitableCheck check_equitable(const Graph& g, const Partition& p);

// Weight-intersection numbers b*_ij(u) = (1/nu_u) sum_{v in G(u) cap V_i} nu_v
// must be block-constant within 1e-9 relative; on success columns of the
// quotient sum to lambda1.
EquitableCheck check_weight_equitable(const Graph& g, const Partition& p, const PerronData& perron);

// Fills nu_block on an equitable quotient, asserting that the Perron value is
// constant on every block (which holds for any equitable partition of a
// connected graph).
void attach_block_weights(QuotientMatrix& q, const Partition& p, const PerronData& perron);

// Iterated signature refinement to the coarsest (weight-)equitable partition
// refining `initial`. Block order is deterministic: children replace their
// parent in place, ordered by descending signature (then smallest vertex), so
// distance-like partitions come out in distance order. The result is a fixed
// point: refining it again changes nothing.
Partition coarsest_refinement(const Graph& g, Partition initial, QuotientKind kind,
                              const PerronData* perron = nullptr);

// Coarsest stabilized partition refining {{center}, V \ {center}}.
Partition coarsest_stabilized(const Graph& g, int center, QuotientKind kind,
                              const PerronData* perron = nullptr);

// Hitting time from `block` to block 0 in the simple walk on the quotient
// graph. For a stabilized equitable partition this equals the simple-walk
// hitting time to the center from any vertex of the block; for the weight kind
// it equals the MERW hitting time.
double hit_via_quotient(const QuotientMatrix& q, int block, double* residual = nullptr);

}  // namespace hitwalk
