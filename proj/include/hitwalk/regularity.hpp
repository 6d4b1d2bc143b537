#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitwalk/graph.hpp"
#include "hitwalk/linalg.hpp"
#include "hitwalk/partition.hpp"

namespace hitwalk {

// Distance partition from v: blocks ordered by distance, blocks[0] = {v}.
Partition distance_partition(const Graph& g, int v);

// Intersection array of a distance-regularized vertex. For a vertex w at
// distance i from the center, c counts w's neighbours one step closer to the
// center, a the neighbours at the same distance, b the neighbours one step
// further. c holds c_1..c_d, a holds a_1..a_d, b holds b_0..b_{d-1}.
struct IntersectionArray {
  enum class Kind { integer, pseudo };
  Kind kind = Kind::integer;
  int d = 0;
  std::vector<double> c;
  std::vector<double> a;
  std::vector<double> b;

  // (d+1) x (d+1) tridiagonal quotient with column j describing distance
  // class j: superdiagonal c, diagonal a, subdiagonal b.
  Matrix tridiagonal() const;
};

struct ArrayWitness {
  int distance = 0;
  int u = 0;
  int v = 0;
};

struct ArrayCheck {
  std::optional<IntersectionArray> array;
  std::optional<ArrayWitness> witness;
  bool ok() const { return array.has_value(); }
};

// Integer intersection array iff v is distance-regularized.
ArrayCheck intersection_array(const Graph& g, int v);

// Pseudo-intersection numbers iff the distance partition from v is
// weight-equitable (v is pseudo-distance-regular); columns of the tridiagonal
// sum to lambda1.
ArrayCheck pseudo_intersection(const Graph& g, int v, const PerronData& perron);

// Hitting time from distance class i to the center through the tridiagonal
// quotient; equals both the simple and the MERW hitting time on a
// distance-regularized graph.
double hit_distance_regularized(const IntersectionArray& array, int i);

// MERW hitting time from distance class i to a pseudo-distance-regular vertex.
double hit_pseudo(const IntersectionArray& array, int i, const PerronData& perron);

// Label function f on V x V. Diagonal labels form the color set, off-diagonal
// labels the relation set; the two are disjoint, so each vertex o induces the
// partition of V by the labels of row o with {o} as its own class.
struct LabelFunction {
  int n = 0;
  std::vector<int> codes;  // row-major, codes[v * n + u] = f(v, u)
  std::vector<std::string> alphabet;

  int code(int v, int u) const { return codes[static_cast<std::size_t>(v) * n + u]; }
  const std::string& name(int code) const { return alphabet[code]; }
  std::vector<int> color_codes() const;  // distinct diagonal codes, ascending
};

LabelFunction make_label_function(int n, std::vector<int> codes,
                                  std::vector<std::string> alphabet);

// Distance label function: off-diagonal labels are graph distances, diagonal
// labels are per-vertex colors (a single shared color by default).
LabelFunction distance_label_function(const Graph& g);
LabelFunction distance_label_function(const Graph& g, const std::vector<int>& vertex_colors);

// Extension of a base label function to the cone over its graph: base labels
// are kept, the apex gets a fresh color and a fresh relation label for every
// pair involving it.
LabelFunction cone_label_function(const LabelFunction& base);

struct ColorQuotient {
  int color = 0;             // diagonal code
  std::vector<int> classes;  // class codes in canonical order; classes[0] == color
  QuotientMatrix quotient;
};

struct WeaklyFEquitable {
  bool ok = false;
  QuotientKind kind = QuotientKind::equitable;
  double lambda1 = 0.0;
  std::vector<ColorQuotient> quotients;  // one per color, ascending color code
  std::string witness;                   // non-empty iff !ok
};

// Verifies that every vertex's label partition is (weight-)equitable and that
// same-color vertices share the same quotient under the canonical label
// indexing (empty classes dropped). Equitable quotients carry nu_block so that
// both walks can be routed through them.
WeaklyFEquitable check_weakly_f_equitable(const Graph& g, const LabelFunction& f,
                                          QuotientKind kind);

// Hitting time from label class `label` to the center class on the color's
// quotient. kind selects the walk: equitable routes the simple walk through B,
// weight routes MERW through B* (built as D_nu B D_nu^{-1} when the
// certification was equitable).
double hit_weakly_f_equitable(const WeaklyFEquitable& result, int color, int label,
                              QuotientKind kind);

// Generalized Rao criterion: when the coarsest stabilized equitable partition
// at v keeps G(v) as a single block, the hitting time from any neighbour of v
// is 2e/k - 1. Returns nullopt when the criterion does not apply.
std::optional<double> rao_hitting(const Graph& g, int v);

struct ConeHitting {
  double lambda1 = 0.0;         // k/2 + sqrt(n + k^2/4), cross-checked against perron
  double to_apex_simple = 0.0;  // k + 1
  double to_apex_merw = 0.0;    // lambda1^2 / n
  struct Entry {
    std::string label;
    double simple = 0.0;
    double merw = 0.0;
  };
  std::vector<Entry> table;  // per relation label of f+; empty without a base f
};

// Closed-form cone hitting times over a k-regular base. The overload with a
// base label function additionally fills the per-label tables through the
// bordered quotient of the cone.
ConeHitting cone_hitting(const Graph& base);
ConeHitting cone_hitting(const Graph& base, const LabelFunction& f_base);

struct EquiWisRVerdict {
  bool applicable = false;          // f has a singleton color set
  bool weight_certified = false;
  bool nu_constant = false;         // within 1e-9; meaningful when certified
  bool equitable_certified = false;

  // The empirical claim: a weight-f-equitable graph is f-equitable.
  bool consistent() const {
    return !applicable || !weight_certified || (nu_constant && equitable_certified);
  }
};

EquiWisRVerdict check_weight_f_equitable_implies_f_equitable(const Graph& g,
                                                             const LabelFunction& f);

}  // namespace hitwalk
