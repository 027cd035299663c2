#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ziso {

using Int = std::int64_t;

/// Generator set B of a Cayley graph on the integers. Elements are nonzero,
/// stored sorted and deduplicated; derived constants are precomputed.
class GeneratorSet {
 public:
  static GeneratorSet from_elements(std::vector<Int> elements);

  const std::vector<Int>& elements() const { return elements_; }
  Int b_max() const { return b_max_; }      // max |b|
  Int b_plus() const { return b_plus_; }    // max positive element, 0 if none
  Int b_minus() const { return b_minus_; }  // max of negated negatives, 0 if none
  bool symmetric() const { return symmetric_; }
  bool generates_z() const { return gcd_ == 1; }
  Int gcd() const { return gcd_; }

  Int sum_abs() const;                 // sum of |b| over all elements
  std::vector<Int> moduli() const;     // distinct |b| >= 2, ascending
  bool contains(Int b) const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  GeneratorSet() = default;
  std::vector<Int> elements_;
  Int b_max_ = 0;
  Int b_plus_ = 0;
  Int b_minus_ = 0;
  Int gcd_ = 0;
  bool symmetric_ = false;
};

/// Finite subset of the integers, kept as a strictly increasing sequence.
/// Equality is equality of the underlying mathematical set. A dense
/// bit-indexed view over a window is available for inner loops.
class ZSet {
 public:
  ZSet() = default;
  static ZSet from_values(std::vector<Int> values);  // sorts and dedups
  static ZSet interval(Int n);                       // {1, ..., n}; empty for n <= 0
  static ZSet range(Int lo, Int hi);                 // {lo, ..., hi}; empty if lo > hi
  static ZSet grid_square(Int k, Int b);             // {i + b*j : 1 <= i,j <= k}, requires 1 <= k <= b

  const std::vector<Int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Int x) const;
  Int min() const;  // requires nonempty
  Int max() const;  // requires nonempty
  Int diameter() const { return empty() ? 0 : max() - min(); }
  bool canonical() const { return empty() || members_.front() == 0; }

  ZSet translated(Int t) const;

  // Dense membership table of the intersection with [0, window).
  std::vector<std::uint8_t> dense(Int window) const;
  static ZSet from_dense(const std::vector<std::uint8_t>& table);

  friend bool operator==(const ZSet& a, const ZSet& b) { return a.members_ == b.members_; }
  friend bool operator!=(const ZSet& a, const ZSet& b) { return !(a == b); }
  friend bool operator<(const ZSet& a, const ZSet& b) { return a.members_ < b.members_; }

 private:
  std::vector<Int> members_;
};

/// Translate so min A = 0 (empty set unchanged). Boundary sizes are invariant.
ZSet canonicalize(const ZSet& a);

/// Directed boundary edge, identified by its step and head vertex:
/// (b, v) stands for the edge (v - b, v) with v - b inside the set.
struct LabeledEdge {
  Int step;
  Int head;
  friend bool operator==(const LabeledEdge& a, const LabeledEdge& b) {
    return a.step == b.step && a.head == b.head;
  }
  friend bool operator<(const LabeledEdge& a, const LabeledEdge& b) {
    return a.step != b.step ? a.step < b.step : a.head < b.head;
  }
};

struct EdgeBoundary {
  std::vector<LabeledEdge> edges;  // sorted by (step, head)
  std::size_t size() const { return edges.size(); }
};

EdgeBoundary edge_boundary(const GeneratorSet& g, const ZSet& a);
Int edge_boundary_size(const GeneratorSet& g, const ZSet& a);

/// (A + B) \ A, as a set of vertices (not canonicalized).
ZSet vertex_boundary(const GeneratorSet& g, const ZSet& a);
Int vertex_boundary_size(const GeneratorSet& g, const ZSet& a);

/// Counts of A within each residue class modulo m, plus the missing residues
/// and their maximal cyclically-consecutive runs.
struct ResidueProfile {
  Int modulus = 1;
  std::vector<Int> counts;  // counts[r] = |A ∩ (r + mZ)|

  struct Run {
    Int start;   // first missing residue of the run
    Int length;  // number of consecutive missing residues (cyclic)
  };

  bool full() const;
  std::vector<Int> missing() const;
  std::vector<Run> missing_runs() const;  // cyclic; whole cycle reported as one run
  Int longest_missing_run() const;
};

ResidueProfile residue_profile(const ZSet& a, Int m);

struct IntInterval {
  Int lo;
  Int hi;  // inclusive
  Int length() const { return hi - lo + 1; }
  friend bool operator==(const IntInterval& a, const IntInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Maximal integer intervals of A in increasing order, and the gap lengths
/// between consecutive blocks.
struct BlockDecomposition {
  std::vector<IntInterval> blocks;
  std::vector<Int> gaps;
  bool is_interval() const { return blocks.size() <= 1; }
};

BlockDecomposition block_decomposition(const ZSet& a);

struct GridPoint {
  Int x;
  Int y;
  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;  // row-major
  }
};

struct DirectedGridEdge {
  GridPoint tail;
  GridPoint head;
  friend bool operator==(const DirectedGridEdge& a, const DirectedGridEdge& b) {
    return a.tail == b.tail && a.head == b.head;
  }
  friend bool operator<(const DirectedGridEdge& a, const DirectedGridEdge& b) {
    if (!(a.tail == b.tail)) return a.tail < b.tail;
    return a.head < b.head;
  }
};

/// Euclidean embedding x = q*b + r with r in [0, b-1] (floor division, so it
/// holds for negative x too). Requires b >= 2.
GridPoint grid_embed(Int x, Int b);

/// Edge map of the embedding: a +-b step becomes a +-e1 step and a +-1 step a
/// +-e2 step, both applied at the image of the tail. Defined on edges, not
/// induced by the point map on endpoints. Requires step in {+-1, +-b}.
DirectedGridEdge grid_embed_edge(Int tail, Int head, Int b);

/// Parameters of the explicit pair of sizes whose optimizer families cannot
/// nest on Cay(Z, ±{1,b}) and Cay(Z, ±{1,b-1,b,b+1}): a k x k grid square at
/// n1 = k^2 is wider than the interval of length n2. Requires b even, b >= 10.
struct NonNestingInstance {
  Int b;
  Int k;   // (b - 2) / 2
  Int n1;  // k^2
  Int n2;  // (b + 1) * (k - 1)
};

NonNestingInstance non_nesting_instance(Int b);

}  // namespace ziso
