#pragma once

#include <map>
#include <vector>

#include "ziso/core.hpp"

namespace ziso {

/// Finite planar point set with a sparse row view: rows() maps each occupied
/// y to the sorted x-coordinates of that row.
class GridSet {
 public:
  GridSet() = default;
  static GridSet from_points(std::vector<GridPoint> points);
  static GridSet square(Int k);  // [1,k] x [1,k]

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<Int, std::vector<Int>>& rows() const { return rows_; }
  std::vector<GridPoint> points() const;  // row-major order
  bool contains(GridPoint p) const;
  GridSet translated(Int dx, Int dy) const;
  GridSet canonical() const;  // min x = 0 and min y = 0 (empty set unchanged)

  friend bool operator==(const GridSet& a, const GridSet& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const GridSet& a, const GridSet& b) { return !(a == b); }

 private:
  std::map<Int, std::vector<Int>> rows_;
  std::size_t size_ = 0;
};

enum class GridNorm {
  l1_edge,      // directed edge boundary under steps ±e1, ±e2
  linf_vertex,  // vertex boundary under the 8 king moves
};

struct GridEdgeBoundary {
  std::vector<DirectedGridEdge> edges;
  std::size_t size() const { return edges.size(); }
};

GridEdgeBoundary grid_edge_boundary_l1(const GridSet& a);
GridSet grid_vertex_boundary_linf(const GridSet& a);
Int boundary2d_size(GridNorm norm, const GridSet& a);

/// N[A] = A + {0,±1}^2; |N[A]| = |A| + |vertex boundary|.
GridSet closed_neighborhood(const GridSet& a);

/// Row compression: every nonempty row with a_i points becomes [1, a_i].
/// Preserves cardinality, idempotent, never increases |N[·]|.
GridSet compress_rows(const GridSet& a);

GridSet transpose(const GridSet& a);

/// True iff the occupied rows form a contiguous band [I, J] whose row sets
/// form a containment chain A_I ⊇ ... ⊇ A_J ≠ ∅. Throws on the empty set.
bool is_nested(const GridSet& a);

/// Pointwise image of a 1-D set under the Euclidean embedding x = qb + r.
GridSet grid_embed_set(const ZSet& a, Int b);

}  // namespace ziso
