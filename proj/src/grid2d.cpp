#include "ziso/grid2d.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ziso {

GridSet GridSet::from_points(std::vector<GridPoint> points) {
  GridSet g;
  for (const GridPoint& p : points) g.rows_[p.y].push_back(p.x);
  for (auto& [y, xs] : g.rows_) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    g.size_ += xs.size();
  }
  return g;
}

GridSet GridSet::square(Int k) {
  std::vector<GridPoint> pts;
  for (Int y = 1; y <= k; ++y)
    for (Int x = 1; x <= k; ++x) pts.push_back({x, y});
  return from_points(std::move(pts));
}

std::vector<GridPoint> GridSet::points() const {
  std::vector<GridPoint> out;
  out.reserve(size_);
  for (const auto& [y, xs] : rows_)
    for (Int x : xs) out.push_back({x, y});
  return out;
}

bool GridSet::contains(GridPoint p) const {
  auto it = rows_.find(p.y);
  if (it == rows_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), p.x);
}

GridSet GridSet::translated(Int dx, Int dy) const {
  GridSet g;
  g.size_ = size_;
  for (const auto& [y, xs] : rows_) {
    std::vector<Int> shifted;
    shifted.reserve(xs.size());
    for (Int x : xs) shifted.push_back(x + dx);
    g.rows_.emplace(y + dy, std::move(shifted));
  }
  return g;
}

GridSet GridSet::canonical() const {
  if (empty()) return *this;
  Int min_x = std::numeric_limits<Int>::max();
  for (const auto& [y, xs] : rows_) min_x = std::min(min_x, xs.front());
  const Int min_y = rows_.begin()->first;
  return translated(-min_x, -min_y);
}

GridEdgeBoundary grid_edge_boundary_l1(const GridSet& a) {
  static constexpr GridPoint kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  GridEdgeBoundary out;
  for (const auto& [y, xs] : a.rows()) {
    for (Int x : xs) {
      for (const GridPoint& d : kSteps) {
        const GridPoint head{x + d.x, y + d.y};
        if (!a.contains(head)) out.edges.push_back({{x, y}, head});
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

GridSet grid_vertex_boundary_linf(const GridSet& a) {
  std::vector<GridPoint> out;
  for (const auto& [y, xs] : a.rows()) {
    for (Int x : xs) {
      for (Int dy = -1; dy <= 1; ++dy) {
        for (Int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const GridPoint p{x + dx, y + dy};
          if (!a.contains(p)) out.push_back(p);
        }
      }
    }
  }
  return GridSet::from_points(std::move(out));
}

Int boundary2d_size(GridNorm norm, const GridSet& a) {
  switch (norm) {
    case GridNorm::l1_edge:
      return static_cast<Int>(grid_edge_boundary_l1(a).size());
    case GridNorm::linf_vertex:
      return static_cast<Int>(grid_vertex_boundary_linf(a).size());
  }
  throw std::logic_error("unknown norm");
}

GridSet closed_neighborhood(const GridSet& a) {
  std::vector<GridPoint> out;
  out.reserve(a.size() * 9);
  for (const auto& [y, xs] : a.rows()) {
    for (Int x : xs) {
      for (Int dy = -1; dy <= 1; ++dy)
        for (Int dx = -1; dx <= 1; ++dx) out.push_back({x + dx, y + dy});
    }
  }
  return GridSet::from_points(std::move(out));
}

GridSet compress_rows(const GridSet& a) {
  std::vector<GridPoint> out;
  out.reserve(a.size());
  for (const auto& [y, xs] : a.rows()) {
    for (Int x = 1; x <= static_cast<Int>(xs.size()); ++x) out.push_back({x, y});
  }
  return GridSet::from_points(std::move(out));
}

GridSet transpose(const GridSet& a) {
  std::vector<GridPoint> out;
  out.reserve(a.size());
  for (const auto& [y, xs] : a.rows())
    for (Int x : xs) out.push_back({y, x});
  return GridSet::from_points(std::move(out));
}

bool is_nested(const GridSet& a) {
  if (a.empty()) throw std::invalid_argument("nestedness is undefined for the empty set");
  const auto& rows = a.rows();
  // Occupied rows must be contiguous.
  Int expected = rows.begin()->first;
  for (const auto& [y, xs] : rows) {
    if (y != expected) return false;
    ++expected;
  }
  auto it = rows.begin();
  auto next = std::next(it);
  for (; next != rows.end(); ++it, ++next) {
    const std::vector<Int>& big = it->second;
    const std::vector<Int>& small = next->second;
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
  }
  return true;
}

GridSet grid_embed_set(const ZSet& a, Int b) {
  std::vector<GridPoint> out;
  out.reserve(a.size());
  for (Int x : a.members()) out.push_back(grid_embed(x, b));
  return GridSet::from_points(std::move(out));
}

}  // namespace ziso
