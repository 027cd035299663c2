#include "ziso/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ziso {

GeneratorSet GeneratorSet::from_elements(std::vector<Int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::invalid_argument("generator set must be nonempty");
  for (Int b : elements) {
    if (b == 0) throw std::invalid_argument("0 is not a valid generator");
  }
  GeneratorSet g;
  g.elements_ = std::move(elements);
  Int gcd = 0;
  bool symmetric = true;
  for (Int b : g.elements_) {
    const Int ab = b < 0 ? -b : b;
    g.b_max_ = std::max(g.b_max_, ab);
    if (b > 0) g.b_plus_ = std::max(g.b_plus_, b);
    if (b < 0) g.b_minus_ = std::max(g.b_minus_, -b);
    gcd = std::gcd(gcd, ab);
    if (!std::binary_search(g.elements_.begin(), g.elements_.end(), -b)) symmetric = false;
  }
  g.gcd_ = gcd;
  g.symmetric_ = symmetric;
  return g;
}

Int GeneratorSet::sum_abs() const {
  Int s = 0;
  for (Int b : elements_) s += b < 0 ? -b : b;
  return s;
}

std::vector<Int> GeneratorSet::moduli() const {
  std::vector<Int> ms;
  for (Int b : elements_) {
    const Int ab = b < 0 ? -b : b;
    if (ab >= 2) ms.push_back(ab);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

bool GeneratorSet::contains(Int b) const {
  return std::binary_search(elements_.begin(), elements_.end(), b);
}

ZSet ZSet::from_values(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ZSet s;
  s.members_ = std::move(values);
  return s;
}

ZSet ZSet::interval(Int n) { return range(1, n); }

ZSet ZSet::range(Int lo, Int hi) {
  ZSet s;
  if (lo <= hi) {
    s.members_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int x = lo; x <= hi; ++x) s.members_.push_back(x);
  }
  return s;
}

ZSet ZSet::grid_square(Int k, Int b) {
  if (k < 1) throw std::invalid_argument("grid square needs k >= 1");
  if (b < 2 || k > b) throw std::invalid_argument("grid square needs 2 <= b and k <= b");
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (Int j = 1; j <= k; ++j)
    for (Int i = 1; i <= k; ++i) values.push_back(i + b * j);
  return from_values(std::move(values));
}

bool ZSet::contains(Int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Int ZSet::min() const {
  if (empty()) throw std::logic_error("min of empty set");
  return members_.front();
}

Int ZSet::max() const {
  if (empty()) throw std::logic_error("max of empty set");
  return members_.back();
}

ZSet ZSet::translated(Int t) const {
  ZSet s;
  s.members_.reserve(members_.size());
  for (Int x : members_) s.members_.push_back(x + t);
  return s;
}

std::vector<std::uint8_t> ZSet::dense(Int window) const {
  if (window < 0) throw std::invalid_argument("negative window");
  std::vector<std::uint8_t> table(static_cast<std::size_t>(window), 0);
  for (Int x : members_) {
    if (x >= 0 && x < window) table[static_cast<std::size_t>(x)] = 1;
  }
  return table;
}

ZSet ZSet::from_dense(const std::vector<std::uint8_t>& table) {
  std::vector<Int> values;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i]) values.push_back(static_cast<Int>(i));
  }
  ZSet s;
  s.members_ = std::move(values);
  return s;
}

ZSet canonicalize(const ZSet& a) {
  if (a.empty()) return a;
  return a.translated(-a.min());
}

EdgeBoundary edge_boundary(const GeneratorSet& g, const ZSet& a) {
  EdgeBoundary out;
  for (Int b : g.elements()) {
    for (Int x : a.members()) {
      const Int v = x + b;
      if (!a.contains(v)) out.edges.push_back({b, v});
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Int edge_boundary_size(const GeneratorSet& g, const ZSet& a) {
  Int count = 0;
  for (Int b : g.elements()) {
    for (Int x : a.members()) {
      if (!a.contains(x + b)) ++count;
    }
  }
  return count;
}

ZSet vertex_boundary(const GeneratorSet& g, const ZSet& a) {
  std::vector<Int> out;
  out.reserve(a.size() * g.elements().size());
  for (Int b : g.elements()) {
    for (Int x : a.members()) {
      const Int v = x + b;
      if (!a.contains(v)) out.push_back(v);
    }
  }
  return ZSet::from_values(std::move(out));
}

Int vertex_boundary_size(const GeneratorSet& g, const ZSet& a) {
  return static_cast<Int>(vertex_boundary(g, a).size());
}

namespace {

Int floor_mod(Int x, Int m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool ResidueProfile::full() const {
  for (Int c : counts)
    if (c == 0) return false;
  return true;
}

std::vector<Int> ResidueProfile::missing() const {
  std::vector<Int> out;
  for (Int r = 0; r < modulus; ++r)
    if (counts[static_cast<std::size_t>(r)] == 0) out.push_back(r);
  return out;
}

std::vector<ResidueProfile::Run> ResidueProfile::missing_runs() const {
  std::vector<Run> runs;
  const Int m = modulus;
  bool any_present = false;
  for (Int c : counts) any_present = any_present || c > 0;
  if (!any_present) {
    runs.push_back({0, m});
    return runs;
  }
  // Walk the cycle starting just after a present residue, so each maximal
  // missing run is seen exactly once from its start.
  Int anchor = 0;
  while (counts[static_cast<std::size_t>(anchor)] == 0) ++anchor;
  for (Int step = 0; step < m; ++step) {
    const Int cur = floor_mod(anchor + 1 + step, m);
    if (counts[static_cast<std::size_t>(cur)] == 0) {
      const Int prev = floor_mod(cur - 1, m);
      if (counts[static_cast<std::size_t>(prev)] != 0) {
        runs.push_back({cur, 1});
      } else {
        runs.back().length += 1;
      }
    }
  }
  return runs;
}

Int ResidueProfile::longest_missing_run() const {
  Int best = 0;
  for (const Run& run : missing_runs()) best = std::max(best, run.length);
  return best;
}

ResidueProfile residue_profile(const ZSet& a, Int m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  ResidueProfile p;
  p.modulus = m;
  p.counts.assign(static_cast<std::size_t>(m), 0);
  for (Int x : a.members()) p.counts[static_cast<std::size_t>(floor_mod(x, m))] += 1;
  return p;
}

BlockDecomposition block_decomposition(const ZSet& a) {
  BlockDecomposition d;
  const auto& xs = a.members();
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[j] + 1) ++j;
    if (!d.blocks.empty()) d.gaps.push_back(xs[i] - d.blocks.back().hi - 1);
    d.blocks.push_back({xs[i], xs[j]});
    i = j + 1;
  }
  return d;
}

GridPoint grid_embed(Int x, Int b) {
  if (b < 2) throw std::invalid_argument("embedding requires b >= 2");
  Int q = x / b;
  Int r = x % b;
  if (r < 0) {
    r += b;
    q -= 1;
  }
  return {q, r};
}

DirectedGridEdge grid_embed_edge(Int tail, Int head, Int b) {
  if (b < 2) throw std::invalid_argument("embedding requires b >= 2");
  const Int step = head - tail;
  const GridPoint p = grid_embed(tail, b);
  if (step == b) return {p, {p.x + 1, p.y}};
  if (step == -b) return {p, {p.x - 1, p.y}};
  if (step == 1) return {p, {p.x, p.y + 1}};
  if (step == -1) return {p, {p.x, p.y - 1}};
  throw std::invalid_argument("edge step must be one of +-1, +-" + std::to_string(b));
}

NonNestingInstance non_nesting_instance(Int b) {
  if (b < 10 || b % 2 != 0)
    throw std::invalid_argument("non-nesting instance requires even b >= 10");
  NonNestingInstance inst;
  inst.b = b;
  inst.k = (b - 2) / 2;
  inst.n1 = inst.k * inst.k;
  inst.n2 = (b + 1) * (inst.k - 1);
  // 2k < b - 1 keeps the square below the interval regime, and
  // 4*n2 > (b+1)^2 puts the interval size above it.
  if (!(2 * inst.k < b - 1)) throw std::logic_error("square size not below threshold");
  if (!(4 * inst.n2 > (b + 1) * (b + 1))) throw std::logic_error("interval size not above threshold");
  return inst;
}

}  // namespace ziso
