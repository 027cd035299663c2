#include "ziso/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace ziso {

const char* to_string(BoundaryKind k) {
  return k == BoundaryKind::edge ? "edge" : "vertex";
}

const char* to_string(WindowPolicy p) {
  switch (p) {
    case WindowPolicy::dilation: return "dilation";
    case WindowPolicy::slack: return "slack";
    case WindowPolicy::fixed: return "fixed";
  }
  return "?";
}

Int window_for(const GeneratorSet& g, WindowPolicy policy, Int n, Int fixed_window) {
  switch (policy) {
    case WindowPolicy::dilation: return std::max<Int>(n, 1) * (g.b_max() + 1);
    case WindowPolicy::slack: return n + 2 * (g.b_max() + 1);
    case WindowPolicy::fixed: return fixed_window;
  }
  throw std::logic_error("unknown window policy");
}

namespace {

Int isqrt_floor(Int n) {
  if (n < 0) return -1;
  Int s = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

Int merged_interval_union_size(std::vector<IntInterval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const IntInterval& a, const IntInterval& b) { return a.lo < b.lo; });
  Int total = 0;
  Int cur_lo = 0, cur_hi = -1;
  bool open = false;
  for (const IntInterval& p : parts) {
    if (p.lo > p.hi) continue;
    if (!open || p.lo > cur_hi + 1) {
      if (open) total += cur_hi - cur_lo + 1;
      cur_lo = p.lo;
      cur_hi = p.hi;
      open = true;
    } else {
      cur_hi = std::max(cur_hi, p.hi);
    }
  }
  if (open) total += cur_hi - cur_lo + 1;
  return total;
}

}  // namespace

Int interval_boundary_size(const GeneratorSet& g, BoundaryKind kind, Int n) {
  if (n <= 0) return 0;
  if (kind == BoundaryKind::edge) {
    Int total = 0;
    for (Int b : g.elements()) total += std::min(b < 0 ? -b : b, n);
    return total;
  }
  // Vertex boundary of [1, n]: a union of O(|B|) integer intervals.
  std::vector<IntInterval> parts;
  for (Int b : g.elements()) {
    if (b > 0) {
      parts.push_back({std::max(n + 1, b + 1), n + b});
    } else {
      const Int c = -b;
      parts.push_back({1 - c, std::min<Int>(0, n - c)});
    }
  }
  return merged_interval_union_size(std::move(parts));
}

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

void atomic_min(std::atomic<Int>& target, Int v) {
  Int cur = target.load(std::memory_order_relaxed);
  while (v < cur &&
         !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Incremental boundary bookkeeping for canonical subsets of [0, W-1] grown by
// appending a new rightmost element. Both boundary functionals are
// non-decreasing under such extensions, so the running value doubles as an
// admissible lower bound: per generator the boundary decomposes into one term
// per residue-class run, and runs of the frozen part can never merge once all
// new elements lie to the right.
class Engine {
 public:
  Engine(const GeneratorSet& g, BoundaryKind kind, Int window)
      : gens_(g.elements()),
        window_(window),
        vertex_(kind == BoundaryKind::vertex),
        b_max_(g.b_max()),
        in_a_(static_cast<std::size_t>(window), 0) {
    if (vertex_) cover_.assign(static_cast<std::size_t>(window + 2 * b_max_), 0);
  }

  Int value() const { return value_; }

  Int add(Int x) {
    Int delta = 0;
    if (vertex_) {
      for (Int b : gens_) {
        std::int32_t& c = cover_[static_cast<std::size_t>(x + b + b_max_)];
        if (c == 0 && !member(x + b)) ++delta;
        ++c;
      }
      if (cover_[static_cast<std::size_t>(x + b_max_)] > 0) --delta;
    } else {
      for (Int b : gens_) {
        if (!member(x + b)) ++delta;  // new out-edge (b, x + b)
        if (member(x - b)) --delta;   // edge (x - b, x) no longer leaves the set
      }
    }
    in_a_[static_cast<std::size_t>(x)] = 1;
    value_ += delta;
    return delta;
  }

  void remove(Int x, Int delta) {
    in_a_[static_cast<std::size_t>(x)] = 0;
    if (vertex_) {
      for (Int b : gens_) --cover_[static_cast<std::size_t>(x + b + b_max_)];
    }
    value_ -= delta;
  }

 private:
  bool member(Int v) const {
    return v >= 0 && v < window_ && in_a_[static_cast<std::size_t>(v)] != 0;
  }

  std::vector<Int> gens_;
  Int window_;
  bool vertex_;
  Int b_max_;
  std::vector<std::uint8_t> in_a_;
  std::vector<std::int32_t> cover_;
  Int value_ = 0;
};

// Full-family branch and bound: keeps every completion whose value ties the
// incumbent, so pruning is strict (bound > incumbent). Candidates are
// compressed: gaps beyond the interaction range are explored once, at their
// minimal width, and re-expanded into the tied translates after the search.
class FamilySearch {
 public:
  FamilySearch(const GeneratorSet& g, BoundaryKind kind, Int n, Int window, Int far_step,
               std::atomic<Int>& incumbent)
      : engine_(g, kind, window),
        n_(n),
        window_(window),
        far_step_(far_step),
        incumbent_(incumbent) {}

  void run_from_root() {
    const Int delta = engine_.add(0);
    chosen_.push_back(0);
    descend(0);
    chosen_.pop_back();
    engine_.remove(0, delta);
  }

  // Explores only the subtree where the second element equals `second`.
  void run_branch(Int second) {
    const Int d0 = engine_.add(0);
    chosen_.push_back(0);
    const Int d1 = engine_.add(second);
    chosen_.push_back(second);
    if (engine_.value() <= incumbent_.load(std::memory_order_relaxed)) descend(second);
    chosen_.pop_back();
    engine_.remove(second, d1);
    chosen_.pop_back();
    engine_.remove(0, d0);
  }

  Int best = kInf;
  std::vector<std::vector<Int>> members;

 private:
  void descend(Int last) {
    const Int t = static_cast<Int>(chosen_.size());
    if (t == n_) {
      record();
      return;
    }
    const Int hi = std::min(window_ - n_ + t, last + far_step_);
    for (Int x = last + 1; x <= hi; ++x) {
      const Int delta = engine_.add(x);
      if (engine_.value() <= incumbent_.load(std::memory_order_relaxed)) {
        chosen_.push_back(x);
        descend(x);
        chosen_.pop_back();
      }
      engine_.remove(x, delta);
    }
  }

  void record() {
    const Int v = engine_.value();
    if (v < best) {
      best = v;
      members.clear();
    }
    if (v == best) members.push_back(chosen_);
    atomic_min(incumbent_, v);
  }

  Engine engine_;
  Int n_;
  Int window_;
  Int far_step_;
  std::atomic<Int>& incumbent_;
  std::vector<Int> chosen_;
};

// Value-only variant: the incumbent is always an achieved value, so subtrees
// that merely tie it can be pruned as well.
class ValueSearch {
 public:
  ValueSearch(const GeneratorSet& g, BoundaryKind kind, Int n, Int window, Int far_step,
              Int achieved)
      : engine_(g, kind, window),
        n_(n),
        window_(window),
        far_step_(far_step),
        best_(achieved) {}

  Int run() {
    const Int delta = engine_.add(0);
    if (n_ == 1) best_ = std::min(best_, engine_.value());
    if (n_ > 1) descend(0, 1);
    engine_.remove(0, delta);
    return best_;
  }

 private:
  void descend(Int last, Int t) {
    if (t == n_) {
      best_ = std::min(best_, engine_.value());
      return;
    }
    const Int hi = std::min(window_ - n_ + t, last + far_step_);
    for (Int x = last + 1; x <= hi; ++x) {
      const Int delta = engine_.add(x);
      if (engine_.value() < best_) descend(x, t + 1);
      engine_.remove(x, delta);
    }
  }

  Engine engine_;
  Int n_;
  Int window_;
  Int far_step_;
  Int best_;
};

void validate_search_args(const GeneratorSet& g, Int n, Int window) {
  if (!g.generates_z())
    throw std::invalid_argument("generators do not generate Z (gcd = " +
                                std::to_string(g.gcd()) + ")");
  if (n < 0) throw std::invalid_argument("negative target size");
  if (window < n) throw std::invalid_argument("window smaller than target size");
}

}  // namespace

Int interaction_range(const GeneratorSet& g, BoundaryKind kind) {
  // Edge contributions are labeled by their tail, so two elements interact
  // only within b_max. Vertex boundaries can share out-neighbors up to twice
  // that distance.
  return kind == BoundaryKind::edge ? g.b_max() : 2 * g.b_max();
}

std::vector<std::vector<Int>> expand_far_gaps(const std::vector<Int>& member, Int far_step,
                                              Int window) {
  std::vector<std::size_t> far_positions;  // index i: gap between member[i] and member[i+1]
  for (std::size_t i = 0; i + 1 < member.size(); ++i) {
    if (member[i + 1] - member[i] == far_step) far_positions.push_back(i);
  }
  std::vector<std::vector<Int>> out;
  if (far_positions.empty() || member.empty()) {
    out.push_back(member);
    return out;
  }
  const Int room = window - 1 - member.back();
  // count = C(room + f, f); refuse absurd expansions instead of exhausting memory
  double count = 1.0;
  for (std::size_t i = 1; i <= far_positions.size(); ++i)
    count *= static_cast<double>(room + static_cast<Int>(i)) / static_cast<double>(i);
  if (count > 2e5)
    throw std::invalid_argument(
        "minimizer family too large to enumerate; shrink the window");

  // Distribute the extra room over the far gaps; each assignment shifts every
  // suffix accordingly and yields one real member.
  std::vector<Int> extras(far_positions.size(), 0);
  auto emit = [&]() {
    std::vector<Int> real = member;
    Int shift = 0;
    std::size_t next_far = 0;
    for (std::size_t i = 0; i + 1 < member.size(); ++i) {
      if (next_far < far_positions.size() && far_positions[next_far] == i) {
        shift += extras[next_far];
        ++next_far;
      }
      real[i + 1] = member[i + 1] + shift;
    }
    out.push_back(std::move(real));
  };
  auto assign = [&](auto&& self, std::size_t index, Int remaining) -> void {
    if (index == extras.size()) {
      emit();
      return;
    }
    for (Int e = 0; e <= remaining; ++e) {
      extras[index] = e;
      self(self, index + 1, remaining - e);
    }
    extras[index] = 0;
  };
  assign(assign, 0, room);
  return out;
}

Int OptimizerFamily::min_member_diameter() const {
  Int d = kInf;
  for (const ZSet& m : members) d = std::min(d, m.diameter());
  return members.empty() ? 0 : d;
}

Int OptimizerFamily::max_member_diameter() const {
  Int d = 0;
  for (const ZSet& m : members) d = std::max(d, m.diameter());
  return d;
}

OptimizerFamily enumerate_optimizers(const GeneratorSet& g, Int n, BoundaryKind kind,
                                     Int window, int workers) {
  validate_search_args(g, n, window);
  OptimizerFamily fam;
  fam.generators = g.elements();
  fam.n = n;
  fam.kind = kind;
  fam.window = window;
  if (n == 0) {
    fam.opt_value = 0;
    fam.members.push_back(ZSet{});
    fam.labels.push_back(classify_member(fam.members.front(), g));
    return fam;
  }

  std::atomic<Int> incumbent{interval_boundary_size(g, kind, n)};
  Int best = kInf;
  std::vector<std::vector<Int>> compressed;
  const Int far_step = interaction_range(g, kind) + 1;

  const Int branch_lo = 1;
  const Int branch_hi = std::min(window - n + 1, far_step);
  const int max_workers =
      n >= 2 ? static_cast<int>(std::min<Int>(branch_hi - branch_lo + 1, workers)) : 1;
  if (max_workers <= 1) {
    FamilySearch search(g, kind, n, window, far_step, incumbent);
    search.run_from_root();
    best = search.best;
    compressed = std::move(search.members);
  } else {
    std::vector<std::unique_ptr<FamilySearch>> searches;
    searches.reserve(static_cast<std::size_t>(max_workers));
    for (int i = 0; i < max_workers; ++i)
      searches.push_back(
          std::make_unique<FamilySearch>(g, kind, n, window, far_step, incumbent));
    std::vector<std::thread> threads;
    for (int i = 0; i < max_workers; ++i) {
      threads.emplace_back([&, i]() {
        for (Int second = branch_lo + i; second <= branch_hi; second += max_workers)
          searches[static_cast<std::size_t>(i)]->run_branch(second);
      });
    }
    for (std::thread& t : threads) t.join();
    for (const auto& s : searches) best = std::min(best, s->best);
    for (auto& s : searches) {
      if (s->best == best)
        compressed.insert(compressed.end(), s->members.begin(), s->members.end());
    }
  }

  std::vector<std::vector<Int>> raw_members;
  for (const auto& values : compressed) {
    for (auto& real : expand_far_gaps(values, far_step, window))
      raw_members.push_back(std::move(real));
  }
  std::sort(raw_members.begin(), raw_members.end());
  fam.opt_value = best;
  for (auto& values : raw_members) fam.members.push_back(ZSet::from_values(std::move(values)));
  fam.labels.reserve(fam.members.size());
  for (const ZSet& m : fam.members) fam.labels.push_back(classify_member(m, g));
  return fam;
}

Int optimum_value(const GeneratorSet& g, Int n, BoundaryKind kind, Int window) {
  validate_search_args(g, n, window);
  if (n == 0) return 0;
  ValueSearch search(g, kind, n, window, interaction_range(g, kind) + 1,
                     interval_boundary_size(g, kind, n));
  return search.run();
}

namespace {

// Single pass behind optimum_value_sweep. Prefixes are canonical sets in
// their own right, so every node both reports its own size and extends.
class SweepSearch {
 public:
  SweepSearch(const GeneratorSet& g, BoundaryKind kind, Int n_max, Int slack,
              std::vector<Int>& best_per_size, Int cap)
      : engine_(g, kind, n_max + slack),
        n_max_(n_max),
        slack_(slack),
        max_gap_menu_(interaction_range(g, kind)),
        best_(best_per_size),
        cap_(cap) {}

  void run() {
    const Int delta = engine_.add(0);
    descend(0, 1, 0);
    engine_.remove(0, delta);
  }

 private:
  void descend(Int last, Int t, Int holes) {
    const Int v = engine_.value();
    Int& slot = best_[static_cast<std::size_t>(t - 1)];
    if (v < slot) slot = v;
    if (t == n_max_ || v >= cap_) return;
    const Int max_gap = std::min(slack_ - holes, max_gap_menu_);
    for (Int gap = 0; gap <= max_gap; ++gap) {
      const Int x = last + 1 + gap;
      const Int delta = engine_.add(x);
      descend(x, t + 1, holes + gap);
      engine_.remove(x, delta);
    }
  }

  Engine engine_;
  Int n_max_;
  Int slack_;
  Int max_gap_menu_;
  std::vector<Int>& best_;
  Int cap_;
};

}  // namespace

std::vector<Int> optimum_value_sweep(const GeneratorSet& g, BoundaryKind kind, Int n_max,
                                     Int slack) {
  if (!g.generates_z())
    throw std::invalid_argument("generators do not generate Z (gcd = " +
                                std::to_string(g.gcd()) + ")");
  if (n_max < 1) throw std::invalid_argument("sweep needs n_max >= 1");
  if (slack < 0) throw std::invalid_argument("negative slack");
  std::vector<Int> best(static_cast<std::size_t>(n_max), kInf);
  Int cap = 0;
  for (Int n = 1; n <= n_max; ++n) {
    const Int iv = interval_boundary_size(g, kind, n);
    best[static_cast<std::size_t>(n - 1)] = iv;  // achieved: the interval is in window
    cap = std::max(cap, iv);
  }
  SweepSearch sweep(g, kind, n_max, slack, best, cap);
  sweep.run();
  return best;
}

std::string classify_member(const ZSet& member, const GeneratorSet& g) {
  if (block_decomposition(member).is_interval()) return "interval";
  std::optional<Int> b;
  if (g.symmetric()) {
    std::vector<Int> pos;
    for (Int e : g.elements())
      if (e > 0) pos.push_back(e);
    if (pos.size() == 2 && pos[0] == 1 && pos[1] >= 2) {
      b = pos[1];
    } else if (pos.size() == 4 && pos[0] == 1 && pos[1] >= 2 && pos[2] == pos[1] + 1 &&
               pos[3] == pos[1] + 2) {
      b = pos[1] + 1;  // second-largest element of ±{1, b-1, b, b+1}
    } else if (pos.size() == 3 && pos[0] == 1 && pos[1] == 2 && pos[2] == 3) {
      b = 2;  // degenerate ±{1, b-1, b, b+1} with b = 2
    }
  }
  if (b) {
    const Int k = isqrt_floor(static_cast<Int>(member.size()));
    if (k >= 1 && k * k == static_cast<Int>(member.size()) && k <= *b &&
        canonicalize(member) == canonicalize(ZSet::grid_square(k, *b))) {
      return "grid_square(" + std::to_string(k) + "," + std::to_string(*b) + ")";
    }
  }
  return "other";
}

namespace {

// ---- 2-D exhaustive enumeration -------------------------------------------

double log_binomial(Int n, Int k) {
  return std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) -
         std::lgamma(static_cast<double>(n - k + 1));
}

// 8x8 bitboard with a one-cell margin around windows up to 6x6.
struct BitboardSearch {
  Int window = 0;
  Int n = 0;
  GridNorm norm = GridNorm::l1_edge;
  Int best = kInf;
  std::vector<std::uint64_t> best_masks;

  static std::uint64_t bit(Int x, Int y) {
    return std::uint64_t{1} << ((y + 1) * 8 + (x + 1));
  }

  static Int moore_boundary(std::uint64_t m) {
    std::uint64_t h = m | (m << 1) | (m >> 1);
    std::uint64_t full = h | (h << 8) | (h >> 8);
    return static_cast<Int>(__builtin_popcountll(full & ~m));
  }

  static Int l1_boundary(std::uint64_t m) {
    Int total = 0;
    total += __builtin_popcountll((m << 1) & ~m);
    total += __builtin_popcountll((m >> 1) & ~m);
    total += __builtin_popcountll((m << 8) & ~m);
    total += __builtin_popcountll((m >> 8) & ~m);
    return total;
  }

  void run() {
    std::vector<std::uint64_t> cell_bits;
    for (Int y = 0; y < window; ++y)
      for (Int x = 0; x < window; ++x) cell_bits.push_back(bit(x, y));
    const std::uint64_t col0 = [this] {
      std::uint64_t m = 0;
      for (Int y = 0; y < window; ++y) m |= bit(0, y);
      return m;
    }();
    const Int cells = window * window;
    std::vector<Int> stack;
    std::uint64_t mask = 0;

    auto evaluate = [&](std::uint64_t m) {
      if ((m & col0) == 0) return;  // min x must be 0
      const Int v = norm == GridNorm::l1_edge ? l1_boundary(m) : moore_boundary(m);
      if (v < best) {
        best = v;
        best_masks.clear();
      }
      if (v == best) best_masks.push_back(m);
    };

    // Iterative choose: first cell must lie in row 0 so min y = 0.
    auto rec = [&](auto&& self, Int start, Int remaining) -> void {
      if (remaining == 0) {
        evaluate(mask);
        return;
      }
      for (Int i = start; i <= cells - remaining; ++i) {
        if (stack.empty() && i >= window) break;  // first cell beyond row 0
        mask |= cell_bits[static_cast<std::size_t>(i)];
        stack.push_back(i);
        self(self, i + 1, remaining - 1);
        stack.pop_back();
        mask &= ~cell_bits[static_cast<std::size_t>(i)];
      }
    };
    rec(rec, 0, n);
  }

  std::vector<GridPoint> mask_points(std::uint64_t m) const {
    std::vector<GridPoint> pts;
    for (Int y = 0; y < window; ++y)
      for (Int x = 0; x < window; ++x)
        if (m & bit(x, y)) pts.push_back({x, y});
    return pts;
  }
};

// Fallback for windows wider than the bitboard: dense occupancy grid with a
// stamp buffer for distinct-neighbor counting.
struct GenericSearch {
  Int window = 0;
  Int n = 0;
  GridNorm norm = GridNorm::l1_edge;
  Int best = kInf;
  std::vector<std::vector<GridPoint>> best_sets;

  std::vector<std::uint8_t> grid;   // (window + 2)^2 occupancy, 1-cell margin
  std::vector<std::uint32_t> stamp;
  std::uint32_t stamp_now = 0;
  Int side = 0;

  std::size_t idx(Int x, Int y) const {
    return static_cast<std::size_t>((y + 1) * side + (x + 1));
  }

  Int boundary(const std::vector<GridPoint>& pts) {
    Int count = 0;
    if (norm == GridNorm::l1_edge) {
      for (const GridPoint& p : pts) {
        count += !grid[idx(p.x + 1, p.y)];
        count += !grid[idx(p.x - 1, p.y)];
        count += !grid[idx(p.x, p.y + 1)];
        count += !grid[idx(p.x, p.y - 1)];
      }
      return count;
    }
    ++stamp_now;
    for (const GridPoint& p : pts) {
      for (Int dy = -1; dy <= 1; ++dy) {
        for (Int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const std::size_t q = idx(p.x + dx, p.y + dy);
          if (!grid[q] && stamp[q] != stamp_now) {
            stamp[q] = stamp_now;
            ++count;
          }
        }
      }
    }
    return count;
  }

  void run() {
    side = window + 2;
    grid.assign(static_cast<std::size_t>(side * side), 0);
    stamp.assign(grid.size(), 0);
    std::vector<GridPoint> pts;
    const Int cells = window * window;
    bool col0 = false;

    auto evaluate = [&]() {
      if (!col0) return;
      const Int v = boundary(pts);
      if (v < best) {
        best = v;
        best_sets.clear();
      }
      if (v == best) best_sets.push_back(pts);
    };

    auto rec = [&](auto&& self, Int start, Int remaining) -> void {
      if (remaining == 0) {
        evaluate();
        return;
      }
      for (Int i = start; i <= cells - remaining; ++i) {
        if (pts.empty() && i >= window) break;  // keep min y = 0
        const GridPoint p{i % window, i / window};
        const bool was_col0 = col0;
        if (p.x == 0) col0 = true;
        grid[idx(p.x, p.y)] = 1;
        pts.push_back(p);
        self(self, i + 1, remaining - 1);
        pts.pop_back();
        grid[idx(p.x, p.y)] = 0;
        col0 = was_col0;
      }
    };
    rec(rec, 0, n);
  }
};

}  // namespace

OptimizerFamily2D enumerate_optimizers_2d(GridNorm norm, Int n, Int window) {
  if (n < 1) throw std::invalid_argument("target size must be >= 1");
  const Int min_side = isqrt_floor(n - 1) + 1;  // ceil(sqrt(n))
  if (window < min_side)
    throw std::invalid_argument("window too small to contain any plausible minimizer");
  if (log_binomial(window * window, n) > std::log(2.5e8))
    throw std::invalid_argument("2-D enumeration space too large; reduce n or the window");

  OptimizerFamily2D fam;
  fam.norm = norm;
  fam.n = n;
  fam.window = window;

  std::vector<std::vector<GridPoint>> raw;
  if (window <= 6) {
    BitboardSearch search;
    search.window = window;
    search.n = n;
    search.norm = norm;
    search.run();
    fam.opt_value = search.best;
    for (std::uint64_t m : search.best_masks) raw.push_back(search.mask_points(m));
  } else {
    GenericSearch search;
    search.window = window;
    search.n = n;
    search.norm = norm;
    search.run();
    fam.opt_value = search.best;
    raw = std::move(search.best_sets);
  }
  for (auto& pts : raw) {
    std::sort(pts.begin(), pts.end());
  }
  std::sort(raw.begin(), raw.end(),
            [](const std::vector<GridPoint>& a, const std::vector<GridPoint>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
  for (auto& pts : raw) fam.members.push_back(GridSet::from_points(std::move(pts)));
  return fam;
}

NestVerdict nest_check(const OptimizerFamily& f1, const OptimizerFamily& f2) {
  if (f1.generators != f2.generators || f1.kind != f2.kind)
    throw std::invalid_argument("families over different generators or kinds");
  if (f1.n > f2.n) throw std::invalid_argument("first family must not exceed the second in size");

  NestVerdict verdict;
  verdict.min_diameter_first = f1.min_member_diameter();
  verdict.max_diameter_second = f2.max_member_diameter();
  if (verdict.min_diameter_first > verdict.max_diameter_second) {
    verdict.diameter_shortcut = true;  // no member can fit, whatever the shift
    return verdict;
  }
  for (const ZSet& a1 : f1.members) {
    for (const ZSet& a2 : f2.members) {
      if (a1.empty()) {
        verdict.nested = true;
        verdict.inner = a1;
        verdict.outer = a2;
        verdict.shift = 0;
        return verdict;
      }
      if (a1.diameter() > a2.diameter()) continue;
      const Int max_shift = a2.max() - a1.max();
      for (Int t = 0; t <= max_shift; ++t) {
        bool inside = true;
        for (Int x : a1.members()) {
          if (!a2.contains(x + t)) {
            inside = false;
            break;
          }
        }
        if (inside) {
          verdict.nested = true;
          verdict.inner = a1;
          verdict.outer = a2;
          verdict.shift = t;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

namespace {

std::optional<Int> edge_form_b(const GeneratorSet& g) {
  if (!g.symmetric()) return std::nullopt;
  std::vector<Int> pos;
  for (Int e : g.elements())
    if (e > 0) pos.push_back(e);
  if (pos.size() == 2 && pos[0] == 1 && pos[1] >= 2) return pos[1];
  return std::nullopt;
}

std::optional<Int> vertex_form_b(const GeneratorSet& g) {
  if (!g.symmetric()) return std::nullopt;
  std::vector<Int> pos;
  for (Int e : g.elements())
    if (e > 0) pos.push_back(e);
  if (pos.size() == 4 && pos[0] == 1 && pos[1] >= 2 && pos[2] == pos[1] + 1 &&
      pos[3] == pos[1] + 2)
    return pos[1] + 1;
  return std::nullopt;
}

std::vector<std::string> distinct_labels(const OptimizerFamily& fam) {
  std::set<std::string> s(fam.labels.begin(), fam.labels.end());
  return std::vector<std::string>(s.begin(), s.end());
}

bool all_labels_are(const OptimizerFamily& fam, const std::string& prefix) {
  if (fam.labels.empty()) return false;
  for (const std::string& l : fam.labels) {
    if (l.compare(0, prefix.size(), prefix) != 0) return false;
  }
  return true;
}

}  // namespace

ScanReport phase_scan(const GeneratorSet& g, BoundaryKind kind, Int n_from, Int n_to,
                      WindowPolicy policy, Int fixed_window, int workers) {
  if (n_from < 0 || n_to < n_from) throw std::invalid_argument("bad scan range");
  ScanReport report;
  report.generators = g.elements();
  report.kind = kind;
  report.n_from = n_from;
  report.n_to = n_to;
  report.policy = policy;
  report.fixed_window = fixed_window;

  const std::optional<Int> square_b =
      kind == BoundaryKind::edge ? edge_form_b(g) : vertex_form_b(g);
  std::vector<std::string> prev_labels;
  for (Int n = n_from; n <= n_to; ++n) {
    const Int window = window_for(g, policy, n, fixed_window);
    OptimizerFamily fam = enumerate_optimizers(g, n, kind, window, workers);
    ScanRecord rec;
    rec.n = n;
    rec.window = window;
    rec.opt_value = fam.opt_value;
    rec.family_size = fam.members.size();
    rec.labels = distinct_labels(fam);
    if (n > n_from && rec.labels != prev_labels) report.transitions.push_back(n);
    prev_labels = rec.labels;
    report.records.push_back(rec);

    if (square_b) {
      const Int b = *square_b;
      const Int k = isqrt_floor(n);
      const bool is_square = k >= 2 && k * k == n;
      const Int lo_threshold = kind == BoundaryKind::edge ? b + 1 : b - 1;  // squares win below
      if (is_square && (kind == BoundaryKind::edge || n >= b) && b >= 3) {
        SquareLabelCheck check;
        check.n = n;
        check.k = k;
        if (2 * k < lo_threshold) {
          check.expected = "grid_square";
          check.consistent = all_labels_are(fam, "grid_square");
          report.square_checks.push_back(check);
        } else if (4 * n > lo_threshold * lo_threshold) {
          check.expected = "interval";
          check.consistent = all_labels_are(fam, "interval");
          report.square_checks.push_back(check);
        }
      }
    }
  }
  return report;
}

bool family_window_stable(const OptimizerFamily& at_w, const OptimizerFamily& at_w_plus_1) {
  if (at_w.generators != at_w_plus_1.generators || at_w.kind != at_w_plus_1.kind ||
      at_w.n != at_w_plus_1.n)
    return false;
  if (at_w_plus_1.window != at_w.window + 1) return false;
  if (at_w.opt_value != at_w_plus_1.opt_value) return false;
  if (!(at_w.members == at_w_plus_1.members)) return false;
  return at_w.max_member_diameter() < at_w.window - 1;
}

}  // namespace ziso
