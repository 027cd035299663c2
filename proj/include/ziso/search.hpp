#pragma once

#include <string>
#include <vector>

#include "ziso/core.hpp"
#include "ziso/grid2d.hpp"

namespace ziso {

enum class BoundaryKind { edge, vertex };
const char* to_string(BoundaryKind k);

/// Exact boundary size of the interval of length n (0 for n <= 0).
Int interval_boundary_size(const GeneratorSet& g, BoundaryKind kind, Int n);

enum class WindowPolicy {
  dilation,  // W(n) = n * (b_max + 1), the default
  slack,     // W(n) = n + 2 * (b_max + 1)
  fixed,     // W(n) = user-provided constant
};
const char* to_string(WindowPolicy p);
Int window_for(const GeneratorSet& g, WindowPolicy policy, Int n, Int fixed_window);

/// All minimizers of a boundary functional at size n among canonical subsets
/// of [0, W-1] (canonical: min = 0). Results are window-restricted: a
/// theorem, not the search, is what extends them beyond the window.
struct OptimizerFamily {
  std::vector<Int> generators;
  Int n = 0;
  BoundaryKind kind = BoundaryKind::edge;
  Int window = 0;
  Int opt_value = 0;
  std::vector<ZSet> members;        // lexicographically sorted
  std::vector<std::string> labels;  // parallel to members
  bool window_restricted = true;

  Int min_member_diameter() const;
  Int max_member_diameter() const;
};

/// Branch-and-bound enumeration of the complete minimizer family.
/// Throws if W < n, n < 0, or the generators do not generate Z.
/// n = 0 yields the family {∅} with value 0.
OptimizerFamily enumerate_optimizers(const GeneratorSet& g, Int n, BoundaryKind kind,
                                     Int window, int workers = 1);

/// Two elements farther apart than this never share boundary contributions,
/// so wider gaps are equivalent up to translating the suffix. The search
/// explores one representative per far gap and expands ties afterwards.
Int interaction_range(const GeneratorSet& g, BoundaryKind kind);

/// All real members represented by a compressed member: every far gap (one of
/// exactly `far_step`) may stretch as long as the set stays inside the
/// window. Throws when the expansion would be unreasonably large.
std::vector<std::vector<Int>> expand_far_gaps(const std::vector<Int>& member, Int far_step,
                                              Int window);

/// Minimum boundary value only; same window semantics, stronger pruning.
Int optimum_value(const GeneratorSet& g, Int n, BoundaryKind kind, Int window);

/// Per-size window-restricted optima for every n in [1, n_max], with the
/// additive-slack window W(n) = n + slack. One shared pass over all canonical
/// sets with at most `slack` holes; result[n-1] equals optimum_value at n.
std::vector<Int> optimum_value_sweep(const GeneratorSet& g, BoundaryKind kind, Int n_max,
                                     Int slack);

/// Member classification: "interval", "grid_square(k,b)" for the canonical
/// {i + b*j} square with b inferred from the generator shape, else "other".
std::string classify_member(const ZSet& canonical_member, const GeneratorSet& g);

struct OptimizerFamily2D {
  GridNorm norm = GridNorm::l1_edge;
  Int n = 0;
  Int window = 0;
  Int opt_value = 0;
  std::vector<GridSet> members;  // canonical (min x = min y = 0), sorted
};

/// Exhaustive enumeration over canonical subsets of [0, W-1]^2. Exact and
/// intended for small n; throws when W < ceil(sqrt(n)) or the enumeration
/// space is unreasonably large.
OptimizerFamily2D enumerate_optimizers_2d(GridNorm norm, Int n, Int window);

struct NestVerdict {
  bool nested = false;
  bool diameter_shortcut = false;  // refused on diameters alone
  ZSet inner;                      // witness pair when nested
  ZSet outer;
  Int shift = 0;
  Int min_diameter_first = 0;
  Int max_diameter_second = 0;
};

/// Searches for a member of f1 that fits inside a member of f2 after a
/// nonnegative shift. Requires matching generators and kind, f1.n <= f2.n.
NestVerdict nest_check(const OptimizerFamily& f1, const OptimizerFamily& f2);

struct ScanRecord {
  Int n = 0;
  Int window = 0;
  Int opt_value = 0;
  std::size_t family_size = 0;
  std::vector<std::string> labels;  // sorted, distinct
};

struct SquareLabelCheck {
  Int n = 0;
  Int k = 0;             // n = k^2
  std::string expected;  // "grid_square" or "interval"
  bool consistent = false;
};

struct ScanReport {
  std::vector<Int> generators;
  BoundaryKind kind = BoundaryKind::edge;
  Int n_from = 0;
  Int n_to = 0;
  WindowPolicy policy = WindowPolicy::dilation;
  Int fixed_window = 0;
  std::vector<ScanRecord> records;
  std::vector<Int> transitions;  // smallest n where the label set changes
  std::vector<SquareLabelCheck> square_checks;
};

ScanReport phase_scan(const GeneratorSet& g, BoundaryKind kind, Int n_from, Int n_to,
                      WindowPolicy policy, Int fixed_window = 0, int workers = 1);

/// Stability probe: true when both runs (windows W and W+1) returned the same
/// family and every member diameter fits strictly inside the smaller window.
bool family_window_stable(const OptimizerFamily& at_w, const OptimizerFamily& at_w_plus_1);

}  // namespace ziso
