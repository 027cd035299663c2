#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ziso/core.hpp"
#include "ziso/rational.hpp"
#include "ziso/search.hpp"

namespace ziso {

/// Finite rooted subgraph of the Cayley graph hitting every residue class
/// modulo a given modulus. Its width certifies an expansion constant: a set
/// missing a residue loses at least one vertex per width-sized stretch.
struct Witness {
  Int modulus = 1;
  std::vector<Int> vertices;                   // sorted, contains 0
  std::vector<std::pair<Int, Int>> edges;      // (tail, head), head - tail a generator
  std::vector<Int> representatives;            // representatives[r] ≡ r (mod modulus)
  Int width() const {
    return vertices.empty() ? 0 : vertices.back() - vertices.front();
  }
};

/// Breadth-first discovery from 0, generators in ascending order, stopping as
/// soon as every residue class mod m has been reached; returns the union of
/// the discovery paths to the per-residue representatives.
Witness rooted_witness(const GeneratorSet& g, Int m);

/// Checks the witness invariants directly: 0 present, every vertex reachable
/// from 0 along witness edges, every residue class represented.
bool witness_valid(const Witness& w, const GeneratorSet& g);

/// Integer-combination representation of x from a witness whose modulus is
/// |b| for a generator b: coefficients per generator so that the combination
/// evaluates to x.
std::map<Int, Int> integer_combination(const Witness& w, const GeneratorSet& g, Int x);

struct ExpansionCertificate {
  std::vector<Int> generators;
  bool degenerate = false;           // no modulus >= 2: epsilon defaults to 1
  Rational epsilon{1, 1};            // min over moduli of 1 / width
  std::map<Int, Witness> witnesses;  // keyed by modulus
};

/// Exact expansion constant: any finite set missing some residue modulo |b|
/// for some generator b has vertex boundary at least epsilon times its size.
ExpansionCertificate expansion_certificate(const GeneratorSet& g);

/// Smallest certified size beyond which the interval is optimal:
///   edge:   smallest N >= max|b| with eps*N > sum |b|;
///   vertex: smallest N >= max(b+, b-) with eps*N >= 3(b+ + b-) + 2
///           (which also forces eps*N > b+ + b-).
Int certified_interval_threshold(const GeneratorSet& g, BoundaryKind kind);
Int certified_interval_threshold(const GeneratorSet& g, BoundaryKind kind,
                                 const Rational& eps);

struct ThresholdMargin {
  Int n = 0;
  Int opt_value = 0;
  Int interval_value = 0;
  Int margin() const { return interval_value - opt_value; }  // 0 iff interval attains
};

struct EmpiricalThreshold {
  bool found = false;  // false: interval not optimal at n_max itself
  Int n_emp = 0;       // smallest N with margin 0 for every n in [N, n_max]
  Int n_max = 0;
  std::vector<ThresholdMargin> margins;  // one record per n in [1, n_max]
};

/// Smallest N such that the interval attains the window-restricted optimum
/// for every n in [N, n_max]. The slack policy uses one shared sweep; other
/// policies fall back to per-size searches.
EmpiricalThreshold empirical_interval_threshold(const GeneratorSet& g, BoundaryKind kind,
                                                Int n_max, WindowPolicy policy,
                                                Int fixed_window = 0);

}  // namespace ziso
