// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances are exact equalities throughout; randomized
// suites run 10^4 instances on fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ziso/certify.hpp"
#include "ziso/core.hpp"
#include "ziso/grid2d.hpp"
#include "ziso/search.hpp"

using namespace ziso;

namespace {

constexpr int kWorkers = 2;

GeneratorSet sym(std::vector<Int> positives) {
  std::vector<Int> all;
  for (Int b : positives) {
    all.push_back(b);
    all.push_back(-b);
  }
  return GeneratorSet::from_elements(std::move(all));
}

GeneratorSet gens(std::vector<Int> v) { return GeneratorSet::from_elements(std::move(v)); }

struct Check {
  bool ok = true;
  long long assertions = 0;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    ++assertions;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string show(const ZSet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.members().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.members()[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// 1. Interval boundary formulas.
void criterion_interval_formulas(Check& c) {
  for (Int b = 3; b <= 12; ++b) {
    const GeneratorSet edge_gens = sym({1, b});
    const GeneratorSet vertex_gens = sym({1, b - 1, b, b + 1});
    for (Int n = 1; n <= 40; ++n) {
      const Int e = edge_boundary_size(edge_gens, ZSet::interval(n));
      c.require(e == 2 * (std::min(b, n) + 1),
                "edge interval formula failed at b=" + std::to_string(b) +
                    " n=" + std::to_string(n));
      if (n >= b) {
        const Int v = vertex_boundary_size(vertex_gens, ZSet::interval(n));
        c.require(v == 2 * (b + 1), "vertex interval formula failed at b=" +
                                        std::to_string(b) + " n=" + std::to_string(n));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 2. Edge phase transition at b = 10.
void criterion_edge_transition(Check& c) {
  const GeneratorSet g = sym({1, 10});
  const OptimizerFamily low = enumerate_optimizers(g, 9, BoundaryKind::edge, 48, kWorkers);
  c.require(low.opt_value == 12, "opt(9) = " + std::to_string(low.opt_value) + ", want 12");
  c.require(low.members.size() == 1 &&
                low.members[0] == canonicalize(ZSet::grid_square(3, 10)),
            "family at n=9 is not exactly the canonical 3x3 grid square");

  const OptimizerFamily high = enumerate_optimizers(g, 33, BoundaryKind::edge, 48, kWorkers);
  c.require(high.opt_value == 22, "opt(33) = " + std::to_string(high.opt_value) + ", want 22");
  c.require(high.members.size() == 1 && high.members[0] == ZSet::range(0, 32),
            "family at n=33 is not exactly the interval");
}

// ---------------------------------------------------------------------------
// 3. Vertex phase transition at b = 9.
void criterion_vertex_transition(Check& c) {
  const GeneratorSet g = sym({1, 8, 9, 10});
  const OptimizerFamily low = enumerate_optimizers(g, 9, BoundaryKind::vertex, 40, kWorkers);
  c.require(low.opt_value == 16, "opt(9) = " + std::to_string(low.opt_value) + ", want 16");
  c.require(low.members.size() == 1 &&
                low.members[0] == canonicalize(ZSet::grid_square(3, 9)),
            "family at n=9 is not exactly the canonical 3x3 grid square");

  const OptimizerFamily high = enumerate_optimizers(g, 25, BoundaryKind::vertex, 40, kWorkers);
  c.require(high.opt_value == 20, "opt(25) = " + std::to_string(high.opt_value) + ", want 20");
  c.require(high.members.size() == 1 && high.members[0] == ZSet::range(0, 24),
            "family at n=25 is not exactly the interval");
}

// ---------------------------------------------------------------------------
// 4. Non-nesting of the families at sizes 16 and 33 for b = 10.
void criterion_non_nesting(Check& c) {
  const NonNestingInstance inst = non_nesting_instance(10);
  c.require(inst.n1 == 16 && inst.n2 == 33, "instance sizes");

  const GeneratorSet edge_g = sym({1, 10});
  const GeneratorSet vertex_g = sym({1, 9, 10, 11});
  for (BoundaryKind kind : {BoundaryKind::edge, BoundaryKind::vertex}) {
    const GeneratorSet& g = kind == BoundaryKind::edge ? edge_g : vertex_g;
    const OptimizerFamily f16 = enumerate_optimizers(g, 16, kind, 48, kWorkers);
    const OptimizerFamily f33 = enumerate_optimizers(g, 33, kind, 48, kWorkers);
    c.require(f16.members.size() == 1 &&
                  f16.members[0] == canonicalize(ZSet::grid_square(4, 10)),
              std::string(to_string(kind)) + ": family at 16 is not the 4x4 grid square");
    c.require(f33.members.size() == 1 && f33.members[0] == ZSet::range(0, 32),
              std::string(to_string(kind)) + ": family at 33 is not the interval");
    const NestVerdict verdict = nest_check(f16, f33);
    c.require(!verdict.nested, std::string(to_string(kind)) + ": verdict should be none");
    c.require(verdict.diameter_shortcut,
              std::string(to_string(kind)) + ": diameter shortcut did not fire");
    c.require(verdict.min_diameter_first == 33 && verdict.max_diameter_second == 32,
              std::string(to_string(kind)) + ": diameters should be 33 vs 32");
  }
}

// ---------------------------------------------------------------------------
// 5. Planar brute force.
void criterion_planar_families(Check& c) {
  const GridSet unit_square = GridSet::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const OptimizerFamily2D linf4 = enumerate_optimizers_2d(GridNorm::linf_vertex, 4, 6);
  c.require(linf4.opt_value == 12, "linf opt(4) = " + std::to_string(linf4.opt_value));
  c.require(linf4.members.size() == 1 && linf4.members[0] == unit_square,
            "linf family at 4 is not exactly the unit square");

  const OptimizerFamily2D l14 = enumerate_optimizers_2d(GridNorm::l1_edge, 4, 6);
  c.require(l14.opt_value == 8, "l1 opt(4) = " + std::to_string(l14.opt_value));
  c.require(l14.members.size() == 1 && l14.members[0] == unit_square,
            "l1 family at 4 is not exactly the unit square");

  const GridSet origin = GridSet::from_points({{0, 0}});
  const OptimizerFamily2D linf1 = enumerate_optimizers_2d(GridNorm::linf_vertex, 1, 6);
  c.require(linf1.opt_value == 8 && linf1.members.size() == 1 && linf1.members[0] == origin,
            "linf singleton family");
  const OptimizerFamily2D l11 = enumerate_optimizers_2d(GridNorm::l1_edge, 1, 6);
  c.require(l11.opt_value == 4 && l11.members.size() == 1 && l11.members[0] == origin,
            "l1 singleton family");
}

// ---------------------------------------------------------------------------
// 6a. Compression never increases the closed neighborhood.
GridSet random_grid_set(std::mt19937_64& rng, Int side, Int max_points) {
  std::uniform_int_distribution<Int> count(1, max_points);
  std::uniform_int_distribution<Int> coord(0, side - 1);
  std::vector<GridPoint> pts;
  const Int k = count(rng);
  for (Int i = 0; i < k; ++i) pts.push_back({coord(rng), coord(rng)});
  return GridSet::from_points(std::move(pts));
}

void criterion_compression_neighborhood(Check& c) {
  std::mt19937_64 rng(61001);
  for (int iter = 0; iter < 10000; ++iter) {
    const GridSet a = random_grid_set(rng, 16, 12);
    c.require(closed_neighborhood(compress_rows(a)).size() <= closed_neighborhood(a).size(),
              "|N[C(A)]| > |N[A]| at iteration " + std::to_string(iter));
  }
}

// 6b. Compression chain and nestedness of the double compression.
void criterion_compression_chain(Check& c) {
  std::mt19937_64 rng(61002);
  for (int iter = 0; iter < 10000; ++iter) {
    const GridSet a = random_grid_set(rng, 16, 12);
    const GridSet ca = compress_rows(a);
    const GridSet cct = compress_rows(transpose(ca));
    const Int va = boundary2d_size(GridNorm::linf_vertex, a);
    const Int vca = boundary2d_size(GridNorm::linf_vertex, ca);
    const Int vcct = boundary2d_size(GridNorm::linf_vertex, cct);
    c.require(va >= vca && vca >= vcct, "compression chain violated at " + std::to_string(iter));
    c.require(vca == boundary2d_size(GridNorm::linf_vertex, transpose(ca)),
              "transpose changed the boundary at " + std::to_string(iter));
    c.require(is_nested(cct), "double compression not nested at " + std::to_string(iter));
  }
}

// 6c. Residue-hypothesis inequalities.
std::vector<Int> residues_no_two_consecutive_missing(std::mt19937_64& rng, Int b) {
  // start full, remove residues whose cyclic neighbors are still present
  std::vector<bool> present(static_cast<std::size_t>(b), true);
  std::uniform_int_distribution<Int> removals(0, b / 2);
  std::uniform_int_distribution<Int> pick(0, b - 1);
  const Int target = removals(rng);
  for (Int i = 0; i < target; ++i) {
    const Int r = pick(rng);
    const Int prev = (r + b - 1) % b;
    const Int next = (r + 1) % b;
    if (present[static_cast<std::size_t>(r)] && present[static_cast<std::size_t>(prev)] &&
        present[static_cast<std::size_t>(next)])
      present[static_cast<std::size_t>(r)] = false;
  }
  std::vector<Int> out;
  for (Int r = 0; r < b; ++r)
    if (present[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

void criterion_residue_inequalities(Check& c) {
  std::mt19937_64 rng(61003);
  const std::vector<GeneratorSet> additive_with_one = {sym({1, 4}), gens({1, 3, 7}),
                                                       sym({1, 9, 10, 11})};
  const std::vector<GeneratorSet> additive_no_one = {gens({2, 3}), gens({3, 5}),
                                                     gens({-2, -3, 7})};
  std::uniform_int_distribution<Int> b_dist(3, 12);
  std::uniform_int_distribution<Int> len_pad(0, 12);
  std::uniform_int_distribution<Int> shift(-40, 40);

  for (int iter = 0; iter < 10000; ++iter) {
    // Additive edge bound on full-residue sets; with 1 in B equality
    // characterizes intervals.
    {
      const GeneratorSet& g = additive_with_one[static_cast<std::size_t>(iter % 3)];
      const auto values = oracle::random_full_residue_set(rng, g.moduli(), -40, 40, 8);
      const ZSet a = ZSet::from_values(values);
      const Int e = edge_boundary_size(g, a);
      c.require(e >= g.sum_abs(), "additive bound violated");
      c.require((e == g.sum_abs()) == block_decomposition(a).is_interval(),
                "additive equality direction (with 1) violated");
      const GeneratorSet& h = additive_no_one[static_cast<std::size_t>(iter % 3)];
      const auto hv = oracle::random_full_residue_set(rng, h.moduli(), -40, 40, 8);
      c.require(edge_boundary_size(h, ZSet::from_values(hv)) >= h.sum_abs(),
                "additive bound (no 1) violated");
      const Int n = h.b_max() + len_pad(rng);
      c.require(edge_boundary_size(h, ZSet::interval(n).translated(shift(rng))) == h.sum_abs(),
                "interval additive equality violated");
    }

    const Int b = b_dist(rng);
    const GeneratorSet symmetrized = [&] {
      std::vector<Int> positive{1, b - 1, b};
      if (iter % 2 == 1 && b > 3) positive.push_back(2 + (iter % (b - 3)));
      std::vector<Int> all;
      for (Int x : positive) {
        all.push_back(x);
        all.push_back(-x);
      }
      return GeneratorSet::from_elements(all);
    }();

    // Full residues: boundary at least 2b, equality exactly for intervals.
    {
      std::vector<Int> all_residues;
      for (Int r = 0; r < b; ++r) all_residues.push_back(r);
      const auto values = oracle::random_set_with_residues(rng, all_residues, b, -60, 60, 10);
      const ZSet a = ZSet::from_values(values);
      const Int v = vertex_boundary_size(symmetrized, a);
      c.require(v >= 2 * b, "full-residue bound below 2b");
      c.require((v == 2 * b) == block_decomposition(a).is_interval(),
                "full-residue equality direction violated");
      const Int n = b + len_pad(rng);
      c.require(vertex_boundary_size(symmetrized, ZSet::interval(n).translated(shift(rng))) ==
                    2 * b,
                "full-residue interval equality violated");
    }

    // One missing residue: same bound and the same equality characterization.
    {
      std::uniform_int_distribution<Int> miss(0, b - 1);
      const Int missing = miss(rng);
      std::vector<Int> allowed;
      for (Int r = 0; r < b; ++r)
        if (r != missing) allowed.push_back(r);
      const auto values = oracle::random_set_with_residues(rng, allowed, b, -60, 60, 10);
      const ZSet a = ZSet::from_values(values);
      const Int v = vertex_boundary_size(symmetrized, a);
      c.require(v >= 2 * b, "one-missing bound below 2b");
      c.require((v == 2 * b) == block_decomposition(a).is_interval(),
                "one-missing equality direction violated");
      c.require(vertex_boundary_size(symmetrized,
                                     ZSet::interval(b - 1).translated(shift(rng))) == 2 * b,
                "one-missing interval equality violated");
    }

    // No two cyclically-consecutive missing residues for the four-element
    // family: boundary at least 2(b+1), equality exactly for intervals.
    {
      const GeneratorSet family = sym({1, b - 1, b, b + 1});
      const auto allowed = residues_no_two_consecutive_missing(rng, b);
      const auto values = oracle::random_set_with_residues(rng, allowed, b, -60, 60, 10);
      const ZSet a = ZSet::from_values(values);
      const Int v = vertex_boundary_size(family, a);
      c.require(v >= 2 * (b + 1), "no-consecutive-missing bound below 2(b+1)");
      c.require((v == 2 * (b + 1)) == block_decomposition(a).is_interval(),
                "no-consecutive-missing equality direction violated");
      const Int n = b - 1 + len_pad(rng);
      c.require(vertex_boundary_size(family, ZSet::interval(n).translated(shift(rng))) ==
                    2 * (b + 1),
                "four-element interval equality violated");
    }
  }
}

// 6d. Boundary-preserving embeddings into the planar grids.
void criterion_embeddings(Check& c) {
  std::mt19937_64 rng(61004);
  for (int iter = 0; iter < 10000; ++iter) {
    const Int b = 4 + (iter % 6);

    // edge: sets avoiding residue 0 modulo b embed edge-by-edge
    {
      const GeneratorSet g = sym({1, b});
      std::vector<Int> allowed;
      for (Int r = 1; r < b; ++r) allowed.push_back(r);
      const auto values = oracle::random_set_with_residues(rng, allowed, b, -60, 60, 12);
      const ZSet a = ZSet::from_values(values);
      const EdgeBoundary eb = edge_boundary(g, a);
      const GridSet image = grid_embed_set(a, b);
      std::set<DirectedGridEdge> mapped;
      for (const LabeledEdge& e : eb.edges)
        mapped.insert(grid_embed_edge(e.head - e.step, e.head, b));
      c.require(mapped.size() == eb.size(), "edge map not injective on the boundary");
      const GridEdgeBoundary gb = grid_edge_boundary_l1(image);
      const std::set<DirectedGridEdge> expected(gb.edges.begin(), gb.edges.end());
      c.require(mapped == expected,
                "edge boundary image mismatch at iteration " + std::to_string(iter));
    }

    // vertex: sets avoiding residues 0 and b-1 embed pointwise
    {
      const GeneratorSet g = sym({1, b - 1, b, b + 1});
      std::vector<Int> allowed;
      for (Int r = 1; r < b - 1; ++r) allowed.push_back(r);
      const auto values = oracle::random_set_with_residues(rng, allowed, b, -60, 60, 12);
      const ZSet a = ZSet::from_values(values);
      const ZSet vb = vertex_boundary(g, a);
      const GridSet mapped = grid_embed_set(vb, b);
      c.require(mapped.size() == vb.size(), "vertex map not injective on the boundary");
      const GridSet expected = grid_vertex_boundary_linf(grid_embed_set(a, b));
      c.require(mapped == expected,
                "vertex boundary image mismatch at iteration " + std::to_string(iter));
    }
  }
}

// 6e. Expansion soundness.
void criterion_expansion_soundness(Check& c) {
  std::mt19937_64 rng(61005);
  const std::vector<GeneratorSet> matrix = {gens({2, 3}), sym({1, 4}), sym({1, 9, 10, 11}),
                                            gens({3, 5})};
  for (const GeneratorSet& g : matrix) {
    const ExpansionCertificate cert = expansion_certificate(g);
    c.require(cert.epsilon.num > 0, "epsilon not positive");
    int tested = 0;
    while (tested < 10000) {
      const auto values = oracle::random_subset(rng, -100, 100, 30);
      const ZSet a = ZSet::from_values(values);
      bool missing = false;
      for (Int m : g.moduli()) missing = missing || !residue_profile(a, m).full();
      if (!missing) continue;
      ++tested;
      const Int boundary = vertex_boundary_size(g, a);
      c.require(boundary * cert.epsilon.den >= static_cast<Int>(a.size()) * cert.epsilon.num,
                "expansion bound violated");
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Certified thresholds.
void criterion_certified_thresholds(Check& c) {
  const std::vector<GeneratorSet> matrix = {gens({2, 3}), sym({1, 4}), sym({1, 9, 10, 11}),
                                            gens({3, 5})};
  for (const GeneratorSet& g : matrix) {
    for (BoundaryKind kind : {BoundaryKind::edge, BoundaryKind::vertex}) {
      const Int n_cert = certified_interval_threshold(g, kind);
      c.require(n_cert >= 1, "threshold not positive");
      const EmpiricalThreshold emp =
          empirical_interval_threshold(g, kind, n_cert + 10, WindowPolicy::slack);
      c.require(emp.found, std::string(to_string(kind)) + ": interval not optimal at n_max");
      c.require(emp.n_emp <= n_cert,
                std::string(to_string(kind)) + ": empirical threshold " +
                    std::to_string(emp.n_emp) + " exceeds certified " +
                    std::to_string(n_cert));
      for (const ThresholdMargin& m : emp.margins) {
        if (m.n >= n_cert)
          c.require(m.margin() == 0, std::string(to_string(kind)) +
                                         ": interval misses the optimum at n = " +
                                         std::to_string(m.n));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 8. Pruned search vs naive enumeration.
void criterion_oracle_agreement(Check& c) {
  const std::vector<GeneratorSet> matrix = {sym({1, 4}), sym({1, 3, 4, 5}), gens({2, 3})};
  for (const GeneratorSet& g : matrix) {
    for (Int n = 1; n <= 8; ++n) {
      for (Int window = n; window <= 20; ++window) {
        for (BoundaryKind kind : {BoundaryKind::edge, BoundaryKind::vertex}) {
          const auto naive =
              oracle::enumerate(g.elements(), n, kind == BoundaryKind::vertex, window);
          const OptimizerFamily fam = enumerate_optimizers(g, n, kind, window);
          bool same =
              fam.opt_value == naive.opt && fam.members.size() == naive.members.size();
          if (same) {
            for (std::size_t i = 0; i < naive.members.size(); ++i)
              same = same && fam.members[i].members() == naive.members[i];
          }
          c.require(same, "divergence at n=" + std::to_string(n) +
                              " W=" + std::to_string(window) + " kind=" + to_string(kind) +
                              (fam.members.empty() ? "" : " first=" + show(fam.members[0])));
        }
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 interval boundary formulas", criterion_interval_formulas},
      {"2 edge phase transition (b = 10)", criterion_edge_transition},
      {"3 vertex phase transition (b = 9)", criterion_vertex_transition},
      {"4 non-nesting at sizes 16 and 33", criterion_non_nesting},
      {"5 planar brute-force families", criterion_planar_families},
      {"6a compression vs closed neighborhood", criterion_compression_neighborhood},
      {"6b compression chain and nestedness", criterion_compression_chain},
      {"6c residue-hypothesis inequalities", criterion_residue_inequalities},
      {"6d boundary-preserving embeddings", criterion_embeddings},
      {"6e expansion soundness", criterion_expansion_soundness},
      {"7 certified interval thresholds", criterion_certified_thresholds},
      {"8 search agrees with naive enumeration", criterion_oracle_agreement},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(check);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok) {
      std::printf("[PASS] criterion %-42s %8.2f s  (%lld checks)\n", criterion.name, seconds,
                  check.assertions);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %-42s %8.2f s  %s\n", criterion.name, seconds,
                  check.first_failure.c_str());
    }
    std::fflush(stdout);
  }
  return failures;
}
