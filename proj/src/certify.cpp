#include "ziso/certify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace ziso {

namespace {

Int floor_mod(Int x, Int m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

constexpr std::size_t kDiscoveryCap = 1u << 22;

}  // namespace

Witness rooted_witness(const GeneratorSet& g, Int m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (!g.generates_z())
    throw std::invalid_argument("generators do not generate Z (gcd = " +
                                std::to_string(g.gcd()) + ")");

  struct Discovery {
    Int parent;
    Int step;
  };
  std::unordered_map<Int, Discovery> seen;
  std::deque<Int> queue;
  std::vector<Int> reps(static_cast<std::size_t>(m), 0);
  std::vector<bool> covered(static_cast<std::size_t>(m), false);
  Int covered_count = 0;

  auto visit = [&](Int v) {
    const Int r = floor_mod(v, m);
    if (!covered[static_cast<std::size_t>(r)]) {
      covered[static_cast<std::size_t>(r)] = true;
      reps[static_cast<std::size_t>(r)] = v;
      ++covered_count;
    }
  };

  seen.emplace(0, Discovery{0, 0});
  queue.push_back(0);
  visit(0);
  while (covered_count < m) {
    if (queue.empty() || seen.size() > kDiscoveryCap)
      throw std::logic_error("residue discovery did not terminate");
    const Int u = queue.front();
    queue.pop_front();
    for (Int b : g.elements()) {
      const Int v = u + b;
      if (seen.count(v)) continue;
      seen.emplace(v, Discovery{u, b});
      queue.push_back(v);
      visit(v);
      if (covered_count == m) break;
    }
  }

  Witness w;
  w.modulus = m;
  w.representatives = reps;
  std::set<Int> vertices;
  std::set<std::pair<Int, Int>> edges;
  for (Int rep : reps) {
    Int v = rep;
    vertices.insert(v);
    while (v != 0) {
      const Discovery& d = seen.at(v);
      edges.insert({d.parent, v});
      vertices.insert(d.parent);
      v = d.parent;
    }
  }
  w.vertices.assign(vertices.begin(), vertices.end());
  w.edges.assign(edges.begin(), edges.end());
  return w;
}

bool witness_valid(const Witness& w, const GeneratorSet& g) {
  if (w.modulus < 1) return false;
  if (!std::binary_search(w.vertices.begin(), w.vertices.end(), Int{0})) return false;
  for (const auto& [tail, head] : w.edges) {
    if (!g.contains(head - tail)) return false;
    if (!std::binary_search(w.vertices.begin(), w.vertices.end(), tail)) return false;
    if (!std::binary_search(w.vertices.begin(), w.vertices.end(), head)) return false;
  }
  // Rootedness: every vertex reachable from 0 along witness edges.
  std::unordered_map<Int, std::vector<Int>> out;
  for (const auto& [tail, head] : w.edges) out[tail].push_back(head);
  std::unordered_set<Int> reached{0};
  std::deque<Int> queue{0};
  while (!queue.empty()) {
    const Int u = queue.front();
    queue.pop_front();
    auto it = out.find(u);
    if (it == out.end()) continue;
    for (Int v : it->second) {
      if (reached.insert(v).second) queue.push_back(v);
    }
  }
  for (Int v : w.vertices)
    if (!reached.count(v)) return false;
  // Residue coverage by the stored representatives.
  if (static_cast<Int>(w.representatives.size()) != w.modulus) return false;
  for (Int r = 0; r < w.modulus; ++r) {
    const Int rep = w.representatives[static_cast<std::size_t>(r)];
    if (floor_mod(rep, w.modulus) != r) return false;
    if (!std::binary_search(w.vertices.begin(), w.vertices.end(), rep)) return false;
  }
  return true;
}

std::map<Int, Int> integer_combination(const Witness& w, const GeneratorSet& g, Int x) {
  // Pick a generator whose absolute value is the witness modulus; the path to
  // the representative of x's residue gives x up to a multiple of |b1|.
  Int b1 = 0;
  for (Int b : g.elements()) {
    if ((b < 0 ? -b : b) == w.modulus) {
      b1 = b;
      break;
    }
  }
  if (b1 == 0) throw std::invalid_argument("witness modulus is not a generator magnitude");

  std::unordered_map<Int, std::pair<Int, Int>> parent;  // head -> (tail, step)
  for (const auto& [tail, head] : w.edges) parent[head] = {tail, head - tail};

  const Int rep = w.representatives[static_cast<std::size_t>(floor_mod(x, w.modulus))];
  std::map<Int, Int> coeffs;
  Int v = rep;
  while (v != 0) {
    const auto& [tail, step] = parent.at(v);
    coeffs[step] += 1;
    v = tail;
  }
  // x = rep + q * |b1|; fold the correction into b1's coefficient.
  const Int q = (x - rep) / w.modulus;
  coeffs[b1] += b1 > 0 ? q : -q;
  return coeffs;
}

ExpansionCertificate expansion_certificate(const GeneratorSet& g) {
  if (!g.generates_z())
    throw std::invalid_argument("generators do not generate Z (gcd = " +
                                std::to_string(g.gcd()) + ")");
  ExpansionCertificate cert;
  cert.generators = g.elements();
  const std::vector<Int> moduli = g.moduli();
  if (moduli.empty()) {
    // Only ±1 present: a set missing a residue mod 1 is empty, the bound is
    // vacuous and epsilon defaults to 1.
    cert.degenerate = true;
    cert.epsilon = Rational{1, 1};
    return cert;
  }
  Int max_width = 1;
  for (Int m : moduli) {
    Witness w = rooted_witness(g, m);
    max_width = std::max(max_width, w.width());
    cert.witnesses.emplace(m, std::move(w));
  }
  cert.epsilon = Rational{1, max_width};
  return cert;
}

Int certified_interval_threshold(const GeneratorSet& g, BoundaryKind kind,
                                 const Rational& eps) {
  if (eps.num <= 0) throw std::invalid_argument("expansion constant must be positive");
  const std::vector<Int> moduli = g.moduli();
  if (moduli.empty()) return 1;  // intervals are the only minimizers at every size

  if (kind == BoundaryKind::edge) {
    const Int total = g.sum_abs();
    // smallest N with eps * N > total
    const Int strict = (eps.den * total) / eps.num + 1;
    return std::max(g.b_max(), strict);
  }
  const Int s = g.b_plus() + g.b_minus();
  // smallest N with eps * N >= 3s + 2 (which also gives eps * N > s)
  const Int need = 3 * s + 2;
  const Int at_least = (eps.den * need + eps.num - 1) / eps.num;
  const Int strict = (eps.den * s) / eps.num + 1;
  return std::max(std::max(g.b_plus(), g.b_minus()), std::max(at_least, strict));
}

Int certified_interval_threshold(const GeneratorSet& g, BoundaryKind kind) {
  const ExpansionCertificate cert = expansion_certificate(g);
  if (cert.degenerate) return 1;
  return certified_interval_threshold(g, kind, cert.epsilon);
}

EmpiricalThreshold empirical_interval_threshold(const GeneratorSet& g, BoundaryKind kind,
                                                Int n_max, WindowPolicy policy,
                                                Int fixed_window) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  EmpiricalThreshold result;
  result.n_max = n_max;

  std::vector<Int> optima;
  if (policy == WindowPolicy::slack) {
    optima = optimum_value_sweep(g, kind, n_max, 2 * (g.b_max() + 1));
  } else {
    optima.reserve(static_cast<std::size_t>(n_max));
    for (Int n = 1; n <= n_max; ++n)
      optima.push_back(optimum_value(g, n, kind, window_for(g, policy, n, fixed_window)));
  }

  Int last_gap = 0;  // last n where the interval misses the optimum
  for (Int n = 1; n <= n_max; ++n) {
    ThresholdMargin m;
    m.n = n;
    m.opt_value = optima[static_cast<std::size_t>(n - 1)];
    m.interval_value = interval_boundary_size(g, kind, n);
    if (m.margin() != 0) last_gap = n;
    result.margins.push_back(m);
  }
  result.found = last_gap < n_max;
  result.n_emp = last_gap + 1;
  return result;
}

}  // namespace ziso
