#include "ziso/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace ziso {

using json = nlohmann::ordered_json;

namespace {

json set_to_json(const ZSet& a) { return json(a.members()); }

json grid_to_json(const GridSet& a) {
  json out = json::array();
  for (const GridPoint& p : a.points()) out.push_back(json::array({p.x, p.y}));
  return out;
}

std::string csv_join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '|';
    out += labels[i];
  }
  return out;
}

json margins_json(const EmpiricalThreshold& emp) {
  json out;
  out["n_max"] = emp.n_max;
  out["found"] = emp.found;
  if (emp.found) out["n_emp"] = emp.n_emp;
  json gaps = json::array();
  for (const ThresholdMargin& m : emp.margins) {
    if (m.margin() != 0)
      gaps.push_back({{"n", m.n}, {"opt_value", m.opt_value}, {"interval_value", m.interval_value}});
  }
  out["non_attaining"] = gaps;
  return out;
}

}  // namespace

std::string boundary_report_json(const GeneratorSet& g, const ZSet& a, BoundaryKind kind) {
  json out;
  out["schema"] = "ziso.boundary.v1";
  out["generators"] = g.elements();
  out["set_size"] = a.size();
  out["kind"] = to_string(kind);
  if (kind == BoundaryKind::edge) {
    const EdgeBoundary eb = edge_boundary(g, a);
    out["cardinality"] = eb.size();
    json edges = json::array();
    for (const LabeledEdge& e : eb.edges) edges.push_back(json::array({e.step, e.head}));
    out["edges"] = edges;
  } else {
    const ZSet vb = vertex_boundary(g, a);
    out["cardinality"] = vb.size();
    out["elements"] = set_to_json(vb);
  }
  return out.dump(2);
}

std::string family_json(const OptimizerFamily& fam) {
  json out;
  out["schema"] = "ziso.family.v1";
  out["generators"] = fam.generators;
  out["n"] = fam.n;
  out["kind"] = to_string(fam.kind);
  out["window"] = fam.window;
  out["window_restricted"] = fam.window_restricted;
  out["opt_value"] = fam.opt_value;
  json members = json::array();
  for (const ZSet& m : fam.members) members.push_back(set_to_json(m));
  out["members"] = members;
  out["labels"] = fam.labels;
  return out.dump(2);
}

std::string family2d_json(const OptimizerFamily2D& fam) {
  json out;
  out["schema"] = "ziso.family2d.v1";
  out["norm"] = fam.norm == GridNorm::l1_edge ? "l1_edge" : "linf_vertex";
  out["n"] = fam.n;
  out["window"] = fam.window;
  out["window_restricted"] = true;
  out["opt_value"] = fam.opt_value;
  json members = json::array();
  for (const GridSet& m : fam.members) members.push_back(grid_to_json(m));
  out["members"] = members;
  return out.dump(2);
}

std::string nest_json(const OptimizerFamily& f1, const OptimizerFamily& f2,
                      const NestVerdict& verdict) {
  json out;
  out["schema"] = "ziso.nest.v1";
  out["generators"] = f1.generators;
  out["kind"] = to_string(f1.kind);
  out["n1"] = f1.n;
  out["n2"] = f2.n;
  out["opt1"] = f1.opt_value;
  out["opt2"] = f2.opt_value;
  out["verdict"] = verdict.nested ? "nested" : "none";
  out["diameter_shortcut"] = verdict.diameter_shortcut;
  out["min_diameter_n1"] = verdict.min_diameter_first;
  out["max_diameter_n2"] = verdict.max_diameter_second;
  if (verdict.nested) {
    out["witness"] = {{"inner", set_to_json(verdict.inner)},
                      {"outer", set_to_json(verdict.outer)},
                      {"shift", verdict.shift}};
  }
  return out.dump(2);
}

std::string scan_json(const ScanReport& report) {
  json out;
  out["schema"] = "ziso.scan.v1";
  out["generators"] = report.generators;
  out["kind"] = to_string(report.kind);
  out["n_from"] = report.n_from;
  out["n_to"] = report.n_to;
  out["window_policy"] = to_string(report.policy);
  if (report.policy == WindowPolicy::fixed) out["window"] = report.fixed_window;
  json records = json::array();
  for (const ScanRecord& r : report.records) {
    records.push_back({{"n", r.n},
                       {"window", r.window},
                       {"opt_value", r.opt_value},
                       {"family_size", r.family_size},
                       {"labels", r.labels}});
  }
  out["records"] = records;
  out["transitions"] = report.transitions;
  json checks = json::array();
  for (const SquareLabelCheck& c : report.square_checks) {
    checks.push_back(
        {{"n", c.n}, {"k", c.k}, {"expected", c.expected}, {"consistent", c.consistent}});
  }
  out["square_checks"] = checks;
  return out.dump(2);
}

std::string scan_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "# ziso.scan.v1 generators=";
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    if (i) out << ',';
    out << report.generators[i];
  }
  out << " kind=" << to_string(report.kind) << " policy=" << to_string(report.policy);
  if (report.policy == WindowPolicy::fixed) out << " window=" << report.fixed_window;
  out << '\n';
  out << "n,window,opt_value,family_size,labels,transition\n";
  std::size_t next_transition = 0;
  for (const ScanRecord& r : report.records) {
    bool is_transition = false;
    if (next_transition < report.transitions.size() &&
        report.transitions[next_transition] == r.n) {
      is_transition = true;
      ++next_transition;
    }
    out << r.n << ',' << r.window << ',' << r.opt_value << ',' << r.family_size << ','
        << csv_join_labels(r.labels) << ',' << (is_transition ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string certificate_json(const GeneratorSet& g, const ExpansionCertificate& cert,
                             Int n_cert_edge, Int n_cert_vertex,
                             const EmpiricalThreshold* emp_edge,
                             const EmpiricalThreshold* emp_vertex) {
  json out;
  out["schema"] = "ziso.certificate.v1";
  out["generators"] = g.elements();
  out["degenerate"] = cert.degenerate;
  out["epsilon"] = {{"num", cert.epsilon.num}, {"den", cert.epsilon.den}};
  json per_b = json::array();
  for (const auto& [m, w] : cert.witnesses) {
    json edges = json::array();
    for (const auto& [tail, head] : w.edges) edges.push_back(json::array({tail, head}));
    per_b.push_back({{"b", m},
                     {"width", w.width()},
                     {"representatives", w.representatives},
                     {"vertices", w.vertices},
                     {"path_edges", edges}});
  }
  out["per_b"] = per_b;
  out["n_cert_edge"] = n_cert_edge;
  out["n_cert_vertex"] = n_cert_vertex;
  if (emp_edge) out["empirical_edge"] = margins_json(*emp_edge);
  if (emp_vertex) out["empirical_vertex"] = margins_json(*emp_vertex);
  return out.dump(2);
}

}  // namespace ziso
