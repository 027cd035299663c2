// Command-line driver over the shared-library C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ziso.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;  // nest verdict "none", script-friendly

struct GeneratorsDeleter {
  void operator()(ziso_generators* g) const { ziso_generators_destroy(g); }
};
struct ZSetDeleter {
  void operator()(ziso_zset* s) const { ziso_zset_destroy(s); }
};
using GeneratorsHandle = std::unique_ptr<ziso_generators, GeneratorsDeleter>;
using ZSetHandle = std::unique_ptr<ziso_zset, ZSetDeleter>;

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { ziso_string_free(data); }
  std::string str() const { return data ? std::string(data) : std::string(); }
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "ziso: " << message << "\n";
  std::exit(kExitError);
}

void check_status(int status) {
  if (status != ZISO_OK) die(ziso_last_error());
}

std::vector<int64_t> load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open set file '" + path + "'");
  std::vector<int64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(trimmed, &used));
      if (used != trimmed.size()) throw std::invalid_argument(trimmed);
    } catch (const std::exception&) {
      die("malformed set file '" + path + "' at line " + std::to_string(line_no));
    }
  }
  return out;
}

// Generators as given, optionally symmetrized, then normalized to the sorted
// element list; the canonical config always shows the expanded form.
std::vector<int64_t> effective_generators(std::vector<int64_t> gens, bool symmetrize) {
  if (symmetrize) {
    std::vector<int64_t> expanded;
    for (int64_t b : gens) {
      expanded.push_back(b);
      expanded.push_back(-b);
    }
    gens = std::move(expanded);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

GeneratorsHandle make_generators(const std::vector<int64_t>& gens) {
  ziso_generators* raw = nullptr;
  check_status(ziso_generators_create(gens.data(), gens.size(), &raw));
  return GeneratorsHandle(raw);
}

int64_t window_for(const std::string& policy, int64_t fixed, int64_t n, int64_t b_max) {
  if (policy == "fixed") return fixed;
  if (policy == "dilation") return std::max<int64_t>(n, 1) * (b_max + 1);
  if (policy == "slack") return n + 2 * (b_max + 1);
  die("unknown window policy '" + policy + "'");
}

int default_workers() {
  if (const char* env = std::getenv("ZISO_WORKERS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

std::string join_list(const std::vector<int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) die("cannot write '" + output_path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// Canonical one-line form of a parsed run configuration. Re-parsing this line
// reproduces it verbatim.
struct ConfigLine {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string str() const {
    std::string out = subcommand;
    for (const auto& [k, v] : fields) out += " --" + k + "=" + v;
    return out;
  }
};

std::string render_members_table(const json& members) {
  std::string out;
  for (const auto& member : members) {
    out += "  {";
    for (std::size_t i = 0; i < member.size(); ++i) {
      if (i) out += ",";
      out += member[i].is_array()
                 ? "(" + std::to_string(member[i][0].get<int64_t>()) + "," +
                       std::to_string(member[i][1].get<int64_t>()) + ")"
                 : std::to_string(member[i].get<int64_t>());
    }
    out += "}\n";
  }
  return out;
}

std::string family_table(const json& fam) {
  std::string out;
  out += "kind:        " + fam.value("kind", fam.value("norm", "?")) + "\n";
  out += "n:           " + std::to_string(fam["n"].get<int64_t>()) + "\n";
  out += "window:      " + std::to_string(fam["window"].get<int64_t>()) +
         " (window-restricted)\n";
  out += "opt_value:   " + std::to_string(fam["opt_value"].get<int64_t>()) + "\n";
  out += "members:     " + std::to_string(fam["members"].size()) + "\n";
  out += render_members_table(fam["members"]);
  if (fam.contains("labels")) {
    out += "labels:      ";
    for (std::size_t i = 0; i < fam["labels"].size(); ++i) {
      if (i) out += ", ";
      out += fam["labels"][i].get<std::string>();
    }
    out += "\n";
  }
  if (fam.contains("stable")) out += std::string("stable:      ") +
                                     (fam["stable"].get<bool>() ? "true" : "false") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact isoperimetric optimization on integer Cayley graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ziso_version()));

  // shared options
  struct Common {
    std::vector<int64_t> gens;
    bool symmetrize = false;
    std::string format;
    std::string output;
    int workers = default_workers();
    int64_t seed = 0;
    bool dump_config = false;
  };

  auto add_common = [](CLI::App* sub, Common& c, bool with_gens = true) {
    if (with_gens) {
      sub->add_option("--gen", c.gens, "generators as a signed comma list")
          ->required()
          ->delimiter(',');
      sub->add_flag("--sym", c.symmetrize, "expand the list symmetrically (b and -b)");
    }
    sub->add_option("--output", c.output, "write the report to a file instead of stdout");
    sub->add_option("--workers", c.workers, "search worker threads (env ZISO_WORKERS)");
    sub->add_option("--seed", c.seed, "seed echoed into the config (randomized suites)");
    sub->add_flag("--dump-config", c.dump_config, "print the canonical config line and exit");
  };

  // boundary ------------------------------------------------------------
  Common bc;
  std::string b_kind = "edge";
  std::string b_set_file;
  std::vector<int64_t> b_set;
  auto* boundary = app.add_subcommand("boundary", "boundary of an explicit set");
  add_common(boundary, bc);
  boundary->add_option("--kind", b_kind, "edge | vertex | both")
      ->check(CLI::IsMember({"edge", "vertex", "both"}));
  boundary->add_option("--set-file", b_set_file, "set file, one integer per line, # comments");
  boundary->add_option("--set", b_set, "set as a comma list")->delimiter(',');
  bc.format = "table";
  boundary->add_option("--format", bc.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  // search ----------------------------------------------------------------
  Common sc;
  std::string s_kind = "edge";
  int64_t s_n = 0;
  int64_t s_window = -1;
  std::string s_policy = "dilation";
  bool s_probe_stability = false;
  auto* search = app.add_subcommand("search", "enumerate all boundary minimizers at size n");
  add_common(search, sc);
  search->add_option("--n", s_n, "target size")->required();
  search->add_option("--kind", s_kind, "edge | vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));
  search->add_option("--window", s_window, "fixed window (overrides --window-policy)");
  search->add_option("--window-policy", s_policy, "dilation | slack")
      ->check(CLI::IsMember({"dilation", "slack"}));
  search->add_flag("--probe-stability", s_probe_stability,
                   "re-run at window+1 and report the stability flag");
  sc.format = "json";
  search->add_option("--format", sc.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  // scan --------------------------------------------------------------
  Common cc;
  std::string c_kind = "edge";
  int64_t c_from = 1, c_to = 1;
  int64_t c_window = -1;
  std::string c_policy = "dilation";
  auto* scan = app.add_subcommand("scan", "per-size scan with labels and transitions");
  add_common(scan, cc);
  scan->add_option("--kind", c_kind, "edge | vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));
  scan->add_option("--n-from", c_from, "first size")->required();
  scan->add_option("--n-to", c_to, "last size")->required();
  scan->add_option("--window", c_window, "fixed window (overrides --window-policy)");
  scan->add_option("--window-policy", c_policy, "dilation | slack")
      ->check(CLI::IsMember({"dilation", "slack"}));
  cc.format = "csv";
  scan->add_option("--format", cc.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  // nest ----------------------------------------------------------------
  Common nc;
  std::string n_kind = "edge";
  int64_t n_n1 = 0, n_n2 = 0;
  int64_t n_window = -1;
  auto* nest = app.add_subcommand("nest", "can a minimizer at n1 sit inside one at n2?");
  add_common(nest, nc);
  nest->add_option("--kind", n_kind, "edge | vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));
  nest->add_option("--n1", n_n1, "smaller size")->required();
  nest->add_option("--n2", n_n2, "larger size")->required();
  nest->add_option("--window", n_window, "shared window (default: slack around n2)");
  nc.format = "json";
  nest->add_option("--format", nc.format, "json")->check(CLI::IsMember({"json"}));

  // certify ------------------------------------------------------------
  Common yc;
  int64_t y_empirical = 0;
  auto* certify = app.add_subcommand(
      "certify", "expansion certificate and interval-optimality thresholds");
  add_common(certify, yc);
  certify->add_option("--empirical", y_empirical,
                      "also scan sizes 1..N for the empirical thresholds");
  yc.format = "json";
  certify->add_option("--format", yc.format, "json")->check(CLI::IsMember({"json"}));

  // grid2d -------------------------------------------------------------
  Common gc;
  std::string g_norm = "l1-edge";
  int64_t g_n = 0;
  int64_t g_window = 6;
  auto* grid2d = app.add_subcommand("grid2d", "exhaustive planar minimizer families");
  add_common(grid2d, gc, /*with_gens=*/false);
  grid2d->add_option("--norm", g_norm, "l1-edge | linf-vertex")
      ->check(CLI::IsMember({"l1-edge", "linf-vertex"}));
  grid2d->add_option("--n", g_n, "target size")->required();
  grid2d->add_option("--window", g_window, "square window side");
  gc.format = "json";
  grid2d->add_option("--format", gc.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  auto common_fields = [](ConfigLine& line, const Common& c, bool with_gens,
                          const std::vector<int64_t>& gens) {
    if (with_gens) line.fields.emplace_back("gen", join_list(gens));
    line.fields.emplace_back("format", c.format);
    line.fields.emplace_back("workers", std::to_string(c.workers));
    line.fields.emplace_back("seed", std::to_string(c.seed));
    if (!c.output.empty()) line.fields.emplace_back("output", c.output);
  };

  if (boundary->parsed()) {
    const auto gens = effective_generators(bc.gens, bc.symmetrize);
    if (!b_set_file.empty() && !b_set.empty()) die("give --set or --set-file, not both");
    const std::vector<int64_t> values =
        b_set_file.empty() ? b_set : load_set_file(b_set_file);

    ConfigLine line{"boundary", {}};
    line.fields.emplace_back("gen", join_list(gens));
    line.fields.emplace_back("kind", b_kind);
    if (!b_set_file.empty()) line.fields.emplace_back("set-file", b_set_file);
    else line.fields.emplace_back("set", join_list(values));
    common_fields(line, bc, false, gens);
    if (bc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    const auto handle = make_generators(gens);
    ziso_zset* raw_set = nullptr;
    check_status(ziso_zset_create(values.data(), values.size(), &raw_set));
    const ZSetHandle set(raw_set);

    std::string text;
    const std::vector<std::string> kinds =
        b_kind == "both" ? std::vector<std::string>{"edge", "vertex"}
                         : std::vector<std::string>{b_kind};
    for (const std::string& kind : kinds) {
      OwnedString out;
      check_status(ziso_boundary_json(handle.get(), set.get(),
                                      kind == "edge" ? ZISO_KIND_EDGE : ZISO_KIND_VERTEX,
                                      &out.data));
      if (bc.format == "json") {
        text += out.str() + "\n";
      } else {
        const json report = json::parse(out.str());
        text += kind + " boundary cardinality: " +
                std::to_string(report["cardinality"].get<int64_t>()) + "\n";
        text += report.contains("elements") ? "elements: " + report["elements"].dump() + "\n"
                                            : "edges (step,head): " +
                                                  report["edges"].dump() + "\n";
      }
    }
    write_output(text, bc.output);
    return kExitOk;
  }

  if (search->parsed()) {
    const auto gens = effective_generators(sc.gens, sc.symmetrize);
    const auto handle = make_generators(gens);
    int64_t b_max = 0;
    check_status(ziso_generators_info(handle.get(), &b_max, nullptr, nullptr, nullptr, nullptr));
    const std::string policy = s_window >= 0 ? "fixed" : s_policy;
    const int64_t window = window_for(policy, s_window, s_n, b_max);

    ConfigLine line{"search", {}};
    line.fields.emplace_back("gen", join_list(gens));
    line.fields.emplace_back("kind", s_kind);
    line.fields.emplace_back("n", std::to_string(s_n));
    line.fields.emplace_back("window", std::to_string(window));
    if (s_probe_stability) line.fields.emplace_back("probe-stability", "true");
    common_fields(line, sc, false, gens);
    if (sc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    const int kind = s_kind == "edge" ? ZISO_KIND_EDGE : ZISO_KIND_VERTEX;
    OwnedString out;
    check_status(ziso_search_json(handle.get(), s_n, kind, window, sc.workers, &out.data));
    json fam = json::parse(out.str());
    if (s_probe_stability) {
      OwnedString probe;
      check_status(
          ziso_search_json(handle.get(), s_n, kind, window + 1, sc.workers, &probe.data));
      const json next = json::parse(probe.str());
      const bool stable = fam["opt_value"] == next["opt_value"] &&
                          fam["members"] == next["members"];
      fam["stable"] = stable;
    }
    write_output(sc.format == "json" ? fam.dump(2) : family_table(fam), sc.output);
    return kExitOk;
  }

  if (scan->parsed()) {
    const auto gens = effective_generators(cc.gens, cc.symmetrize);
    const std::string policy = c_window >= 0 ? "fixed" : c_policy;

    ConfigLine line{"scan", {}};
    line.fields.emplace_back("gen", join_list(gens));
    line.fields.emplace_back("kind", c_kind);
    line.fields.emplace_back("n-from", std::to_string(c_from));
    line.fields.emplace_back("n-to", std::to_string(c_to));
    line.fields.emplace_back("window-policy", policy);
    if (policy == "fixed") line.fields.emplace_back("window", std::to_string(c_window));
    common_fields(line, cc, false, gens);
    if (cc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    const auto handle = make_generators(gens);
    const int kind = c_kind == "edge" ? ZISO_KIND_EDGE : ZISO_KIND_VERTEX;
    const int policy_code = policy == "fixed"    ? ZISO_WINDOW_FIXED
                            : policy == "slack" ? ZISO_WINDOW_SLACK
                                                 : ZISO_WINDOW_DILATION;
    OwnedString out;
    if (cc.format == "csv") {
      check_status(ziso_scan_csv(handle.get(), kind, c_from, c_to, policy_code, c_window,
                                 cc.workers, &out.data));
    } else {
      check_status(ziso_scan_json(handle.get(), kind, c_from, c_to, policy_code, c_window,
                                  cc.workers, &out.data));
    }
    write_output(out.str(), cc.output);
    return kExitOk;
  }

  if (nest->parsed()) {
    const auto gens = effective_generators(nc.gens, nc.symmetrize);
    const auto handle = make_generators(gens);
    int64_t b_max = 0;
    check_status(ziso_generators_info(handle.get(), &b_max, nullptr, nullptr, nullptr, nullptr));
    const int64_t window =
        n_window >= 0 ? n_window : window_for("slack", 0, std::max(n_n1, n_n2), b_max);

    ConfigLine line{"nest", {}};
    line.fields.emplace_back("gen", join_list(gens));
    line.fields.emplace_back("kind", n_kind);
    line.fields.emplace_back("n1", std::to_string(n_n1));
    line.fields.emplace_back("n2", std::to_string(n_n2));
    line.fields.emplace_back("window", std::to_string(window));
    common_fields(line, nc, false, gens);
    if (nc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    OwnedString out;
    int nested = 0;
    check_status(ziso_nest_json(handle.get(),
                                n_kind == "edge" ? ZISO_KIND_EDGE : ZISO_KIND_VERTEX, n_n1,
                                n_n2, window, nc.workers, &out.data, &nested));
    write_output(out.str(), nc.output);
    return nested ? kExitOk : kExitNone;
  }

  if (certify->parsed()) {
    const auto gens = effective_generators(yc.gens, yc.symmetrize);

    ConfigLine line{"certify", {}};
    line.fields.emplace_back("gen", join_list(gens));
    if (y_empirical > 0) line.fields.emplace_back("empirical", std::to_string(y_empirical));
    common_fields(line, yc, false, gens);
    if (yc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    const auto handle = make_generators(gens);
    OwnedString out;
    check_status(ziso_certify_json(handle.get(), y_empirical, &out.data));
    write_output(out.str(), yc.output);
    return kExitOk;
  }

  if (grid2d->parsed()) {
    ConfigLine line{"grid2d", {}};
    line.fields.emplace_back("norm", g_norm);
    line.fields.emplace_back("n", std::to_string(g_n));
    line.fields.emplace_back("window", std::to_string(g_window));
    common_fields(line, gc, false, {});
    if (gc.dump_config) {
      std::cout << line.str() << "\n";
      return kExitOk;
    }

    OwnedString out;
    check_status(ziso_grid2d_search_json(
        g_norm == "l1-edge" ? ZISO_NORM_L1_EDGE : ZISO_NORM_LINF_VERTEX, g_n, g_window,
        &out.data));
    if (gc.format == "json") {
      write_output(out.str(), gc.output);
    } else {
      write_output(family_table(json::parse(out.str())), gc.output);
    }
    return kExitOk;
  }

  return kExitError;
}
