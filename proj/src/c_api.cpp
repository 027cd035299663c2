#include "ziso.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "ziso/certify.hpp"
#include "ziso/core.hpp"
#include "ziso/search.hpp"
#include "ziso/serialize.hpp"

struct ziso_generators {
  ziso::GeneratorSet value;
};

struct ziso_zset {
  ziso::ZSet value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(ZISO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ZISO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZISO_ERR_INTERNAL, "unknown error");
  }
}

int require_generating(const ziso::GeneratorSet& g) {
  if (!g.generates_z())
    return fail(ZISO_ERR_NOT_GENERATING, "generators do not generate Z (gcd = " +
                                             std::to_string(g.gcd()) + ")");
  return ZISO_OK;
}

ziso::BoundaryKind to_kind(int kind) {
  if (kind == ZISO_KIND_EDGE) return ziso::BoundaryKind::edge;
  if (kind == ZISO_KIND_VERTEX) return ziso::BoundaryKind::vertex;
  throw std::invalid_argument("kind must be 0 (edge) or 1 (vertex)");
}

ziso::WindowPolicy to_policy(int policy) {
  switch (policy) {
    case ZISO_WINDOW_DILATION: return ziso::WindowPolicy::dilation;
    case ZISO_WINDOW_SLACK: return ziso::WindowPolicy::slack;
    case ZISO_WINDOW_FIXED: return ziso::WindowPolicy::fixed;
  }
  throw std::invalid_argument("unknown window policy");
}

int emit(char** out, const std::string& text) {
  *out = copy_string(text);
  return *out ? ZISO_OK : fail(ZISO_ERR_INTERNAL, "out of memory");
}

}  // namespace

extern "C" {

const char* ziso_version(void) { return "1.0.0"; }

const char* ziso_status_name(int status) {
  switch (status) {
    case ZISO_OK: return "ok";
    case ZISO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZISO_ERR_BAD_GENERATORS: return "bad generators";
    case ZISO_ERR_NOT_GENERATING: return "generators do not generate Z";
    case ZISO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ziso_last_error(void) { return g_last_error.c_str(); }

void ziso_string_free(char* s) { delete[] s; }

int ziso_generators_create(const int64_t* elements, size_t count, ziso_generators** out) {
  if (!out || (!elements && count > 0))
    return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&]() {
    try {
      std::vector<ziso::Int> values(elements, elements + count);
      auto g = new ziso_generators{ziso::GeneratorSet::from_elements(std::move(values))};
      *out = g;
      return ZISO_OK;
    } catch (const std::invalid_argument& e) {
      return fail(ZISO_ERR_BAD_GENERATORS, e.what());
    }
  });
}

void ziso_generators_destroy(ziso_generators* g) { delete g; }

int ziso_generators_info(const ziso_generators* g, int64_t* b_max, int64_t* b_plus,
                         int64_t* b_minus, int* symmetric, int* generates_z) {
  if (!g) return fail(ZISO_ERR_INVALID_ARGUMENT, "null handle");
  if (b_max) *b_max = g->value.b_max();
  if (b_plus) *b_plus = g->value.b_plus();
  if (b_minus) *b_minus = g->value.b_minus();
  if (symmetric) *symmetric = g->value.symmetric() ? 1 : 0;
  if (generates_z) *generates_z = g->value.generates_z() ? 1 : 0;
  return ZISO_OK;
}

int64_t ziso_generators_gcd(const ziso_generators* g) { return g ? g->value.gcd() : 0; }

int ziso_zset_create(const int64_t* values, size_t count, ziso_zset** out) {
  if (!out || (!values && count > 0))
    return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&]() {
    std::vector<ziso::Int> v(values, values + count);
    *out = new ziso_zset{ziso::ZSet::from_values(std::move(v))};
    return ZISO_OK;
  });
}

void ziso_zset_destroy(ziso_zset* s) { delete s; }

int ziso_boundary_json(const ziso_generators* g, const ziso_zset* set, int kind,
                       char** out_json) {
  if (!g || !set || !out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    return emit(out_json, ziso::boundary_report_json(g->value, set->value, to_kind(kind)));
  });
}

int ziso_search_json(const ziso_generators* g, int64_t n, int kind, int64_t window,
                     int workers, char** out_json) {
  if (!g || !out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    if (int status = require_generating(g->value); status != ZISO_OK) return status;
    auto fam = ziso::enumerate_optimizers(g->value, n, to_kind(kind), window,
                                          workers < 1 ? 1 : workers);
    return emit(out_json, ziso::family_json(fam));
  });
}

int ziso_scan_json(const ziso_generators* g, int kind, int64_t n_from, int64_t n_to,
                   int window_policy, int64_t fixed_window, int workers, char** out_json) {
  if (!g || !out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    if (int status = require_generating(g->value); status != ZISO_OK) return status;
    auto report = ziso::phase_scan(g->value, to_kind(kind), n_from, n_to,
                                   to_policy(window_policy), fixed_window,
                                   workers < 1 ? 1 : workers);
    return emit(out_json, ziso::scan_json(report));
  });
}

int ziso_scan_csv(const ziso_generators* g, int kind, int64_t n_from, int64_t n_to,
                  int window_policy, int64_t fixed_window, int workers, char** out_csv) {
  if (!g || !out_csv) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    if (int status = require_generating(g->value); status != ZISO_OK) return status;
    auto report = ziso::phase_scan(g->value, to_kind(kind), n_from, n_to,
                                   to_policy(window_policy), fixed_window,
                                   workers < 1 ? 1 : workers);
    return emit(out_csv, ziso::scan_csv(report));
  });
}

int ziso_nest_json(const ziso_generators* g, int kind, int64_t n1, int64_t n2,
                   int64_t window, int workers, char** out_json, int* nested) {
  if (!g || !out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    if (int status = require_generating(g->value); status != ZISO_OK) return status;
    const int w = workers < 1 ? 1 : workers;
    auto f1 = ziso::enumerate_optimizers(g->value, n1, to_kind(kind), window, w);
    auto f2 = ziso::enumerate_optimizers(g->value, n2, to_kind(kind), window, w);
    auto verdict = ziso::nest_check(f1, f2);
    if (nested) *nested = verdict.nested ? 1 : 0;
    return emit(out_json, ziso::nest_json(f1, f2, verdict));
  });
}

int ziso_certify_json(const ziso_generators* g, int64_t empirical_n_max, char** out_json) {
  if (!g || !out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    if (int status = require_generating(g->value); status != ZISO_OK) return status;
    const auto cert = ziso::expansion_certificate(g->value);
    const ziso::Int n_edge =
        ziso::certified_interval_threshold(g->value, ziso::BoundaryKind::edge);
    const ziso::Int n_vertex =
        ziso::certified_interval_threshold(g->value, ziso::BoundaryKind::vertex);
    if (empirical_n_max > 0) {
      const auto emp_edge = ziso::empirical_interval_threshold(
          g->value, ziso::BoundaryKind::edge, empirical_n_max, ziso::WindowPolicy::slack);
      const auto emp_vertex = ziso::empirical_interval_threshold(
          g->value, ziso::BoundaryKind::vertex, empirical_n_max, ziso::WindowPolicy::slack);
      return emit(out_json, ziso::certificate_json(g->value, cert, n_edge, n_vertex,
                                                   &emp_edge, &emp_vertex));
    }
    return emit(out_json, ziso::certificate_json(g->value, cert, n_edge, n_vertex));
  });
}

int ziso_grid2d_search_json(int norm, int64_t n, int64_t window, char** out_json) {
  if (!out_json) return fail(ZISO_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&]() {
    ziso::GridNorm gn;
    if (norm == ZISO_NORM_L1_EDGE) {
      gn = ziso::GridNorm::l1_edge;
    } else if (norm == ZISO_NORM_LINF_VERTEX) {
      gn = ziso::GridNorm::linf_vertex;
    } else {
      throw std::invalid_argument("norm must be 0 (l1_edge) or 1 (linf_vertex)");
    }
    auto fam = ziso::enumerate_optimizers_2d(gn, n, window);
    return emit(out_json, ziso::family2d_json(fam));
  });
}

}  // extern "C"
