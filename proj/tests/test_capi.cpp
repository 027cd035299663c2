#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ziso.h"

using json = nlohmann::json;

namespace {

struct Gens {
  ziso_generators* handle = nullptr;
  explicit Gens(std::vector<int64_t> v) {
    REQUIRE(ziso_generators_create(v.data(), v.size(), &handle) == ZISO_OK);
  }
  ~Gens() { ziso_generators_destroy(handle); }
};

struct Str {
  char* data = nullptr;
  ~Str() { ziso_string_free(data); }
  json parsed() const { return json::parse(std::string(data)); }
};

}  // namespace

TEST_CASE("generator handles and error codes") {
  Gens g({1, -1, 4, -4});
  int64_t b_max = 0, b_plus = 0, b_minus = 0;
  int symmetric = 0, generates = 0;
  CHECK(ziso_generators_info(g.handle, &b_max, &b_plus, &b_minus, &symmetric, &generates) ==
        ZISO_OK);
  CHECK(b_max == 4);
  CHECK(b_plus == 4);
  CHECK(b_minus == 4);
  CHECK(symmetric == 1);
  CHECK(generates == 1);
  CHECK(ziso_generators_gcd(g.handle) == 1);

  ziso_generators* bad = nullptr;
  std::vector<int64_t> with_zero{1, 0};
  CHECK(ziso_generators_create(with_zero.data(), with_zero.size(), &bad) ==
        ZISO_ERR_BAD_GENERATORS);
  CHECK(bad == nullptr);
  CHECK(ziso_generators_create(nullptr, 0, &bad) == ZISO_ERR_BAD_GENERATORS);
  CHECK(std::string(ziso_status_name(ZISO_ERR_NOT_GENERATING)) ==
        "generators do not generate Z");
}

TEST_CASE("boundary json") {
  Gens g({1, -1, 4, -4});
  std::vector<int64_t> interval;
  for (int64_t x = 1; x <= 10; ++x) interval.push_back(x);
  ziso_zset* set = nullptr;
  REQUIRE(ziso_zset_create(interval.data(), interval.size(), &set) == ZISO_OK);
  Str out;
  CHECK(ziso_boundary_json(g.handle, set, ZISO_KIND_EDGE, &out.data) == ZISO_OK);
  const json report = out.parsed();
  CHECK(report["schema"] == "ziso.boundary.v1");
  CHECK(report["cardinality"] == 10);
  CHECK(report["edges"].size() == 10);
  ziso_zset_destroy(set);
}

TEST_CASE("search json and not-generating rejection") {
  Gens g({1, -1, 10, -10});
  Str out;
  CHECK(ziso_search_json(g.handle, 9, ZISO_KIND_EDGE, 48, 2, &out.data) == ZISO_OK);
  const json fam = out.parsed();
  CHECK(fam["opt_value"] == 12);
  CHECK(fam["members"] == json::array({{0, 1, 2, 10, 11, 12, 20, 21, 22}}));
  CHECK(fam["labels"][0] == "grid_square(3,10)");
  CHECK(fam["window_restricted"] == true);

  Gens even({2, -2, 4});
  Str fail;
  CHECK(ziso_search_json(even.handle, 3, ZISO_KIND_EDGE, 12, 1, &fail.data) ==
        ZISO_ERR_NOT_GENERATING);
  CHECK(std::string(ziso_last_error()).find("gcd = 2") != std::string::npos);

  Str small;
  CHECK(ziso_search_json(g.handle, 9, ZISO_KIND_EDGE, 4, 1, &small.data) ==
        ZISO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scan csv header and shape") {
  Gens g({1, -1, 3, -3});
  Str out;
  CHECK(ziso_scan_csv(g.handle, ZISO_KIND_EDGE, 1, 6, ZISO_WINDOW_SLACK, 0, 1, &out.data) ==
        ZISO_OK);
  const std::string csv(out.data);
  CHECK(csv.rfind("# ziso.scan.v1", 0) == 0);
  CHECK(csv.find("n,window,opt_value,family_size,labels,transition") != std::string::npos);
}

TEST_CASE("nest verdict flag") {
  Gens g({1, -1, 10, -10});
  Str out;
  int nested = -1;
  CHECK(ziso_nest_json(g.handle, ZISO_KIND_EDGE, 16, 33, 48, 2, &out.data, &nested) == ZISO_OK);
  CHECK(nested == 0);
  const json verdict = out.parsed();
  CHECK(verdict["verdict"] == "none");
  CHECK(verdict["diameter_shortcut"] == true);

  Str up;
  CHECK(ziso_nest_json(g.handle, ZISO_KIND_EDGE, 33, 34, 48, 2, &up.data, &nested) == ZISO_OK);
  CHECK(nested == 1);
  CHECK(up.parsed()["witness"]["shift"].is_number());
}

TEST_CASE("certificate json") {
  Gens g({2, 3});
  Str out;
  CHECK(ziso_certify_json(g.handle, 30, &out.data) == ZISO_OK);
  const json cert = out.parsed();
  CHECK(cert["epsilon"]["num"] == 1);
  CHECK(cert["epsilon"]["den"] == 4);
  CHECK(cert["n_cert_edge"] == 21);
  CHECK(cert["per_b"].size() == 2);
  CHECK(cert["empirical_edge"]["found"] == true);
}

TEST_CASE("planar search json") {
  Str out;
  CHECK(ziso_grid2d_search_json(ZISO_NORM_LINF_VERTEX, 4, 6, &out.data) == ZISO_OK);
  const json fam = out.parsed();
  CHECK(fam["opt_value"] == 12);
  CHECK(fam["members"] == json::array({{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}));

  Str bad;
  CHECK(ziso_grid2d_search_json(7, 4, 6, &bad.data) == ZISO_ERR_INVALID_ARGUMENT);
}
