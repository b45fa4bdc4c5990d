#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "fgm/ingest.hpp"
#include "fgm/rng.hpp"

using namespace fgm;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text) {
    path = std::string("/tmp/fgm_ingest_") + std::to_string(counter++) + ".csv";
    std::ofstream out(path);
    out << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int counter;
};
int TempFile::counter = 0;

CubeSchema event_schema() {
  CubeSchema s;
  s.order_column = "ts";
  s.geo_columns = {"lon", "lat"};
  s.influence.column = "casualties";
  return s;
}

}  // namespace

TEST_CASE("load_cube parses a well-formed CSV") {
  TempFile f(
      "ts,lon,lat,casualties\n"
      "3,0.1,0.2,5\n"
      "1,0.3,0.4,0\n"
      "2,0.5,0.6,12\n");
  const Cube cube = load_cube(f.path, event_schema());
  CHECK(cube.n() == 3);
  CHECK(cube.columns.size() == 4);
  CHECK(cube.rows[1][cube.column_index("casualties")] == 0.0);
}

TEST_CASE("load_cube rejects a schema column that is absent") {
  TempFile f("ts,casualties\n1,2\n");
  CHECK_THROWS_WITH_AS(load_cube(f.path, event_schema()),
                       doctest::Contains("lon"), std::runtime_error);
}

TEST_CASE("load_cube cites the offending row for non-finite values") {
  std::string text = "ts,lon,lat,casualties\n";
  for (int i = 1; i <= 10; ++i) {
    text += (i == 7) ? "NaN,0,0,1\n" : "1,0,0,1\n";
  }
  TempFile f(text);
  CHECK_THROWS_WITH_AS(load_cube(f.path, event_schema()),
                       doctest::Contains("row 7"), std::runtime_error);
}

TEST_CASE("validate_order sorts by the order column") {
  Cube cube;
  cube.columns = {"ts"};
  cube.rows = {{5}, {1}, {3}};
  CubeSchema s;
  s.order_column = "ts";
  s.influence.column = "ts";
  CHECK(validate_order(cube, s) == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("validate_order breaks ties by row index") {
  Cube cube;
  cube.columns = {"ts"};
  cube.rows = {{2}, {2}, {1}};
  CubeSchema s;
  s.order_column = "ts";
  s.influence.column = "ts";
  CHECK(validate_order(cube, s) == std::vector<std::uint32_t>{2, 0, 1});
}

TEST_CASE("validate_order on a single row") {
  Cube cube;
  cube.columns = {"ts"};
  cube.rows = {{42}};
  CubeSchema s;
  s.order_column = "ts";
  s.influence.column = "ts";
  CHECK(validate_order(cube, s) == std::vector<std::uint32_t>{0});
}

TEST_CASE("derive_influence min-max endpoints and midpoint") {
  Cube cube;
  cube.columns = {"x"};
  cube.rows = {{0}, {5}, {10}};
  CubeSchema s;
  s.order_column = "x";
  s.influence.column = "x";
  s.influence.scale_lo = 1.0;
  s.influence.scale_hi = 3.0;
  const auto r = derive_influence(cube, s);
  REQUIRE(r.values.size() == 3);
  CHECK(r.values[0] == doctest::Approx(1.0));
  CHECK(r.values[1] == doctest::Approx(2.0));
  CHECK(r.values[2] == doctest::Approx(3.0));
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("derive_influence is affine-invariant") {
  Cube cube;
  cube.columns = {"x"};
  cube.rows = {{0}, {5}, {10}};
  CubeSchema s;
  s.order_column = "x";
  s.influence.column = "x";
  s.influence.alpha = 2.0;
  s.influence.beta = 7.0;
  s.influence.scale_lo = 1.0;
  s.influence.scale_hi = 3.0;
  const auto r = derive_influence(cube, s);
  CHECK(r.values[0] == doctest::Approx(1.0));
  CHECK(r.values[1] == doctest::Approx(2.0));
  CHECK(r.values[2] == doctest::Approx(3.0));
}

TEST_CASE("derive_influence collapses a constant column to scale_lo") {
  Cube cube;
  cube.columns = {"x"};
  cube.rows = {{4}, {4}, {4}};
  CubeSchema s;
  s.order_column = "x";
  s.influence.column = "x";
  const auto r = derive_influence(cube, s);
  CHECK(r.degenerate);
  for (double v : r.values) CHECK(v == doctest::Approx(s.influence.scale_lo));
}

TEST_CASE("derive_influence preserves order for positive alpha") {
  Rng rng(11);
  Cube cube;
  cube.columns = {"x"};
  for (int i = 0; i < 200; ++i) cube.rows.push_back({rng.uniform() * 100.0});
  CubeSchema s;
  s.order_column = "x";
  s.influence.column = "x";
  const auto r = derive_influence(cube, s);
  for (std::size_t i = 0; i < cube.n(); ++i) {
    for (std::size_t j = 0; j < cube.n(); ++j) {
      if (cube.rows[i][0] < cube.rows[j][0]) {
        CHECK(r.values[i] <= r.values[j]);
      }
    }
  }
}

TEST_CASE("lomax inverse CDF matches the closed form") {
  // u = 1 - (1 + x/mu)^(-alpha)  =>  x = mu ((1-u)^(-1/alpha) - 1)
  CHECK(lomax_sample(1.0, 3.0, 0.0) == doctest::Approx(0.0));
  CHECK(lomax_sample(1.0, 3.0, 0.875) == doctest::Approx(1.0));  // (1/8)^(-1/3)=2
  CHECK(lomax_sample(2.0, 1.0, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("synth_cube is deterministic under seed") {
  SynthCubeSpec spec;
  spec.n = 1000;
  spec.scenario = Scenario::kFgmP;
  spec.seed = 42;
  const Cube a = synth_cube(spec);
  const Cube b = synth_cube(spec);
  CHECK(a.rows == b.rows);
  CHECK(a.columns == b.columns);
}

TEST_CASE("fgm_p influence mean approaches the Lomax mean") {
  SynthCubeSpec spec;
  spec.n = 1000000;
  spec.scenario = Scenario::kFgmP;
  spec.seed = 7;
  const Cube cube = synth_cube(spec);
  const std::size_t col = cube.column_index("infRt");
  double sum = 0.0;
  for (const auto& row : cube.rows) sum += row[col];
  const double mean = sum / static_cast<double>(cube.n());
  // E[Lomax(mu=1, alpha=3)] = mu / (alpha - 1) = 0.5
  CHECK(mean == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("fgm_r influence is uniform on (0,1]") {
  SynthCubeSpec spec;
  spec.n = 1000000;
  spec.scenario = Scenario::kFgmR;
  spec.seed = 7;
  const Cube cube = synth_cube(spec);
  const std::size_t col = cube.column_index("infRt");
  double sum = 0.0;
  for (const auto& row : cube.rows) {
    CHECK(row[col] > 0.0);
    CHECK(row[col] <= 1.0);
    sum += row[col];
  }
  CHECK(sum / static_cast<double>(cube.n()) ==
        doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("cube_to_attrs applies the arrival permutation") {
  SynthCubeSpec spec;
  spec.n = 300;
  spec.seed = 3;
  const Cube cube = synth_cube(spec);
  const CubeSchema schema = synth_cube_schema(spec.geo_dim);
  const auto attrs = cube_to_attrs(cube, schema);
  REQUIRE(attrs.size() == 300);
  for (std::size_t i = 1; i < attrs.size(); ++i) {
    CHECK(attrs[i - 1].t <= attrs[i].t);
  }
  for (const auto& a : attrs) {
    CHECK(a.c.size() == spec.geo_dim);
    CHECK(a.inf_rate > 0.0);
  }
}

TEST_CASE("csv round-trip through write_csv and load_cube") {
  SynthCubeSpec spec;
  spec.n = 50;
  spec.seed = 9;
  const Cube cube = synth_cube(spec);
  const std::string path = "/tmp/fgm_ingest_roundtrip.csv";
  cube.write_csv(path);
  const Cube back = load_cube(path, synth_cube_schema(spec.geo_dim));
  std::remove(path.c_str());
  REQUIRE(back.n() == cube.n());
  CHECK(back.columns == cube.columns);
  CHECK(back.rows == cube.rows);
}
