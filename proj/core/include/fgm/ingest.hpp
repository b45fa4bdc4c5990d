#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgm/params.hpp"

namespace fgm {

/// Where the influence attribute comes from: either an affine map of a
/// raw column followed by min-max scaling, or a column that already
/// holds the final values.
struct InfluenceSource {
  std::string column;
  bool preassigned = false;
  double alpha = 1.0;
  double beta = 0.0;
  double scale_lo = 0.05;
  double scale_hi = 5.0;
};

struct CubeSchema {
  std::string order_column;
  std::vector<std::string> geo_columns;  // possibly empty
  InfluenceSource influence;

  void validate() const;
};

/// Row-major numeric table with named columns.
struct Cube {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t n() const { return rows.size(); }
  std::size_t column_index(const std::string& name) const;

  /// RFC-4180-style CSV with a header row, "." decimal separator.
  void write_csv(const std::string& path) const;
};

enum class Scenario { kFgmP, kFgmR };

Scenario parse_scenario(const std::string& name);
std::string to_string(Scenario s);

struct SynthCubeSpec {
  std::size_t n = 0;
  Scenario scenario = Scenario::kFgmP;
  double lomax_mu = 1.0;
  double lomax_alpha = 3.0;
  std::size_t geo_dim = 2;
  std::uint64_t seed = 0;
};

/// Parses a CSV cube and validates the schema columns. Rows with
/// non-finite values in schema columns are reported by row number.
Cube load_cube(const std::string& path, const CubeSchema& schema);

/// Arrival permutation: row indices sorted ascending by the order
/// column, ties broken by original row index.
std::vector<std::uint32_t> validate_order(const Cube& cube,
                                          const CubeSchema& schema);

struct InfluenceResult {
  std::vector<double> values;
  bool degenerate = false;  // constant column collapsed to scale_lo
};

/// Affine map then min-max scale into [scale_lo, scale_hi].
InfluenceResult derive_influence(const Cube& cube, const CubeSchema& schema);

/// Inverse-CDF Lomax sample: x = mu * ((1-u)^(-1/alpha) - 1).
double lomax_sample(double mu, double alpha, double u);

/// Synthesizes a test cube with columns t, c1..c_geo_dim, infRt.
/// t and c are uniform(0,1); infRt is Lomax(mu, alpha) + 1e-9 for the
/// power-law scenario, uniform(0,1] for the random one.
Cube synth_cube(const SynthCubeSpec& spec);

/// Schema matching synth_cube output (order t, geo c1.., preassigned
/// influence column infRt).
CubeSchema synth_cube_schema(std::size_t geo_dim);

/// Node attributes in arrival order, ready for the generation loop.
std::vector<NodeAttr> cube_to_attrs(const Cube& cube,
                                    const CubeSchema& schema);

}  // namespace fgm
