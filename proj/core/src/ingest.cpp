#include "fgm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fgm/rng.hpp"

namespace fgm {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_cell(const std::string& s, std::size_t row,
                  const std::string& col) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(s, &consumed);
    if (consumed != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("row " + std::to_string(row) + ", column \"" +
                             col + "\": unparseable value \"" + s + "\"");
  }
}

}  // namespace

void CubeSchema::validate() const {
  if (order_column.empty()) {
    throw std::invalid_argument("schema: order_column is required");
  }
  if (!influence.preassigned) {
    if (influence.scale_lo <= 0.0 ||
        influence.scale_lo >= influence.scale_hi) {
      throw std::invalid_argument(
          "schema: need 0 < scale_lo < scale_hi");
    }
  }
}

std::size_t Cube::column_index(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw std::runtime_error("schema error: column \"" + name +
                             "\" not present in cube");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

void Cube::write_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) f << ',';
    f << columns[i];
  }
  f << '\n';
  std::ostringstream line;
  line.precision(17);
  for (const auto& row : rows) {
    line.str("");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line << ',';
      line << row[i];
    }
    f << line.str() << '\n';
  }
}

Scenario parse_scenario(const std::string& name) {
  if (name == "fgm_p") return Scenario::kFgmP;
  if (name == "fgm_r") return Scenario::kFgmR;
  throw std::invalid_argument("unknown scenario: " + name);
}

std::string to_string(Scenario s) {
  return s == Scenario::kFgmP ? "fgm_p" : "fgm_r";
}

Cube load_cube(const std::string& path, const CubeSchema& schema) {
  schema.validate();
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line) || line.empty()) {
    throw std::runtime_error("empty cube file: " + path);
  }
  Cube cube;
  cube.columns = split_csv_line(line);

  // fail fast if a schema column is missing
  std::vector<std::size_t> checked;
  checked.push_back(cube.column_index(schema.order_column));
  for (const auto& g : schema.geo_columns) {
    checked.push_back(cube.column_index(g));
  }
  checked.push_back(cube.column_index(schema.influence.column));

  std::size_t rowno = 0;
  while (std::getline(f, line)) {
    ++rowno;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != cube.columns.size()) {
      throw std::runtime_error("row " + std::to_string(rowno) + ": expected " +
                               std::to_string(cube.columns.size()) +
                               " fields, got " +
                               std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size(),
                            std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      // only schema columns must parse; others are carried as NaN if bad
      const bool required =
          std::find(checked.begin(), checked.end(), i) != checked.end();
      if (required) {
        row[i] = parse_cell(fields[i], rowno, cube.columns[i]);
        if (!std::isfinite(row[i])) {
          throw std::runtime_error("row " + std::to_string(rowno) +
                                   ", column \"" + cube.columns[i] +
                                   "\": non-finite value");
        }
      } else {
        std::size_t consumed = 0;
        try {
          row[i] = std::stod(fields[i], &consumed);
        } catch (const std::exception&) {
        }
      }
    }
    cube.rows.push_back(std::move(row));
  }
  if (cube.rows.empty()) {
    throw std::runtime_error("cube has no data rows: " + path);
  }
  return cube;
}

std::vector<std::uint32_t> validate_order(const Cube& cube,
                                          const CubeSchema& schema) {
  const std::size_t col = cube.column_index(schema.order_column);
  std::vector<std::uint32_t> perm(cube.n());
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return cube.rows[a][col] < cube.rows[b][col];
                   });
  return perm;
}

InfluenceResult derive_influence(const Cube& cube, const CubeSchema& schema) {
  if (schema.influence.preassigned) {
    throw std::invalid_argument(
        "derive_influence requires a raw influence column");
  }
  const std::size_t col = cube.column_index(schema.influence.column);
  const double a = schema.influence.alpha;
  const double b = schema.influence.beta;
  std::vector<double> y(cube.n());
  for (std::size_t i = 0; i < cube.n(); ++i) {
    y[i] = a * cube.rows[i][col] + b;
  }
  const auto [mn_it, mx_it] = std::minmax_element(y.begin(), y.end());
  const double mn = *mn_it, mx = *mx_it;
  InfluenceResult res;
  res.values.resize(y.size());
  const double lo = schema.influence.scale_lo;
  const double hi = schema.influence.scale_hi;
  if (mx == mn) {
    std::fill(res.values.begin(), res.values.end(), lo);
    res.degenerate = true;
    return res;
  }
  const double scale = (hi - lo) / (mx - mn);
  for (std::size_t i = 0; i < y.size(); ++i) {
    res.values[i] = lo + (y[i] - mn) * scale;
  }
  return res;
}

double lomax_sample(double mu, double alpha, double u) {
  return mu * (std::pow(1.0 - u, -1.0 / alpha) - 1.0);
}

Cube synth_cube(const SynthCubeSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("synth_cube: n must be >= 1");
  if (spec.lomax_mu <= 0.0 || spec.lomax_alpha <= 0.0) {
    throw std::invalid_argument("synth_cube: Lomax parameters must be positive");
  }
  Rng rng(spec.seed);
  Cube cube;
  cube.columns.push_back("t");
  for (std::size_t d = 0; d < spec.geo_dim; ++d) {
    cube.columns.push_back("c" + std::to_string(d + 1));
  }
  cube.columns.push_back("infRt");
  cube.rows.resize(spec.n);
  // consumption order per row: t, c1..c_dim, influence draw
  for (std::size_t i = 0; i < spec.n; ++i) {
    auto& row = cube.rows[i];
    row.reserve(spec.geo_dim + 2);
    row.push_back(rng.uniform());
    for (std::size_t d = 0; d < spec.geo_dim; ++d) {
      row.push_back(rng.uniform());
    }
    if (spec.scenario == Scenario::kFgmP) {
      row.push_back(lomax_sample(spec.lomax_mu, spec.lomax_alpha,
                                 rng.uniform()) +
                    1e-9);
    } else {
      row.push_back(rng.uniform_open_lo());
    }
  }
  return cube;
}

CubeSchema synth_cube_schema(std::size_t geo_dim) {
  CubeSchema schema;
  schema.order_column = "t";
  for (std::size_t d = 0; d < geo_dim; ++d) {
    schema.geo_columns.push_back("c" + std::to_string(d + 1));
  }
  schema.influence.column = "infRt";
  schema.influence.preassigned = true;
  return schema;
}

std::vector<NodeAttr> cube_to_attrs(const Cube& cube,
                                    const CubeSchema& schema) {
  const auto perm = validate_order(cube, schema);
  const std::size_t t_col = cube.column_index(schema.order_column);
  std::vector<std::size_t> geo_cols;
  for (const auto& g : schema.geo_columns) {
    geo_cols.push_back(cube.column_index(g));
  }
  std::vector<double> inf;
  if (schema.influence.preassigned) {
    const std::size_t col = cube.column_index(schema.influence.column);
    inf.resize(cube.n());
    for (std::size_t i = 0; i < cube.n(); ++i) inf[i] = cube.rows[i][col];
  } else {
    inf = derive_influence(cube, schema).values;
  }
  std::vector<NodeAttr> attrs(cube.n());
  for (std::size_t i = 0; i < cube.n(); ++i) {
    const auto src = perm[i];
    attrs[i].t = cube.rows[src][t_col];
    attrs[i].c.reserve(geo_cols.size());
    for (auto gc : geo_cols) attrs[i].c.push_back(cube.rows[src][gc]);
    attrs[i].inf_rate = inf[src];
    if (!(attrs[i].inf_rate > 0.0)) {
      throw std::runtime_error("row " + std::to_string(src) +
                               ": influence must be positive");
    }
  }
  return attrs;
}

}  // namespace fgm
