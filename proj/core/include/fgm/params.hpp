#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgm {

/// Per-node attribute triple: order key, geographic coordinates,
/// influence value.
struct NodeAttr {
  double t = 0.0;
  std::vector<double> c;  // lambda entries; empty only in precomputed mode
  double inf_rate = 0.0;  // strictly positive
};

enum class GammaKind { kSqrtProduct, kConstant, kAlwaysOne };

GammaKind parse_gamma_kind(const std::string& name);
std::string to_string(GammaKind kind);

/// Every knob of a generation run. Identical params plus identical
/// cube give a bit-identical output graph.
struct GenParams {
  double eta = 40.0;          // global edge scale
  double theta = 1.0;         // degree deviation exponent
  double mu_t = 3.0;          // weight on the order attribute
  double mu_c = 1.0;          // weight on the geographic attributes
  double minkowski_p = 2.0;   // >= 1
  GammaKind gamma_kind = GammaKind::kSqrtProduct;
  double gamma_coeff = 4.0;   // acceptance coefficient
  std::uint32_t k_floor = 1;
  std::uint64_t seed = 0;

  void validate() const {
    if (eta <= 0.0) throw std::invalid_argument("eta must be positive");
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    if (mu_t < 0.0 || mu_c < 0.0) {
      throw std::invalid_argument("attribute weights must be nonnegative");
    }
    if (minkowski_p < 1.0) {
      throw std::invalid_argument("minkowski_p must be >= 1");
    }
    if (gamma_coeff <= 0.0) {
      throw std::invalid_argument("gamma_coeff must be positive");
    }
  }
};

}  // namespace fgm
