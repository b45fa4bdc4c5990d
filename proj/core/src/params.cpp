#include "fgm/params.hpp"

namespace fgm {

GammaKind parse_gamma_kind(const std::string& name) {
  if (name == "sqrt-product") return GammaKind::kSqrtProduct;
  if (name == "constant") return GammaKind::kConstant;
  if (name == "always-one") return GammaKind::kAlwaysOne;
  throw std::invalid_argument("unknown gamma kind: " + name);
}

std::string to_string(GammaKind kind) {
  switch (kind) {
    case GammaKind::kSqrtProduct:
      return "sqrt-product";
    case GammaKind::kConstant:
      return "constant";
    case GammaKind::kAlwaysOne:
      return "always-one";
  }
  return "?";
}

}  // namespace fgm
