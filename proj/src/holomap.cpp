#include "dynlab/holomap.hpp"

#include <cmath>
#include <limits>

namespace dynlab {

Complex HoloMap::operator()(Complex xi) const {
  return std::visit(
      [xi](const auto& k) -> Complex {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Affine>) {
          return k.a + k.b * xi;
        } else if constexpr (std::is_same_v<K, PrincipalLog>) {
          return std::log(xi);
        } else if constexpr (std::is_same_v<K, PrincipalPower>) {
          const Real n = k.exponent;
          if (n >= 0 && n == std::floor(n) && n <= 64) {
            Complex r{1};
            for (int i = 0; i < static_cast<int>(n); ++i) r *= xi;
            return r;
          }
          return std::exp(n * std::log(xi));
        } else {
          return k.fn(xi);
        }
      },
      kind_);
}

bool HoloMap::needs_slit_plane() const {
  if (std::holds_alternative<PrincipalLog>(kind_)) return true;
  if (const auto* p = std::get_if<PrincipalPower>(&kind_))
    return !(p->exponent >= 0 && p->exponent == std::floor(p->exponent));
  return false;
}

std::optional<Real> HoloMap::clearance(Complex xi) const {
  if (std::holds_alternative<Sampled>(kind_)) return std::nullopt;
  if (needs_slit_plane()) return distance_to_negative_axis(xi);
  return std::numeric_limits<Real>::infinity();
}

bool HoloMap::in_domain(Complex xi) const {
  if (const auto* s = std::get_if<Sampled>(&kind_)) return s->domain.contains(xi, 0);
  if (needs_slit_plane()) return distance_to_negative_axis(xi) > 0;
  return true;
}

}  // namespace dynlab
