#pragma once

/**
 * @file tangent_geometry.hpp
 * @brief Tangent cones of a secant variety along its singular strata.
 *
 * A point of Sigma_s \ Sigma_{s-1} lies on a unique (s+1)-secant s-plane
 * spanned by a divisor xi of degree s+1. For s < k the projectivized tangent
 * cone there is a cone with vertex of projective dimension 2s over the
 * secant variety Sigma_{k-s-1} of the same curve re-embedded by L(-2xi),
 * whose degree is d - 2s - 2. Every invariant reported here depends on the
 * point only through s.
 */

#include <cstdint>
#include <optional>

#include "secant/exactmath.hpp"
#include "secant/secant_core.hpp"

namespace secant {

struct TangentConeDescriptor {
  SecantInstance ambient;
  std::int64_t stratum = 0;             // s
  std::optional<SecantInstance> base;   // nullopt marks a smooth point (s = k)
  std::int64_t vertex_proj_dim = 0;
  std::int64_t cone_proj_dim = 0;
  BigInt multiplicity;
  bool base_is_fano = false;
  HilbertSeries series;                 // of the projectivized tangent cone

  bool is_smooth_point() const { return !base.has_value(); }
};

struct ConeOverSecant {
  SecantInstance inst;
  std::int64_t vertex_count = 0;  // vertex is P^{m-1}
  HilbertSeries series;
};

/// Throws Error(StratumOutOfRange) for s outside [0, k].
TangentConeDescriptor tangent_cone_at(const SecantInstance& inst, std::int64_t s);

ConeOverSecant cone_over_secant(const SecantInstance& inst, std::int64_t m);

BigInt multiplicity_along_stratum(const SecantInstance& inst, std::int64_t s);

}  // namespace secant
