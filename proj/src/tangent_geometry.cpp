#include "secant/tangent_geometry.hpp"

#include <string>

#include "secant/error.hpp"

namespace secant {

TangentConeDescriptor tangent_cone_at(const SecantInstance& inst, std::int64_t s) {
  inst.validate();
  const std::int64_t k = inst.order;
  if (s < 0 || s > k) {
    throw Error(ErrorKind::StratumOutOfRange,
                "stratum " + std::to_string(s) + " outside [0, " +
                    std::to_string(k) + "]");
  }

  TangentConeDescriptor out;
  out.ambient = inst;
  out.stratum = s;
  out.cone_proj_dim = 2 * k;
  if (s == k) {
    // Smooth point: the tangent cone is the tangent space.
    out.vertex_proj_dim = 2 * k;
    out.multiplicity = 1;
    out.series = HilbertSeries{QPolynomial::constant(1), 2 * k + 1};
    return out;
  }

  // d - 2s - 2 >= 2g + 2(k-s-1) + 1 follows from d >= 2g + 2k + 1.
  const SecantInstance base{inst.genus, inst.degree - 2 * s - 2, k - s - 1};
  base.validate();
  out.base = base;
  out.vertex_proj_dim = 2 * s;
  out.multiplicity = variety_degree(base);
  out.base_is_fano = inst.genus == 0;
  out.series = HilbertSeries{hilbert_series(base).numerator, 2 * k + 1};
  return out;
}

ConeOverSecant cone_over_secant(const SecantInstance& inst, std::int64_t m) {
  if (m < 0) {
    throw Error(ErrorKind::Domain,
                "vertex count " + std::to_string(m) + " is negative");
  }
  HilbertSeries series = hilbert_series(inst);
  series.krull_dim += m;
  return ConeOverSecant{inst, m, std::move(series)};
}

BigInt multiplicity_along_stratum(const SecantInstance& inst, std::int64_t s) {
  return tangent_cone_at(inst, s).multiplicity;
}

}  // namespace secant
