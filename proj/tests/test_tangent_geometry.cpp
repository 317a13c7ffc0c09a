#include <functional>

#include "doctest.h"
#include "secant/error.hpp"
#include "secant/tangent_geometry.hpp"

using namespace secant;

namespace {

Rational q(long n) { return Rational(n); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalMismatch;
}

}  // namespace

TEST_CASE("tangent cone of the catalecticant cubic along the curve") {
  const auto c = tangent_cone_at({0, 4, 1}, 0);
  REQUIRE(c.base.has_value());
  CHECK(*c.base == SecantInstance{0, 2, 0});
  CHECK(c.vertex_proj_dim == 0);
  CHECK(c.cone_proj_dim == 2);
  CHECK(c.multiplicity == 2);
  CHECK(c.base_is_fano);
  CHECK(c.series.krull_dim == 3);
  CHECK(c.series.numerator == QPolynomial(std::vector<Rational>{q(1), q(1)}));
}

TEST_CASE("smooth point marker") {
  const auto c = tangent_cone_at({2, 12, 2}, 2);
  CHECK(c.is_smooth_point());
  CHECK(c.multiplicity == 1);
  CHECK(c.vertex_proj_dim == 4);
  CHECK(c.series.numerator == QPolynomial::constant(q(1)));
  CHECK(c.series.krull_dim == 5);
  CHECK(multiplicity_along_stratum({2, 12, 2}, 2) == 1);
}

TEST_CASE("projective space is smooth everywhere") {
  for (int k = 1; k <= 5; ++k)
    for (int s = 0; s < k; ++s) {
      const auto c = tangent_cone_at({0, 2 * k + 1, k}, s);
      CHECK(*c.base == SecantInstance{0, 2 * (k - s - 1) + 1, k - s - 1});
      CHECK(c.multiplicity == 1);
    }
}

TEST_CASE("stratum k-1 has the re-embedded curve as base") {
  for (int g = 0; g <= 3; ++g)
    for (int k = 1; k <= 3; ++k)
      for (int d = 2 * g + 2 * k + 1; d <= 2 * g + 2 * k + 5; ++d) {
        const auto c = tangent_cone_at({g, d, k}, k - 1);
        CHECK(*c.base == SecantInstance{g, d - 2 * k, 0});
        CHECK(c.multiplicity == d - 2 * k);
        CHECK(c.base_is_fano == (g == 0));
      }
}

TEST_CASE("multiplicity equals the degree of the base") {
  CHECK(multiplicity_along_stratum({1, 9, 2}, 0) == variety_degree({1, 7, 1}));
  CHECK(multiplicity_along_stratum({1, 9, 2}, 0) == 14);
  CHECK(multiplicity_along_stratum({0, 4, 1}, 0) == 2);
}

TEST_CASE("tangent cone errors") {
  CHECK(kind_of([] { tangent_cone_at({0, 4, 1}, 2); }) == ErrorKind::StratumOutOfRange);
  CHECK(kind_of([] { multiplicity_along_stratum({0, 4, 1}, 5); }) ==
        ErrorKind::StratumOutOfRange);
  CHECK(kind_of([] { tangent_cone_at({0, 3, 1}, -1); }) == ErrorKind::StratumOutOfRange);
  CHECK(kind_of([] { tangent_cone_at({1, 3, 1}, 0); }) == ErrorKind::Domain);
}

TEST_CASE("cone over the secant variety") {
  const auto c = cone_over_secant({0, 4, 1}, 1);
  CHECK(c.series.numerator == QPolynomial(std::vector<Rational>{q(1), q(1), q(1)}));
  CHECK(c.series.krull_dim == 5);
  for (int g = 0; g <= 2; ++g)
    for (int d = 2 * g + 3; d <= 2 * g + 6; ++d) {
      CHECK(cone_over_secant({g, d, 1}, 0).series == hilbert_series({g, d, 1}));
      const auto c2 = cone_over_secant({g, d - 2, 0}, 2);
      CHECK(c2.series.numerator(q(1)) == q(d - 2));
      CHECK(c2.series.krull_dim == 4);
    }
  CHECK(kind_of([] { cone_over_secant({0, 4, 1}, -1); }) == ErrorKind::Domain);
}
