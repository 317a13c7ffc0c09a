#include <atomic>
#include <functional>
#include <thread>

#include "doctest.h"
#include "oracle.hpp"
#include "secant/error.hpp"
#include "secant/secant_core.hpp"

using namespace secant;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

BigInt big128(oracle::i128 v) { return BigInt(static_cast<long>(oracle::to_ll(v))); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalMismatch;
}

std::vector<SecantInstance> sample(int max_g, int max_k, int extra) {
  std::vector<SecantInstance> out;
  for (int g = 0; g <= max_g; ++g)
    for (int k = 0; k <= max_k; ++k)
      for (int d = 2 * g + 2 * k + 1; d <= 2 * g + 2 * k + 1 + extra; ++d)
        out.push_back({g, d, k});
  return out;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK(SecantInstance{0, 3, 1}.is_valid());
  CHECK_FALSE(SecantInstance{0, 2, 1}.is_valid());
  CHECK_FALSE(SecantInstance{-1, 9, 0}.is_valid());
  CHECK_FALSE(SecantInstance{1, 9, -1}.is_valid());
  CHECK(kind_of([] { SecantInstance::make(0, 2, 1); }) == ErrorKind::Domain);
  try {
    SecantInstance::make(0, 2, 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "degree 2 violates d >= 2g+2k+1 = 3");
  }
  const auto inst = SecantInstance::make(2, 9, 1);
  CHECK(inst.ambient_dim() == 7);
  CHECK(inst.dimension() == 3);
  CHECK(inst.krull_dim() == 4);
  CHECK(kind_of([] { hilbert_polynomial({1, 4, 1}); }) == ErrorKind::Domain);
}

TEST_CASE("node values for k = 1") {
  // a_{-1} = -(gd + g^2 - g), a_0 = -(g^2+g-2)/2, a_1 = d-g+1, a_2 = C(d-g+2, 2)
  const NodeValues n = node_values({2, 9, 1});
  CHECK(n.first_twist() == -1);
  CHECK(n.last_twist() == 2);
  CHECK(n.at(-1) == q(-20));
  CHECK(n.at(0) == q(-2));
  CHECK(n.at(1) == q(8));
  CHECK(n.at(2) == q(36));
  for (int g = 0; g <= 6; ++g) {
    for (int d = 2 * g + 3; d <= 2 * g + 12; ++d) {
      const NodeValues m = node_values({g, d, 1});
      CHECK(m.at(-1) == q(-(g * d + g * g - g)));
      CHECK(m.at(0) == q(-(g * g + g - 2), 2));
    }
  }
}

TEST_CASE("node values match the integer oracle") {
  for (const auto& inst : sample(5, 5, 6)) {
    const NodeValues n = node_values(inst);
    const auto a = oracle::nodes(inst.genus, inst.degree, inst.order);
    for (std::int64_t l = -inst.order; l <= inst.order + 1; ++l) {
      CHECK(n.at(l) == Rational(big128(a[l + inst.order])));
    }
  }
}

TEST_CASE("hilbert_polynomial examples") {
  for (int g = 0; g <= 4; ++g) {
    for (int d = 2 * g + 1; d <= 2 * g + 8; ++d) {
      CHECK(hilbert_polynomial({g, d, 0}) == QPolynomial(std::vector<Rational>{q(1 - g), q(d)}));
    }
  }
  for (int k = 0; k <= 5; ++k) {
    CHECK(hilbert_polynomial({0, 2 * k + 1, k}) == binomial_poly(2 * k + 1, 2 * k + 1));
  }
  CHECK(hilbert_polynomial({2, 9, 1})(q(3)) == q(108));
  CHECK(hilbert_polynomial({2, 9, 1}) ==
        QPolynomial(std::vector<Rational>{q(-2), q(29, 3), q(-4), q(13, 3)}));
  // elliptic normal quintic: Sigma_1 is a quintic hypersurface in P^4
  CHECK(hilbert_polynomial({1, 5, 1}) == binomial_poly(4, 4) - binomial_poly(-1, 4));
}

TEST_CASE("hilbert_polynomial matches the integer oracle") {
  for (const auto& inst : sample(5, 5, 8)) {
    const QPolynomial chi = hilbert_polynomial(inst);
    CHECK(chi.degree() == 2 * inst.order + 1);
    for (int t = -inst.order - 3; t <= inst.order + 6; ++t) {
      CHECK(chi(q(t)) == Rational(big128(oracle::chi(inst.genus, inst.degree, inst.order, t))));
    }
  }
}

TEST_CASE("closed form and interpolation agree") {
  for (const auto& inst : sample(3, 4, 5)) {
    const NodeValues n = node_values(inst);
    CHECK(closed_form_polynomial(n) == interpolated_polynomial(n));
  }
}

TEST_CASE("hilbert_function") {
  CHECK(hilbert_function({0, 4, 1}, 2) == 15);
  CHECK(hilbert_function({0, 4, 1}, 0) == 1);
  CHECK(hilbert_function({2, 9, 1}, 0) == 1);
  CHECK(hilbert_function({2, 9, 1}, 3) == 108);
  CHECK(kind_of([] { hilbert_function({0, 4, 1}, -1); }) == ErrorKind::Domain);
  for (const auto& inst : sample(4, 3, 4)) {
    for (int l = 1; l <= inst.order + 1; ++l) {
      CHECK(hilbert_function(inst, l) == binomial(inst.degree - inst.genus + l, l));
    }
  }
}

TEST_CASE("variety_degree") {
  for (int d = 1; d <= 10; ++d) CHECK(variety_degree({0, d, 0}) == d);
  for (int k = 0; k <= 5; ++k) CHECK(variety_degree({0, 2 * k + 1, k}) == 1);
  CHECK(variety_degree({0, 4, 1}) == 3);
  CHECK(variety_degree({1, 5, 1}) == 5);
  CHECK(variety_degree({1, 6, 1}) == 9);
  CHECK(variety_degree({1, 7, 1}) == 14);
  // k = 1: C(d-1, 2) - g
  for (int g = 0; g <= 5; ++g)
    for (int d = 2 * g + 3; d <= 2 * g + 10; ++d)
      CHECK(variety_degree({g, d, 1}) == binomial(d - 1, 2) - g);
}

TEST_CASE("hilbert_series") {
  for (int k = 0; k <= 4; ++k) {
    const auto s = hilbert_series({0, 2 * k + 1, k});
    CHECK(s.numerator == QPolynomial::constant(q(1)));
    CHECK(s.krull_dim == 2 * k + 2);
  }
  CHECK(hilbert_series({0, 4, 1}).numerator ==
        QPolynomial(std::vector<Rational>{q(1), q(1), q(1)}));
  for (int d = 3; d <= 9; ++d) CHECK(hilbert_series({1, d, 0}).numerator(q(1)) == q(d));
  for (const auto& inst : sample(4, 3, 5)) {
    const auto expected = oracle::series_numerator(inst.genus, inst.degree, inst.order);
    const auto got = hilbert_series(inst).numerator.coefficients();
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Rational(big128(expected[i])));
  }
}

TEST_CASE("generator_count") {
  CHECK(generator_count({0, 3, 0}) == 3);
  CHECK(generator_count({0, 4, 1}) == 1);
  CHECK(generator_count({0, 2, 0}) == 1);
  CHECK(generator_count({1, 9, 2}) == 9);
  CHECK(kind_of([] { generator_count({1, 5, 1}); }) == ErrorKind::GeneratorDegreeUnknown);
  // C(d-g+k+2, k+2) - chi(k+2) against the oracle
  for (int g = 0; g <= 3; ++g)
    for (int k = 0; k <= 3; ++k)
      for (int d = 2 * g + 2 * k + 2; d <= 2 * g + 2 * k + 6; ++d)
        CHECK(generator_count({g, d, k}) ==
              big128(oracle::choose(d - g + k + 2, k + 2) - oracle::chi(g, d, k, k + 2)));
}

TEST_CASE("canonical_h0") {
  CHECK(canonical_h0({0, 7, 2}) == 0);
  for (int g = 0; g <= 5; ++g) CHECK(canonical_h0({g, 2 * g + 1, 0}) == g);
  CHECK(canonical_h0({2, 9, 1}) == 3);
  CHECK(canonical_h0({2, 9, 1}) == 1 - (-2));
}

TEST_CASE("exactness identity at negative twists") {
  for (const auto& inst : sample(4, 4, 4)) {
    for (int l = -inst.order; l <= -1; ++l) {
      Rational s;
      for (int i = 0; i <= inst.order; ++i) {
        const Rational term = Rational(binomial(inst.genus, i)) *
                              hilbert_polynomial({inst.genus, inst.degree, inst.order - i})(q(l));
        s = (i % 2 == 0) ? s + term : s - term;
      }
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("memoized results are stable across threads") {
  std::vector<QPolynomial> first;
  for (const auto& inst : sample(2, 3, 2)) first.push_back(hilbert_polynomial(inst));
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      std::size_t i = 0;
      for (const auto& inst : sample(2, 3, 2)) {
        if (!(hilbert_polynomial(inst) == first[i++])) ++mismatches;
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(mismatches == 0);
}
