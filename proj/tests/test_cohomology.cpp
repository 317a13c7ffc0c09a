#include <functional>

#include "doctest.h"
#include "oracle.hpp"
#include "secant/cohomology.hpp"
#include "secant/error.hpp"

using namespace secant;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalMismatch;
}

BigInt big128(oracle::i128 v) { return BigInt(static_cast<long>(oracle::to_ll(v))); }

}  // namespace

TEST_CASE("line bundle classes") {
  const auto K = LineBundleClass::canonical(3);
  CHECK(K.degree == 4);
  CHECK(K.h0 == 3);
  CHECK(K.h1 == 1);
  CHECK(LineBundleClass::canonical(0) == LineBundleClass{0, -2, 0, 1});
  CHECK(LineBundleClass::trivial(2) == LineBundleClass{2, 0, 1, 2});
  CHECK(LineBundleClass::nonspecial(2, 7) == LineBundleClass{2, 7, 6, 0});
  CHECK(LineBundleClass::forced(2, -1) == LineBundleClass{2, -1, 0, 2});
  CHECK_FALSE(LineBundleClass::forced(2, 1).has_value());
  CHECK(LineBundleClass::resolve(2, 1, 1) == LineBundleClass{2, 1, 1, 1});
  CHECK(kind_of([] { LineBundleClass::resolve(2, 1, std::nullopt); }) ==
        ErrorKind::AmbiguousBundle);
  CHECK(kind_of([] { LineBundleClass::resolve(2, 7, 1); }) == ErrorKind::Domain);
  CHECK(kind_of([] { LineBundleClass::make(2, 7, 5, 0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { LineBundleClass::make(2, -1, 1, 4); }) == ErrorKind::Domain);
  CHECK(kind_of([] { LineBundleClass::nonspecial(2, 2); }) == ErrorKind::Domain);
}

TEST_CASE("sym_dim and wedge_dim") {
  CHECK(sym_dim(3, 2) == 6);
  CHECK(wedge_dim(3, 5) == 0);
  CHECK(sym_dim(0, 0) == 1);
  CHECK(sym_dim(0, 1) == 0);
  CHECK(sym_dim(4, -1) == 0);
  CHECK(wedge_dim(4, 2) == 6);
}

TEST_CASE("coh_N") {
  const auto L = LineBundleClass::nonspecial(2, 7);
  CHECK(coh_N(3, L, 0) == 20);
  for (int i = 1; i <= 3; ++i) CHECK(coh_N(3, L, i) == 0);
  for (int g = 0; g <= 4; ++g) {
    const auto K = LineBundleClass::canonical(g);
    for (int m = 1; m <= 5; ++m)
      for (int i = 0; i <= m; ++i) CHECK(coh_N(m, K, i) == binomial(g, m - i));
  }
  CHECK(coh_N(2, L, -1) == 0);
  CHECK(coh_N(2, L, 3) == 0);
}

TEST_CASE("coh_T") {
  for (int g = 0; g <= 4; ++g) {
    const auto O = LineBundleClass::trivial(g);
    for (int m = 1; m <= 5; ++m)
      for (int i = 0; i <= m; ++i) CHECK(coh_T(m, O, i) == binomial(g, i));
  }
  for (int g = 0; g <= 4; ++g)
    for (int k = 0; k <= 3; ++k)
      CHECK(coh_T(k + 1, LineBundleClass::canonical(g), 0) == sym_dim(g, k + 1));
  const auto L = LineBundleClass::nonspecial(1, 4);
  for (int i = 1; i <= 3; ++i) CHECK(coh_T(3, L, i) == 0);
}

TEST_CASE("coh_sym_E") {
  for (int g = 0; g <= 3; ++g)
    for (int k = 0; k <= 3; ++k)
      for (int d = 2 * g + 2 * k + 1; d <= 2 * g + 2 * k + 4; ++d)
        for (int l = 1; l <= k + 1; ++l)
          CHECK(coh_sym_E({g, d, k}, l, 0) == binomial(d - g + l, l));
  CHECK(coh_sym_E({1, 5, 1}, 1, 1) == 5);
  for (int k = 0; k <= 3; ++k)
    for (int l = 1; l <= 4; ++l)
      for (int i = 1; i <= k + 1; ++i) CHECK(coh_sym_E({0, 2 * k + 3, k}, l, i) == 0);
  CHECK(kind_of([] { coh_sym_E({1, 4, 1}, 1, 0); }) == ErrorKind::Domain);
}

TEST_CASE("coh_sym_E follows the Kunneth oracle on C_2") {
  for (int g = 0; g <= 5; ++g) {
    for (int d = 2 * g + 3; d <= 2 * g + 12; ++d) {
      const long hO[2] = {1, g};
      const long hL[2] = {d - g + 1, 0};
      for (int i = 0; i <= 2; ++i) {
        long direct = 0;
        for (int p = 0; p <= 1; ++p)
          if (i - p >= 0 && i - p <= 1) direct += hO[p] * hL[i - p];
        CHECK(coh_sym_E({g, d, 1}, 1, i) == direct);
      }
    }
  }
}

TEST_CASE("coh_sym_E at i = 0 matches the oracle Hilbert function") {
  for (int g = 0; g <= 3; ++g)
    for (int k = 0; k <= 3; ++k)
      for (int d = 2 * g + 2 * k + 1; d <= 2 * g + 2 * k + 3; ++d)
        for (int l = 1; l <= 2 * k + 4; ++l)
          CHECK(coh_sym_E({g, d, k}, l, 0) == big128(oracle::chi(g, d, k, l)));
}

TEST_CASE("higher_direct_image_ranks") {
  const auto r = higher_direct_image_ranks({3, 11, 2});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == DirectImageRank{0, 1, 2});
  CHECK(r[2] == DirectImageRank{2, 3, 0});
  const auto r0 = higher_direct_image_ranks({0, 7, 3});
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == DirectImageRank{0, 1, 3});
  CHECK(higher_direct_image_ranks({1, 9, 3}).size() == 2);
}

TEST_CASE("coh_wedge_E") {
  const auto L = LineBundleClass::nonspecial(2, 7);
  const auto O = LineBundleClass::trivial(2);
  CHECK(coh_wedge_E(2, 1, L, O, 1) == 12);
  CHECK(coh_wedge_E(2, 1, L, O, 0) == 6);
  CHECK(coh_wedge_E(2, 1, L, O, 2) == 0);
  // l = k+1 collapses to N of L (x) M
  for (int g = 0; g <= 3; ++g) {
    for (int kplus1 = 1; kplus1 <= 4; ++kplus1) {
      const auto A = LineBundleClass::nonspecial(g, 2 * g + 1);
      const auto B = LineBundleClass::nonspecial(g, 2 * g + 3);
      const auto AB = LineBundleClass::nonspecial(g, 4 * g + 4);
      for (int i = 0; i <= kplus1; ++i)
        CHECK(coh_wedge_E(kplus1, kplus1, A, B, i) == coh_N(kplus1, AB, i));
    }
  }
  // trivial M in genus 0: only the q = i term
  const auto P = LineBundleClass::nonspecial(0, 5);
  const auto O0 = LineBundleClass::trivial(0);
  CHECK(coh_wedge_E(2, 1, P, O0, 0) == 6);
  CHECK(coh_wedge_E(2, 1, P, O0, 1) == 0);

  const auto special = LineBundleClass::trivial(3);
  CHECK(kind_of([&] { coh_wedge_E(2, 1, special, special, 0); }) == ErrorKind::AmbiguousBundle);
  CHECK(coh_wedge_E(2, 1, special, special, 0, LineBundleClass::trivial(3)) >= 0);
  CHECK(kind_of([&] { coh_wedge_E(2, 0, L, O, 0); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { coh_wedge_E(2, 3, L, O, 0); }) == ErrorKind::Domain);
}

TEST_CASE("coh_canonical_sym_E") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 1; l <= 2 * k + 1; ++l) CHECK(coh_canonical_sym_E({0, 2 * k + 1, k}, l, 0) == 0);
  CHECK(coh_canonical_sym_E({0, 3, 1}, 4, 0) == 1);
  CHECK(coh_canonical_sym_E({2, 9, 1}, 1, 0) == 20);
  CHECK(coh_canonical_sym_E({2, 9, 1}, 5, 2) == 0);
  CHECK(coh_canonical_sym_E({2, 9, 0}, 2, 1) == 0);
  for (int g = 0; g <= 3; ++g)
    for (int k = 0; k <= 3; ++k)
      for (int l = 1; l <= 5; ++l)
        CHECK(coh_canonical_sym_E({g, 2 * g + 2 * k + 2, k}, l, 0) ==
              big128(-oracle::chi(g, 2 * g + 2 * k + 2, k, -l)));
  CHECK(kind_of([] { coh_canonical_sym_E({2, 9, 1}, 0, 0); }) == ErrorKind::Domain);
}

TEST_CASE("tables") {
  const auto t = sym_E_table({2, 9, 1}, {1, 2});
  CHECK(t.family == TableFamily::SymE);
  CHECK(t.entries.size() == 6);
  CHECK(t.entries[0] == TableEntry{0, 1, 8});
  CHECK(t == sym_E_table({2, 9, 1}, {1, 2}));
  const auto n = line_bundle_table(TableFamily::N, 3, LineBundleClass::nonspecial(2, 7));
  CHECK(n.entries.size() == 4);
  CHECK_FALSE(n.entries[0].twist.has_value());
  CHECK(n.entries[0].dim == 20);
  CHECK(parse_table_family("CanonicalSymE") == TableFamily::CanonicalSymE);
  CHECK_FALSE(parse_table_family("bogus").has_value());
  for (const auto& e : canonical_sym_E_table({3, 12, 2}, {1, 2, 3}).entries) CHECK(e.dim >= 0);
}
