#pragma once

/**
 * @file cohomology.hpp
 * @brief Dimension calculus for cohomology on symmetric products of a curve.
 *
 * Line bundles enter only through (genus, degree, h^0, h^1). In the special
 * range 0 <= degree <= 2g-2 these are not determined by the degree, so the
 * caller has to supply h^1 there.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/exactmath.hpp"
#include "secant/secant_core.hpp"

namespace secant {

struct LineBundleClass {
  std::int64_t genus = 0;
  std::int64_t degree = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;

  /// Checks Riemann-Roch and the forced vanishings; throws Error(Domain).
  static LineBundleClass make(std::int64_t genus, std::int64_t degree,
                              std::int64_t h0, std::int64_t h1);
  static LineBundleClass canonical(std::int64_t genus);
  static LineBundleClass trivial(std::int64_t genus);
  /// Requires degree > 2g-2.
  static LineBundleClass nonspecial(std::int64_t genus, std::int64_t degree);

  /// The class when the degree alone determines it (degree < 0 or > 2g-2).
  static std::optional<LineBundleClass> forced(std::int64_t genus,
                                               std::int64_t degree);
  /// forced() if possible, else built from the supplied h^1;
  /// Error(AmbiguousBundle) when neither applies.
  static LineBundleClass resolve(std::int64_t genus, std::int64_t degree,
                                 std::optional<std::int64_t> h1);

  void validate() const;

  friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
};

/// dim S^j of an n-dimensional space (0 for j < 0).
BigInt sym_dim(std::int64_t n, std::int64_t j);
/// dim wedge^j of an n-dimensional space (0 for j < 0).
BigInt wedge_dim(std::int64_t n, std::int64_t j);

/// h^i(C_m, N_{m,L}) = dim wedge^{m-i} H^0(L) (x) S^i H^1(L).
BigInt coh_N(std::int64_t m, const LineBundleClass& lb, std::int64_t i);
/// h^i(C_m, T_m(L)) = dim S^{m-i} H^0(L) (x) wedge^i H^1(L).
BigInt coh_T(std::int64_t m, const LineBundleClass& lb, std::int64_t i);

/// h^i(C_{k+1}, S^l E_{k+1,L}).
BigInt coh_sym_E(const SecantInstance& inst, std::int64_t twist, std::int64_t i);

struct DirectImageRank {
  std::int64_t index;          // i
  BigInt multiplicity;         // dim wedge^i H^1(O_C)
  std::int64_t support_order;  // R^i is supported on Sigma_{k-i}

  friend bool operator==(const DirectImageRank&, const DirectImageRank&) = default;
};

/// Nonzero higher direct images of the structure sheaf of the secant bundle.
std::vector<DirectImageRank> higher_direct_image_ranks(const SecantInstance& inst);

/// h^i(C_{k+1}, wedge^l E_{k+1,L} (x) T_{k+1}(M)). The class of L (x) M is
/// taken from `product` when given, otherwise it must be forced by degree.
BigInt coh_wedge_E(std::int64_t kplus1, std::int64_t twist,
                   const LineBundleClass& L, const LineBundleClass& M,
                   std::int64_t i,
                   const std::optional<LineBundleClass>& product = std::nullopt);

/// h^0 of R^i beta_* omega(Z_{k-1}) twisted by l > 0: -chi_k(-l) for i = 0,
/// -chi_{k-1}(-l) for i = 1, zero otherwise.
BigInt coh_canonical_sym_E(const SecantInstance& inst, std::int64_t twist,
                           std::int64_t i);

// ---------------------------------------------------------------------------
// Tables

enum class TableFamily { N, T, SymE, WedgeE, CanonicalSymE };

std::string_view to_string(TableFamily family);
std::optional<TableFamily> parse_table_family(std::string_view text);

struct TableEntry {
  std::int64_t i = 0;
  std::optional<std::int64_t> twist;  // absent for N and T
  BigInt dim;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct CohomologyTable {
  TableFamily family;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
  std::vector<TableEntry> entries;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

CohomologyTable line_bundle_table(TableFamily family, std::int64_t m,
                                  const LineBundleClass& lb);
CohomologyTable sym_E_table(const SecantInstance& inst,
                            const std::vector<std::int64_t>& twists);
CohomologyTable wedge_E_table(std::int64_t kplus1, const LineBundleClass& L,
                              const LineBundleClass& M,
                              const std::optional<LineBundleClass>& product,
                              const std::vector<std::int64_t>& twists);
CohomologyTable canonical_sym_E_table(const SecantInstance& inst,
                                      const std::vector<std::int64_t>& twists);

}  // namespace secant
