#pragma once

/**
 * @file secant_core.hpp
 * @brief Hilbert data of the k-th secant variety of a smooth curve.
 *
 * An instance is a curve of genus g embedded by a line bundle of degree d,
 * together with the secant order k. Every formula here requires
 * d >= 2g + 2k + 1; instances outside that range are rejected.
 *
 * The Hilbert polynomial has degree 2k+1 and is pinned down by its values at
 * the 2k+2 twists -k..k+1 (the "node values"). Positive nodes are the
 * dimensions of symmetric powers of H^0(L), the zero node is 1 - h^0(omega),
 * and the negative nodes come from the lower secant varieties of the same
 * curve through an alternating sum, so the computation recurses on k.
 */

#include <cstdint>
#include <vector>

#include "secant/exactmath.hpp"

namespace secant {

struct SecantInstance {
  std::int64_t genus = 0;   // g
  std::int64_t degree = 0;  // d = deg L
  std::int64_t order = 0;   // k

  /// Validating constructor; throws Error(Domain).
  static SecantInstance make(std::int64_t genus, std::int64_t degree,
                             std::int64_t order);

  bool is_valid() const;
  /// Throws Error(Domain) with a one-line reason when invalid.
  void validate() const;

  /// r = h^0(L) - 1 = d - g.
  std::int64_t ambient_dim() const { return degree - genus; }
  std::int64_t dimension() const { return 2 * order + 1; }
  std::int64_t krull_dim() const { return 2 * order + 2; }

  friend auto operator<=>(const SecantInstance&, const SecantInstance&) = default;
};

/// Values of the Hilbert polynomial at twists -k..k+1.
class NodeValues {
 public:
  NodeValues(std::int64_t order, std::vector<Rational> values);

  std::int64_t order() const { return order_; }
  std::int64_t first_twist() const { return -order_; }
  std::int64_t last_twist() const { return order_ + 1; }
  /// Throws Error(Domain) for twists outside -k..k+1.
  const Rational& at(std::int64_t twist) const;
  std::vector<Node> as_nodes() const;

 private:
  std::int64_t order_;
  std::vector<Rational> values_;
};

struct HilbertSeries {
  QPolynomial numerator;  // integral coefficients
  std::int64_t krull_dim = 0;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

NodeValues node_values(const SecantInstance& inst);

/// Closed-form route: sum over nodes of a_l * (Lagrange basis polynomial at l),
/// the basis written as (-1)^(k+1-l) C(2k+2, k+l) (k+2-l) C(t+k, 2k+2)/(t-l)
/// with the last factor obtained by exact division.
QPolynomial closed_form_polynomial(const NodeValues& nodes);

/// Interpolation route through the same nodes.
QPolynomial interpolated_polynomial(const NodeValues& nodes);

/// chi(O(t)) of the secant variety. Both routes are computed and compared;
/// a disagreement throws Error(InternalMismatch). Memoized per (g, d, k).
QPolynomial hilbert_polynomial(const SecantInstance& inst);

/// h^0(O(twist)); 1 at twist 0, chi(twist) for twist > 0.
BigInt hilbert_function(const SecantInstance& inst, std::int64_t twist);

/// (2k+1)! times the leading coefficient of the Hilbert polynomial.
BigInt variety_degree(const SecantInstance& inst);

HilbertSeries hilbert_series(const SecantInstance& inst);

/// C(d-g+k+2, k+2) - chi(k+2). Needs d >= 2g+2k+2; at the boundary
/// d = 2g+2k+1 throws Error(GeneratorDegreeUnknown).
BigInt generator_count(const SecantInstance& inst);

/// h^0(omega) = C(g+k, k+1).
BigInt canonical_h0(const SecantInstance& inst);

}  // namespace secant
