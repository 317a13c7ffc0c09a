#pragma once

/**
 * @file exactmath.hpp
 * @brief Exact integers, rationals and univariate rational polynomials.
 *
 * Every numeric quantity in the library is carried by one of these types.
 * Polynomials are dense, in ascending degree, in a single variable t.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secant {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::string to_string(const BigInt& v);
BigInt parse_bigint(std::string_view text);

/// Rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(static_cast<long>(v)) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(static_cast<long>(v)) {}
  Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q"; the result is normalized.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return from_raw(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  static Rational from_raw(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  mpq_class value_;
};

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);

  static QPolynomial constant(const Rational& c);
  /// The twist variable t.
  static QPolynomial variable();
  /// t - root
  static QPolynomial linear_factor(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& t) const;

  struct LinearDivision;
  /// Synthetic division by (t - root).
  LinearDivision divide_by_linear(const Rational& root) const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& c);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
  friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable, highest degree first, e.g. "1/2*t^3 + 3/2*t^2 + 2*t + 1".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

struct QPolynomial::LinearDivision {
  QPolynomial quotient;
  Rational remainder;
};

/// Generalized binomial coefficient: 0 for j < 0, otherwise the falling
/// factorial n(n-1)...(n-j+1)/j! for any integer n.
BigInt binomial(std::int64_t n, std::int64_t j);

/// prod_{i=0}^{lower-1} (t + shift - i) / lower!, i.e. binomial(t + shift, lower).
QPolynomial binomial_poly(std::int64_t shift, std::int64_t lower);

using Node = std::pair<Rational, Rational>;

/// Newton divided differences, expanded to the monomial basis.
/// Throws Error(DuplicateNode) on repeated abscissae, Error(Domain) on empty input.
QPolynomial lagrange_interpolate(const std::vector<Node>& nodes);

/// Numerator Q of the Hilbert series sum_n values(n) s^n = Q(s) / (1-s)^krull_dim.
/// values is only queried at n >= 0; negative arguments count as 0.
/// Throws Error(NonvanishingTail) if some Q_n with krull_dim < n <= cutoff is nonzero.
QPolynomial finite_difference_numerator(
    const std::function<BigInt(std::int64_t)>& values, int krull_dim, int cutoff);

/// Power-series coefficients 0..upto of numerator / (1-s)^krull_dim.
std::vector<BigInt> expand_series(const QPolynomial& numerator, int krull_dim,
                                  int upto);

}  // namespace secant
