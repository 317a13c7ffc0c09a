#include "secant/exactmath.hpp"

#include <algorithm>
#include <sstream>

#include "secant/error.hpp"

namespace secant {

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos) {
    throw Error(ErrorKind::Domain, "not an integer: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  BigInt v;
  if (v.set_str(s, 10) != 0) {
    throw Error(ErrorKind::Domain, "not an integer: '" + s + "'");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)),
                  parse_bigint(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  value_ /= o.value_;
  return *this;
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

QPolynomial QPolynomial::constant(const Rational& c) {
  return QPolynomial(std::vector<Rational>{c});
}

QPolynomial QPolynomial::variable() {
  return QPolynomial(std::vector<Rational>{0, 1});
}

QPolynomial QPolynomial::linear_factor(const Rational& root) {
  return QPolynomial(std::vector<Rational>{-root, 1});
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational QPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational() : coeffs_.back();
}

bool QPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_integer(); });
}

Rational QPolynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

QPolynomial::LinearDivision QPolynomial::divide_by_linear(
    const Rational& root) const {
  if (coeffs_.empty()) return {QPolynomial(), Rational()};
  const std::size_t n = coeffs_.size();
  std::vector<Rational> quotient(n - 1);
  Rational carry = coeffs_[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    quotient[i] = carry;
    carry = coeffs_[i] + carry * root;
  }
  return {QPolynomial(std::move(quotient)), carry};
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t p = coeffs_.size(); p-- > 0;) {
    const Rational& c = coeffs_[p];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (p == 0) {
      os << mag.to_string();
      continue;
    }
    if (!unit) os << mag.to_string() << "*";
    os << "t";
    if (p > 1) os << "^" << p;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

BigInt binomial(std::int64_t n, std::int64_t j) {
  if (j < 0) return 0;
  BigInt out;
  const BigInt top = big(n);
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

QPolynomial binomial_poly(std::int64_t shift, std::int64_t lower) {
  if (lower < 0) return QPolynomial();
  QPolynomial acc = QPolynomial::constant(1);
  BigInt factorial = 1;
  for (std::int64_t i = 0; i < lower; ++i) {
    acc = acc * QPolynomial::linear_factor(Rational(big(i - shift)));
    factorial *= big(i + 1);
  }
  return acc * Rational(1, factorial);
}

QPolynomial lagrange_interpolate(const std::vector<Node>& nodes) {
  if (nodes.empty()) {
    throw Error(ErrorKind::Domain, "interpolation needs at least one node");
  }
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[i].first == nodes[j].first) {
        throw Error(ErrorKind::DuplicateNode,
                    "duplicate abscissa " + nodes[i].first.to_string());
      }
    }
  }

  // In-place divided-difference table; diff[i] ends as f[x_0..x_i].
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = nodes[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) /
                (nodes[i].first - nodes[i - level].first);
    }
  }

  // Horner on the Newton form.
  QPolynomial acc = QPolynomial::constant(diff[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * QPolynomial::linear_factor(nodes[i].first) +
          QPolynomial::constant(diff[i]);
  }
  return acc;
}

QPolynomial finite_difference_numerator(
    const std::function<BigInt(std::int64_t)>& values, int krull_dim,
    int cutoff) {
  if (krull_dim < 1 || cutoff < krull_dim + 1) {
    throw Error(ErrorKind::Domain,
                "finite differences need krull_dim >= 1 and cutoff > krull_dim");
  }
  std::vector<BigInt> h(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) h[n] = values(n);

  std::vector<Rational> q(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) {
    BigInt acc = 0;
    for (int j = 0; j <= krull_dim && j <= n; ++j) {
      const BigInt term = binomial(krull_dim, j) * h[n - j];
      if (j % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    q[n] = Rational(acc);
  }
  for (int n = krull_dim + 1; n <= cutoff; ++n) {
    if (!q[n].is_zero()) {
      throw Error(ErrorKind::NonvanishingTail,
                  "series numerator coefficient " + std::to_string(n) + " is " +
                      q[n].to_string() + ", expected 0");
    }
  }
  return QPolynomial(std::move(q));
}

std::vector<BigInt> expand_series(const QPolynomial& numerator, int krull_dim,
                                  int upto) {
  if (!numerator.has_integer_coefficients()) {
    throw Error(ErrorKind::Domain, "series numerator must be integral");
  }
  std::vector<BigInt> out;
  for (int ell = 0; ell <= upto; ++ell) {
    BigInt acc = 0;
    for (int n = 0; n <= numerator.degree() && n <= ell; ++n) {
      acc += numerator.coefficient(n).numerator() *
             binomial(ell - n + krull_dim - 1, krull_dim - 1);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace secant
