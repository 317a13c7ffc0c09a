#include "secant/secant_core.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "secant/error.hpp"

namespace secant {

namespace {

// Concurrent readers; a racing writer stores an identical value, so
// double computation is harmless.
class PolynomialCache {
 public:
  const QPolynomial* find(const SecantInstance& inst) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(inst);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const QPolynomial& store(const SecantInstance& inst, QPolynomial poly) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(inst, std::move(poly)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<SecantInstance, QPolynomial> entries_;  // node-stable references
};

PolynomialCache& cache() {
  static PolynomialCache instance;
  return instance;
}

std::string bound_message(const SecantInstance& inst) {
  const std::int64_t bound = 2 * inst.genus + 2 * inst.order + 1;
  return "degree " + std::to_string(inst.degree) +
         " violates d >= 2g+2k+1 = " + std::to_string(bound);
}

}  // namespace

// ---------------------------------------------------------------------------
// SecantInstance

SecantInstance SecantInstance::make(std::int64_t genus, std::int64_t degree,
                                    std::int64_t order) {
  SecantInstance inst{genus, degree, order};
  inst.validate();
  return inst;
}

bool SecantInstance::is_valid() const {
  return genus >= 0 && order >= 0 && degree >= 1 &&
         degree >= 2 * genus + 2 * order + 1;
}

void SecantInstance::validate() const {
  if (genus < 0) {
    throw Error(ErrorKind::Domain,
                "genus " + std::to_string(genus) + " is negative");
  }
  if (order < 0) {
    throw Error(ErrorKind::Domain,
                "order " + std::to_string(order) + " is negative");
  }
  if (!is_valid()) throw Error(ErrorKind::Domain, bound_message(*this));
}

// ---------------------------------------------------------------------------
// NodeValues

NodeValues::NodeValues(std::int64_t order, std::vector<Rational> values)
    : order_(order), values_(std::move(values)) {
  if (order_ < 0 || values_.size() != static_cast<std::size_t>(2 * order_ + 2)) {
    throw Error(ErrorKind::Domain, "node table needs exactly 2k+2 values");
  }
}

const Rational& NodeValues::at(std::int64_t twist) const {
  if (twist < first_twist() || twist > last_twist()) {
    throw Error(ErrorKind::Domain,
                "twist " + std::to_string(twist) + " is not a node");
  }
  return values_[static_cast<std::size_t>(twist + order_)];
}

std::vector<Node> NodeValues::as_nodes() const {
  std::vector<Node> out;
  out.reserve(values_.size());
  for (std::int64_t l = first_twist(); l <= last_twist(); ++l) {
    out.emplace_back(Rational(l), at(l));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert engine

NodeValues node_values(const SecantInstance& inst) {
  inst.validate();
  const std::int64_t g = inst.genus;
  const std::int64_t d = inst.degree;
  const std::int64_t k = inst.order;

  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(2 * k + 2));

  // Negative twists: h^{2k+1}(O(l)) = sum_{i>=1} (-1)^i C(g,i) chi_{k-i}(l),
  // and chi(l) = -h^{2k+1}(O(l)) since all other cohomology vanishes.
  std::vector<QPolynomial> lower;
  for (std::int64_t i = 1; i <= k; ++i) {
    lower.push_back(hilbert_polynomial(SecantInstance{g, d, k - i}));
  }
  for (std::int64_t l = -k; l <= -1; ++l) {
    Rational top_cohomology;
    for (std::int64_t i = 1; i <= k; ++i) {
      const Rational term =
          Rational(binomial(g, i)) * lower[static_cast<std::size_t>(i - 1)](l);
      if (i % 2 == 0) {
        top_cohomology += term;
      } else {
        top_cohomology -= term;
      }
    }
    values.push_back(-top_cohomology);
  }

  values.emplace_back(BigInt(1 - binomial(g + k, k + 1)));
  for (std::int64_t l = 1; l <= k + 1; ++l) {
    values.emplace_back(binomial(d - g + l, l));
  }
  return NodeValues(k, std::move(values));
}

QPolynomial closed_form_polynomial(const NodeValues& nodes) {
  const std::int64_t k = nodes.order();
  const QPolynomial vanishing = binomial_poly(k, 2 * k + 2);  // C(t+k, 2k+2)

  QPolynomial sum;
  for (std::int64_t l = -k; l <= k + 1; ++l) {
    auto [quotient, remainder] = vanishing.divide_by_linear(Rational(l));
    if (!remainder.is_zero()) {
      throw Error(ErrorKind::InternalMismatch,
                  "C(t+k,2k+2) does not vanish at node " + std::to_string(l));
    }
    Rational weight = Rational(binomial(2 * k + 2, k + l)) * Rational(k + 2 - l);
    if ((k + 1 - l) % 2 != 0) weight = -weight;
    sum += quotient * (weight * nodes.at(l));
  }
  return sum;
}

QPolynomial interpolated_polynomial(const NodeValues& nodes) {
  return lagrange_interpolate(nodes.as_nodes());
}

QPolynomial hilbert_polynomial(const SecantInstance& inst) {
  inst.validate();
  if (const QPolynomial* hit = cache().find(inst)) return *hit;

  const NodeValues nodes = node_values(inst);
  QPolynomial closed = closed_form_polynomial(nodes);
  const QPolynomial interpolated = interpolated_polynomial(nodes);
  if (!(closed == interpolated)) {
    throw Error(ErrorKind::InternalMismatch,
                "closed form " + closed.to_string() +
                    " differs from interpolant " + interpolated.to_string());
  }
  if (closed.degree() != inst.dimension() ||
      closed.leading_coefficient().sign() <= 0) {
    throw Error(ErrorKind::InternalMismatch,
                "Hilbert polynomial " + closed.to_string() +
                    " does not have degree 2k+1 with positive leading term");
  }
  return cache().store(inst, std::move(closed));
}

BigInt hilbert_function(const SecantInstance& inst, std::int64_t twist) {
  inst.validate();
  if (twist < 0) {
    throw Error(ErrorKind::Domain,
                "Hilbert function twist " + std::to_string(twist) +
                    " is negative");
  }
  if (twist == 0) return 1;
  const Rational value = hilbert_polynomial(inst)(Rational(twist));
  if (!value.is_integer() || value.sign() <= 0) {
    throw Error(ErrorKind::InternalMismatch,
                "chi(" + std::to_string(twist) + ") = " + value.to_string() +
                    " is not a positive integer");
  }
  return value.numerator();
}

BigInt variety_degree(const SecantInstance& inst) {
  const QPolynomial chi = hilbert_polynomial(inst);
  BigInt factorial = 1;
  for (std::int64_t i = 2; i <= inst.dimension(); ++i) factorial *= big(i);
  const Rational deg = chi.leading_coefficient() * Rational(factorial);
  if (!deg.is_integer() || deg.sign() <= 0) {
    throw Error(ErrorKind::InternalMismatch,
                "degree " + deg.to_string() + " is not a positive integer");
  }
  return deg.numerator();
}

HilbertSeries hilbert_series(const SecantInstance& inst) {
  inst.validate();
  const int krull = static_cast<int>(inst.krull_dim());
  QPolynomial numerator = finite_difference_numerator(
      [&inst](std::int64_t n) { return hilbert_function(inst, n); }, krull,
      krull + 2);
  return HilbertSeries{std::move(numerator), inst.krull_dim()};
}

BigInt generator_count(const SecantInstance& inst) {
  inst.validate();
  const std::int64_t g = inst.genus;
  const std::int64_t k = inst.order;
  if (inst.degree == 2 * g + 2 * k + 1) {
    throw Error(ErrorKind::GeneratorDegreeUnknown,
                "degree " + std::to_string(inst.degree) +
                    " = 2g+2k+1: ideal not known to be generated in degree k+2");
  }
  return binomial(inst.degree - g + k + 2, k + 2) - hilbert_function(inst, k + 2);
}

BigInt canonical_h0(const SecantInstance& inst) {
  inst.validate();
  return binomial(inst.genus + inst.order, inst.order + 1);
}

}  // namespace secant
