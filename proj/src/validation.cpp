#include "secant/validation.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "secant/cli.hpp"
#include "secant/cohomology.hpp"
#include "secant/error.hpp"
#include "secant/render.hpp"
#include "secant/secant_core.hpp"
#include "secant/tangent_geometry.hpp"

namespace secant::validation {

namespace {

using Clock = std::chrono::steady_clock;
using Failure = std::optional<std::string>;

std::string label(const SecantInstance& inst) {
  return "(g=" + std::to_string(inst.genus) + ", d=" + std::to_string(inst.degree) +
         ", k=" + std::to_string(inst.order) + ")";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Valid (g, d, k) with g <= max_genus, k <= max_order and
/// 2g+2k+1 <= d <= 2g+2k+1+extra_degree.
std::vector<SecantInstance> grid(std::int64_t max_genus, std::int64_t max_order,
                                 std::int64_t extra_degree) {
  std::vector<SecantInstance> out;
  for (std::int64_t g = 0; g <= max_genus; ++g) {
    for (std::int64_t k = 0; k <= max_order; ++k) {
      const std::int64_t lo = 2 * g + 2 * k + 1;
      for (std::int64_t d = lo; d <= lo + extra_degree; ++d) out.push_back({g, d, k});
    }
  }
  return out;
}

/// Runs `probe` on every instance; fails on the first counterexample.
template <class Probe>
CheckOutcome over(const std::vector<SecantInstance>& instances, Probe probe) {
  for (const auto& inst : instances) {
    if (Failure f = probe(inst)) return {false, label(inst) + ": " + *f};
  }
  return {true, std::to_string(instances.size()) + " instances"};
}

CheckOutcome timed(CheckOutcome outcome, Clock::time_point start, double budget_s) {
  const double elapsed = seconds_since(start);
  if (elapsed >= budget_s) {
    outcome.passed = false;
    outcome.detail += "; took " + std::to_string(elapsed) + " s, budget " +
                      std::to_string(budget_s) + " s";
  }
  return outcome;
}

QPolynomial falling(std::initializer_list<std::int64_t> roots, const Rational& scale) {
  QPolynomial p = QPolynomial::constant(scale);
  for (std::int64_t r : roots) p = p * QPolynomial::linear_factor(Rational(r));
  return p;
}

// ---------------------------------------------------------------------------
// Acceptance criteria

CheckOutcome criterion_riemann_roch() {
  const auto start = Clock::now();
  std::vector<SecantInstance> instances;
  for (std::int64_t g = 0; g <= 10; ++g) {
    for (std::int64_t d = 2 * g + 1; d <= 2 * g + 20; ++d) instances.push_back({g, d, 0});
  }
  auto outcome = over(instances, [](const SecantInstance& inst) -> Failure {
    const QPolynomial expected(std::vector<Rational>{1 - inst.genus, inst.degree});
    const QPolynomial got = hilbert_polynomial(inst);
    if (got == expected) return std::nullopt;
    return "got " + got.to_string() + ", expected " + expected.to_string();
  });
  return timed(outcome, start, 1.0);
}

CheckOutcome compare_four_term(bool negate_a_minus1) {
  const auto start = Clock::now();
  std::size_t total = 0, matched = 0;
  std::string first_mismatch;
  for (std::int64_t g = 0; g <= 6; ++g) {
    for (std::int64_t d = 2 * g + 3; d <= 2 * g + 20; ++d) {
      ++total;
      const QPolynomial got = hilbert_polynomial({g, d, 1});
      const QPolynomial display = four_term_k1(g, d, negate_a_minus1);
      if (got == display) {
        ++matched;
      } else if (first_mismatch.empty()) {
        first_mismatch = "; first mismatch " + label({g, d, 1}) + ": computed " +
                         got.to_string() + ", display " + display.to_string();
      }
    }
  }
  CheckOutcome out{matched == total, std::to_string(matched) + "/" +
                                         std::to_string(total) + " instances match" +
                                         first_mismatch};
  return timed(out, start, 1.0);
}

CheckOutcome criterion_projective_space() {
  std::vector<SecantInstance> instances;
  for (std::int64_t k = 0; k <= 8; ++k) instances.push_back({0, 2 * k + 1, k});
  return over(instances, [](const SecantInstance& inst) -> Failure {
    const QPolynomial expected = binomial_poly(2 * inst.order + 1, 2 * inst.order + 1);
    const QPolynomial got = hilbert_polynomial(inst);
    if (got == expected) return std::nullopt;
    return "got " + got.to_string();
  });
}

CheckOutcome criterion_closed_form_vs_interpolation() {
  const auto start = Clock::now();
  auto outcome = over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    const NodeValues nodes = node_values(inst);
    const QPolynomial closed = closed_form_polynomial(nodes);
    const QPolynomial interp = interpolated_polynomial(nodes);
    if (closed == interp) return std::nullopt;
    return "closed form " + closed.to_string() + " vs interpolant " + interp.to_string();
  });
  return timed(outcome, start, 10.0);
}

CheckOutcome criterion_exactness_identity() {
  return over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    for (std::int64_t l = -inst.order; l <= -1; ++l) {
      Rational sum;
      for (std::int64_t i = 0; i <= inst.order; ++i) {
        const Rational term =
            Rational(binomial(inst.genus, i)) *
            hilbert_polynomial({inst.genus, inst.degree, inst.order - i})(Rational(l));
        sum += (i % 2 == 0) ? term : -term;
      }
      if (!sum.is_zero()) {
        return "alternating sum at l=" + std::to_string(l) + " is " + sum.to_string();
      }
    }
    return std::nullopt;
  });
}

CheckOutcome criterion_catalecticant() {
  const SecantInstance inst{0, 4, 1};
  const std::vector<BigInt> expected_h = {1, 5, 15, 34, 65};
  for (std::int64_t l = 0; l <= 4; ++l) {
    if (hilbert_function(inst, l) != expected_h[l]) {
      return {false, "hilbert_function(" + std::to_string(l) + ") = " +
                         to_string(hilbert_function(inst, l))};
    }
  }
  if (variety_degree(inst) != 3) {
    return {false, "degree " + to_string(variety_degree(inst))};
  }
  if (generator_count(inst) != 1) {
    return {false, "generators " + to_string(generator_count(inst))};
  }
  const QPolynomial q = hilbert_series(inst).numerator;
  if (!(q == QPolynomial(std::vector<Rational>{1, 1, 1}))) {
    return {false, "series numerator " + q.to_string()};
  }
  if (multiplicity_along_stratum(inst, 0) != 2) {
    return {false, "multiplicity along the curve " +
                       to_string(multiplicity_along_stratum(inst, 0))};
  }
  return {true, ""};
}

CheckOutcome criterion_twisted_cubic() {
  const BigInt n = generator_count({0, 3, 0});
  return {n == 3, "generator_count(0,3,0) = " + to_string(n)};
}

CheckOutcome criterion_wedge_collapse() {
  std::size_t count = 0;
  for (std::int64_t g = 0; g <= 4; ++g) {
    for (std::int64_t kplus1 = 1; kplus1 <= 5; ++kplus1) {
      for (std::int64_t dl = std::max<std::int64_t>(2 * g - 1, 0); dl <= 20; ++dl) {
        for (std::int64_t dm = std::max<std::int64_t>(2 * g - 1, 0); dm <= 20; ++dm) {
          const auto L = LineBundleClass::nonspecial(g, dl);
          const auto M = LineBundleClass::nonspecial(g, dm);
          const auto LM = LineBundleClass::nonspecial(g, dl + dm);
          for (std::int64_t i = 0; i <= kplus1; ++i) {
            ++count;
            const BigInt lhs = coh_wedge_E(kplus1, kplus1, L, M, i);
            const BigInt rhs = coh_N(kplus1, LM, i);
            if (lhs != rhs) {
              return {false, "g=" + std::to_string(g) + " k+1=" +
                                 std::to_string(kplus1) + " deg L=" + std::to_string(dl) +
                                 " deg M=" + std::to_string(dm) + " i=" +
                                 std::to_string(i) + ": " + to_string(lhs) +
                                 " != " + to_string(rhs)};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(count) + " entries"};
}

CheckOutcome criterion_kunneth() {
  std::size_t count = 0;
  for (std::int64_t g = 0; g <= 5; ++g) {
    const LineBundleClass O = LineBundleClass::trivial(g);
    for (std::int64_t d = 2 * g + 3; d <= 2 * g + 12; ++d) {
      const LineBundleClass L = LineBundleClass::nonspecial(g, d);
      const std::int64_t hO[2] = {O.h0, O.h1};
      const std::int64_t hL[2] = {L.h0, L.h1};
      for (std::int64_t i = 0; i <= 2; ++i) {
        std::int64_t direct = 0;
        for (std::int64_t p = 0; p <= 1; ++p) {
          const std::int64_t q = i - p;
          if (q >= 0 && q <= 1) direct += hO[p] * hL[q];
        }
        ++count;
        const BigInt got = coh_sym_E({g, d, 1}, 1, i);
        if (got != direct) {
          return {false, label({g, d, 1}) + " i=" + std::to_string(i) + ": " +
                             to_string(got) + " != " + std::to_string(direct)};
        }
      }
    }
  }
  return {true, std::to_string(count) + " entries"};
}

CheckOutcome criterion_series() {
  return over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    const HilbertSeries series = hilbert_series(inst);
    const QPolynomial& q = series.numerator;
    if (!(q(0) == Rational(1))) return "Q(0) = " + q(0).to_string();
    if (!(q(1) == Rational(variety_degree(inst)))) {
      return "Q(1) = " + q(1).to_string() + " but degree is " +
             to_string(variety_degree(inst));
    }
    for (const auto& c : q.coefficients()) {
      if (!c.is_integer() || c.sign() < 0) return "coefficient " + c.to_string();
    }
    const int upto = static_cast<int>(2 * inst.order + 6);
    const auto expansion = expand_series(q, static_cast<int>(series.krull_dim), upto);
    for (int l = 0; l <= upto; ++l) {
      if (expansion[l] != hilbert_function(inst, l)) {
        return "series coefficient " + std::to_string(l) + " is " +
               to_string(expansion[l]);
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// exactmath properties

CheckOutcome pascal_rule() {
  for (std::int64_t n = -50; n <= 50; ++n) {
    for (std::int64_t j = 1; j <= 50; ++j) {
      if (binomial(n, j) != binomial(n - 1, j - 1) + binomial(n - 1, j)) {
        return {false, "n=" + std::to_string(n) + " j=" + std::to_string(j)};
      }
    }
  }
  return {true, ""};
}

CheckOutcome binomial_poly_evaluation() {
  for (std::int64_t shift = -8; shift <= 8; ++shift) {
    for (std::int64_t lower = 0; lower <= 10; ++lower) {
      const QPolynomial p = binomial_poly(shift, lower);
      for (std::int64_t t = -12; t <= 12; ++t) {
        if (!(p(Rational(t)) == Rational(binomial(t + shift, lower)))) {
          return {false, "shift=" + std::to_string(shift) + " lower=" +
                             std::to_string(lower) + " t=" + std::to_string(t)};
        }
      }
    }
  }
  return {true, ""};
}

CheckOutcome interpolation_exactness() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> small(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<Node> nodes;
    std::map<Rational, bool> seen;
    while (static_cast<int>(nodes.size()) < n) {
      const Rational x(BigInt(small(rng)), BigInt(den(rng)));
      if (seen.count(x)) continue;
      seen[x] = true;
      nodes.emplace_back(x, Rational(BigInt(small(rng)), BigInt(den(rng))));
    }
    const QPolynomial p = lagrange_interpolate(nodes);
    if (p.degree() > n - 1) return {false, "degree too large at trial " + std::to_string(trial)};
    for (const auto& [x, y] : nodes) {
      if (!(p(x) == y)) return {false, "node miss at trial " + std::to_string(trial)};
    }
  }
  return {true, "200 random node sets"};
}

CheckOutcome rational_lowest_terms() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  const auto reduced = [](const Rational& r) {
    BigInt g;
    const BigInt num = abs(r.numerator());
    const BigInt den = r.denominator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return den > 0 && (g == 1 || (r.is_zero() && den == 1));
  };
  for (int trial = 0; trial < 2000; ++trial) {
    long da = dist(rng), db = dist(rng);
    if (da == 0) da = 1;
    if (db == 0) db = -1;
    const Rational a(BigInt(dist(rng)), BigInt(da));
    const Rational b(BigInt(dist(rng)), BigInt(db));
    std::vector<Rational> results = {a, b, a + b, a - b, a * b, -a};
    if (!b.is_zero()) results.push_back(a / b);
    for (const auto& r : results) {
      if (!reduced(r)) return {false, r.to_string() + " is not reduced"};
    }
  }
  return {true, "2000 random operand pairs"};
}

CheckOutcome finite_difference_round_trip() {
  return over(grid(3, 4, 6), [](const SecantInstance& inst) -> Failure {
    const int krull = static_cast<int>(inst.krull_dim());
    const int cutoff = krull + 2;
    const auto values = [&inst](std::int64_t n) { return hilbert_function(inst, n); };
    const QPolynomial q = finite_difference_numerator(values, krull, cutoff);
    const auto back = expand_series(q, krull, cutoff);
    for (int l = 0; l <= cutoff; ++l) {
      if (back[l] != values(l)) return "round trip differs at " + std::to_string(l);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// secant_core properties

CheckOutcome node_consistency() {
  return over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    const NodeValues nodes = node_values(inst);
    const QPolynomial chi = hilbert_polynomial(inst);
    for (std::int64_t l = nodes.first_twist(); l <= nodes.last_twist(); ++l) {
      if (!(chi(Rational(l)) == nodes.at(l))) {
        return "chi(" + std::to_string(l) + ") = " + chi(Rational(l)).to_string() +
               " but a_l = " + nodes.at(l).to_string();
      }
    }
    if (!(nodes.at(0) == Rational(1) - Rational(canonical_h0(inst)))) {
      return "a_0 = " + nodes.at(0).to_string() + " but 1 - h0(omega) = " +
             to_string(1 - canonical_h0(inst));
    }
    for (std::int64_t l = 1; l <= inst.order + 1; ++l) {
      if (!(nodes.at(l) == Rational(binomial(inst.degree - inst.genus + l, l)))) {
        return "a_" + std::to_string(l) + " = " + nodes.at(l).to_string();
      }
    }
    return std::nullopt;
  });
}

CheckOutcome degree_positivity() {
  return over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    const QPolynomial chi = hilbert_polynomial(inst);
    if (chi.degree() != inst.dimension()) return "degree " + std::to_string(chi.degree());
    if (chi.leading_coefficient().sign() <= 0) return "nonpositive leading coefficient";
    if (variety_degree(inst) < 1) return "variety degree < 1";
    return std::nullopt;
  });
}

CheckOutcome dual_values_nonnegative() {
  return over(grid(5, 6, 14), [](const SecantInstance& inst) -> Failure {
    const QPolynomial chi = hilbert_polynomial(inst);
    const std::int64_t first = inst.genus >= 1 ? 0 : 1;
    for (std::int64_t l = first; l <= 2 * inst.order + 4; ++l) {
      if (chi(Rational(-l)).sign() > 0) {
        return "chi(" + std::to_string(-l) + ") = " + chi(Rational(-l)).to_string();
      }
    }
    if (inst.genus >= 1 &&
        !(-chi(0) == Rational(canonical_h0(inst)) - Rational(1))) {
      return "-chi(0) != h0(omega) - 1";
    }
    return std::nullopt;
  });
}

CheckOutcome generator_counts_nonnegative() {
  return over(grid(4, 4, 8), [](const SecantInstance& inst) -> Failure {
    if (inst.degree == 2 * inst.genus + 2 * inst.order + 1) {
      try {
        generator_count(inst);
        return "boundary instance did not raise GeneratorDegreeUnknown";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GeneratorDegreeUnknown) throw;
        return std::nullopt;
      }
    }
    if (generator_count(inst) < 0) return "negative generator count";
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// cohomology properties

CheckOutcome sym_E_euler_characteristic() {
  return over(grid(3, 3, 3), [](const SecantInstance& inst) -> Failure {
    const std::int64_t k = inst.order;
    const std::int64_t bound = 2 * k + 1;  // dimension of the secant bundle
    std::vector<BigInt> chi;
    for (std::int64_t l = 1; l <= bound + 2; ++l) {
      BigInt acc = 0;
      for (std::int64_t i = 0; i <= k + 1; ++i) {
        const BigInt h = coh_sym_E(inst, l, i);
        if (i % 2 == 0) {
          acc += h;
        } else {
          acc -= h;
        }
      }
      chi.push_back(acc);
    }
    for (std::size_t level = 0; level < static_cast<std::size_t>(bound + 1); ++level) {
      for (std::size_t j = 0; j + 1 < chi.size() - level; ++j) chi[j] = chi[j + 1] - chi[j];
    }
    if (chi.front() != 0) return "(2k+2)-nd difference is " + to_string(chi.front());
    return std::nullopt;
  });
}

CheckOutcome vanishing_ranges() {
  for (std::int64_t g = 0; g <= 4; ++g) {
    for (std::int64_t deg = -3; deg <= 12; ++deg) {
      const auto lb = LineBundleClass::forced(g, deg);
      if (!lb) continue;
      for (std::int64_t m = 1; m <= 5; ++m) {
        for (std::int64_t i : {std::int64_t{-2}, std::int64_t{-1}, m + 1, m + 2}) {
          if (coh_N(m, *lb, i) != 0 || coh_T(m, *lb, i) != 0) {
            return {false, "N/T nonzero outside [0, m]"};
          }
        }
      }
    }
  }
  auto outcome = over(grid(4, 4, 4), [](const SecantInstance& inst) -> Failure {
    for (std::int64_t l = 1; l <= 4; ++l) {
      if (coh_sym_E(inst, l, inst.order + 1) != 0) return "H^{k+1}(S^l E) != 0";
    }
    return std::nullopt;
  });
  return outcome;
}

CheckOutcome tables_nonnegative_and_deterministic() {
  return over(grid(3, 3, 3), [](const SecantInstance& inst) -> Failure {
    const std::vector<std::int64_t> twists = {1, 2, 3};
    const auto a = sym_E_table(inst, {0, 1, 2, 3});
    const auto b = sym_E_table(inst, {0, 1, 2, 3});
    const auto c = canonical_sym_E_table(inst, twists);
    const auto c2 = canonical_sym_E_table(inst, twists);
    if (!(a == b) || !(c == c2)) return "tables differ between runs";
    for (const auto* t : {&a, &c}) {
      for (const auto& e : t->entries) {
        if (e.dim < 0) return "negative entry";
      }
    }
    return std::nullopt;
  });
}

CheckOutcome sym_E_matches_hilbert_function() {
  return over(grid(4, 4, 6), [](const SecantInstance& inst) -> Failure {
    for (std::int64_t l = 1; l <= 2 * inst.order + 3; ++l) {
      if (coh_sym_E(inst, l, 0) != hilbert_function(inst, l)) {
        return "mismatch at l=" + std::to_string(l);
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// tangent_geometry properties

CheckOutcome tangent_dimensions_and_degrees() {
  return over(grid(4, 5, 5), [](const SecantInstance& inst) -> Failure {
    for (std::int64_t s = 0; s <= inst.order; ++s) {
      const auto cone = tangent_cone_at(inst, s);
      if (cone.is_smooth_point()) continue;
      const std::int64_t base_dim = cone.base->dimension();
      if (base_dim + cone.vertex_proj_dim + 1 != cone.cone_proj_dim ||
          cone.cone_proj_dim != 2 * inst.order) {
        return "dimension bookkeeping fails at s=" + std::to_string(s);
      }
      if (!(cone.series.numerator(1) == Rational(cone.multiplicity))) {
        return "Q(1) != multiplicity at s=" + std::to_string(s);
      }
    }
    return std::nullopt;
  });
}

CheckOutcome smoothness_boundary() {
  return over(grid(4, 5, 5), [](const SecantInstance& inst) -> Failure {
    const bool projective_space = inst.genus == 0 && inst.degree == 2 * inst.order + 1;
    for (std::int64_t s = 0; s <= inst.order; ++s) {
      const bool one = multiplicity_along_stratum(inst, s) == 1;
      if (one != (projective_space || s == inst.order)) {
        return "multiplicity 1 mismatch at s=" + std::to_string(s);
      }
    }
    return std::nullopt;
  });
}

// Observation only: a counterexample goes into the detail.
CheckOutcome multiplicity_monotonicity_probe() {
  const auto instances = grid(4, 5, 5);
  for (const auto& inst : instances) {
    for (std::int64_t s = 0; s < inst.order; ++s) {
      if (multiplicity_along_stratum(inst, s + 1) > multiplicity_along_stratum(inst, s)) {
        return {true, "observation: multiplicity increases from s=" + std::to_string(s) +
                          " at " + label(inst)};
      }
    }
  }
  return {true, "non-increasing in s on " + std::to_string(instances.size()) +
                    " instances (observation)"};
}

CheckOutcome vertex_adjunction() {
  return over(grid(3, 3, 3), [](const SecantInstance& inst) -> Failure {
    const HilbertSeries own = hilbert_series(inst);
    for (std::int64_t m = 0; m <= 4; ++m) {
      const auto cone = cone_over_secant(inst, m);
      if (!(cone.series.numerator == own.numerator) ||
          cone.series.krull_dim != own.krull_dim + m) {
        return "cone series changes with m=" + std::to_string(m);
      }
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// cli properties

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  return {code, out.str()};
}

CheckOutcome json_round_trip() {
  for (const auto& inst : grid(2, 2, 3)) {
    const std::vector<std::string> base = {"--genus", std::to_string(inst.genus),
                                           "--degree", std::to_string(inst.degree),
                                           "--order", std::to_string(inst.order),
                                           "--format", "json"};
    auto with = [&base](const std::string& cmd) {
      std::vector<std::string> args = {cmd};
      args.insert(args.end(), base.begin(), base.end());
      return args;
    };
    const auto hp = run_cli(with("hilbert"));
    if (hp.code != 0 ||
        !(polynomial_from_json(Json::parse(hp.out).at("coefficients")) ==
          hilbert_polynomial(inst))) {
      return {false, "hilbert JSON round trip failed at " + label(inst)};
    }
    const auto hs = run_cli(with("series"));
    if (hs.code != 0 || !(series_from_json(Json::parse(hs.out)) == hilbert_series(inst))) {
      return {false, "series JSON round trip failed at " + label(inst)};
    }
    const auto tb = run_cli(with("coh-sym"));
    if (tb.code != 0) return {false, "coh-sym failed at " + label(inst)};
    std::vector<std::int64_t> twists;
    for (std::int64_t l = 0; l <= inst.order + 1; ++l) twists.push_back(l);
    if (!(table_from_json(Json::parse(tb.out)) == sym_E_table(inst, twists))) {
      return {false, "table JSON round trip failed at " + label(inst)};
    }
  }
  return {true, ""};
}

CheckOutcome csv_json_equivalence() {
  const std::vector<std::vector<std::string>> commands = {
      {"coh-sym", "--genus", "2", "--degree", "9", "--order", "1"},
      {"coh-canonical", "--genus", "1", "--degree", "9", "--order", "2"},
      {"coh-wedge", "--genus", "2", "--degree", "7", "--degree-of-M", "5", "--order", "2"},
      {"coh-line", "--family", "T", "--points", "3", "--genus", "2", "--degree", "2",
       "--h1-of-L", "1"},
  };
  for (auto cmd : commands) {
    auto json_cmd = cmd;
    json_cmd.push_back("--format");
    json_cmd.push_back("json");
    cmd.push_back("--format");
    cmd.push_back("csv");
    const auto j = run_cli(json_cmd);
    const auto c = run_cli(cmd);
    if (j.code != 0 || c.code != 0) return {false, cmd.front() + " failed"};

    std::multiset<std::string> from_json, from_csv;
    const Json doc = Json::parse(j.out);
    for (const auto& e : doc.at("entries")) {
      from_json.insert(std::to_string(e.at("i").get<std::int64_t>()) + "," +
                       (e.at("l").is_null() ? "" : std::to_string(e.at("l").get<std::int64_t>())) +
                       "," + e.at("dim").get<std::string>());
    }
    std::istringstream lines(c.out);
    std::string line;
    std::getline(lines, line);
    if (line != "i,l,dim") return {false, "bad CSV header for " + cmd.front()};
    while (std::getline(lines, line)) from_csv.insert(line);
    if (from_json != from_csv) return {false, cmd.front() + ": CSV and JSON differ"};
  }
  return {true, ""};
}

CheckOutcome output_determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"hilbert", "--genus", "3", "--degree", "14", "--order", "2", "--format", "json"},
      {"tangent-cone", "--genus", "1", "--degree", "11", "--order", "3", "--format", "csv"},
      {"sweep", "--genus", "0:2", "--degree", "3:12", "--order", "0:2", "--invariant",
       "series", "--format", "json"},
      {"coh-wedge", "--genus", "2", "--degree", "9", "--degree-of-M", "6", "--order", "2",
       "--format", "latex"},
  };
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    if (a.code != 0 || a.out != b.out) return {false, cmd.front() + " is not deterministic"};
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Golden values

CheckOutcome golden_values() {
  const auto fail = [](const std::string& what) { return CheckOutcome{false, what}; };
  if (binomial(5, 2) != 10 || binomial(2, 5) != 0 || binomial(-1, 2) != 1) {
    return fail("binomial goldens");
  }
  // a_{-1} = -(gd + g^2 - g) for k = 1.
  const NodeValues n = node_values({2, 9, 1});
  if (!(n.at(-1) == Rational(-20)) || !(n.at(0) == Rational(-2)) ||
      !(n.at(1) == Rational(8)) || !(n.at(2) == Rational(36))) {
    return fail("node values of (2,9,1)");
  }
  if (hilbert_function({2, 9, 1}, 3) != 108) return fail("h(3) of (2,9,1)");
  if (canonical_h0({2, 9, 1}) != 3) return fail("canonical h0 of (2,9,1)");
  // Quintic hypersurface C(t+4,4) - C(t-1,4).
  if (!(hilbert_polynomial({1, 5, 1}) == binomial_poly(4, 4) - binomial_poly(-1, 4))) {
    return fail("elliptic quintic");
  }
  // Complete intersection of two cubics.
  if (!(hilbert_series({1, 6, 1}).numerator ==
        QPolynomial(std::vector<Rational>{1, 2, 3, 2, 1}))) {
    return fail("elliptic sextic");
  }
  if (generator_count({0, 3, 0}) != 3 || generator_count({0, 2, 0}) != 1) {
    return fail("rational normal curve generators");
  }
  if (multiplicity_along_stratum({1, 9, 2}, 0) != variety_degree({1, 7, 1}) ||
      variety_degree({1, 7, 1}) != 14) {
    return fail("multiplicity of (1,9,2) along the curve");
  }
  if (coh_canonical_sym_E({2, 9, 1}, 1, 0) != 20) return fail("canonical h0 twist");
  return {true, ""};
}

}  // namespace

QPolynomial four_term_k1(std::int64_t g, std::int64_t d, bool negate_a_minus1) {
  const Rational a_minus1 = Rational(g * d + g * g - g);
  const Rational first = negate_a_minus1 ? a_minus1 : -a_minus1;
  return falling({0, 1, 2}, first / Rational(6)) +
         falling({-1, 1, 2}, -Rational(g * g + g - 2) / Rational(4)) +
         falling({-1, 0, 2}, -Rational(d - g + 1) / Rational(2)) +
         falling({-1, 0, 1}, Rational((d - g + 2) * (d - g + 1)) / Rational(12));
}

std::vector<Check> acceptance_checks() {
  return {
      {"criterion 1: k=0 Riemann-Roch, g<=10, 2g+1<=d<=2g+20, <1 s",
       criterion_riemann_roch},
      {"criterion 2: k=1 equals the printed four-term display, g<=6, 2g+3<=d<=2g+20, <1 s",
       [] { return compare_four_term(false); }},
      {"criterion 3: Sigma_k of (0, 2k+1) is P^{2k+1}, k<=8", criterion_projective_space},
      {"criterion 4: closed form == interpolation, g<=5, k<=6, d<=2g+2k+15, <10 s",
       criterion_closed_form_vs_interpolation},
      {"criterion 5: alternating-sum exactness identity at negative twists",
       criterion_exactness_identity},
      {"criterion 6: catalecticant battery (0,4,1)", criterion_catalecticant},
      {"criterion 7: twisted cubic has 3 quadrics", criterion_twisted_cubic},
      {"criterion 8: wedge^{k+1} E (x) T(M) collapses to N of L(x)M",
       criterion_wedge_collapse},
      {"criterion 9: Kunneth oracle for E on C_2", criterion_kunneth},
      {"criterion 10: series numerator sanity and expansion", criterion_series},
  };
}

std::vector<Check> catalogue() {
  std::vector<Check> checks = acceptance_checks();
  const std::vector<Check> rest = {
      {"golden values", golden_values},
      {"exactmath: Pascal rule on |n|<=50, j<=50", pascal_rule},
      {"exactmath: binomial_poly evaluates to binomial", binomial_poly_evaluation},
      {"exactmath: interpolation reproduces nodes", interpolation_exactness},
      {"exactmath: rationals stay in lowest terms", rational_lowest_terms},
      {"exactmath: finite-difference numerator round trip", finite_difference_round_trip},
      {"secant_core: node consistency", node_consistency},
      {"secant_core: degree 2k+1 with positive leading coefficient", degree_positivity},
      {"secant_core: -chi(-l) >= 0", dual_values_nonnegative},
      {"secant_core: generator counts", generator_counts_nonnegative},
      {"secant_core: four-term display with a_{-1} = -(gd+g^2-g)",
       [] { return compare_four_term(true); }},
      {"cohomology: Euler characteristic of S^l E has degree <= 2k+1",
       sym_E_euler_characteristic},
      {"cohomology: vanishing ranges", vanishing_ranges},
      {"cohomology: tables nonnegative and deterministic",
       tables_nonnegative_and_deterministic},
      {"cohomology: H^0(S^l E) equals the Hilbert function", sym_E_matches_hilbert_function},
      {"tangent_geometry: dimensions and Q(1) = multiplicity", tangent_dimensions_and_degrees},
      {"tangent_geometry: multiplicity 1 exactly at smooth points", smoothness_boundary},
      {"tangent_geometry: multiplicity monotone in s (probe)",
       multiplicity_monotonicity_probe},
      {"tangent_geometry: vertex adjunction keeps the numerator", vertex_adjunction},
      {"cli: JSON round trip", json_round_trip},
      {"cli: CSV and JSON tables agree", csv_json_equivalence},
      {"cli: byte-identical reruns", output_determinism},
  };
  checks.insert(checks.end(), rest.begin(), rest.end());
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    const auto start = Clock::now();
    CheckResult r{check.name, false, "", 0};
    try {
      const CheckOutcome outcome = check.run();
      r.passed = outcome.passed;
      r.detail = outcome.detail;
    } catch (const Error& e) {
      r.detail = std::string("error[") + std::string(to_string(e.kind())) + "]: " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.millis = seconds_since(start) * 1000.0;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace secant::validation
