#pragma once

// Self-validation catalogue: golden values, the invariant checks of every
// module over their sample grids, and the acceptance criteria.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secant/exactmath.hpp"

namespace secant::validation {

struct CheckOutcome {
  bool passed = true;
  std::string detail;  // first counterexample, or a short summary
};

struct Check {
  std::string name;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0;
};

/// Every check, in report order.
std::vector<Check> catalogue();

/// Only the numbered acceptance criteria 1-10.
std::vector<Check> acceptance_checks();

std::vector<CheckResult> run_checks(const std::vector<Check>& checks);

/// The four-term k = 1 Hilbert polynomial as commonly printed, with node
/// value a_{-1} = gd + g^2 - g. With `negate_a_minus1` the first term takes
/// a_{-1} = -(gd + g^2 - g), which is what the exact sequence forces.
QPolynomial four_term_k1(std::int64_t g, std::int64_t d, bool negate_a_minus1);

}  // namespace secant::validation
