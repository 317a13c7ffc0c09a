#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secant/render.hpp"

namespace secant::cli {

enum class Command {
  Hilbert,
  Series,
  Degree,
  Generators,
  CohSym,
  CohWedge,
  CohCanonical,
  CohLine,
  TangentCone,
  Cone,
  Sweep,
  Validate,
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class SweepInvariant { Hilbert, Series, Degree, Generators, CanonicalH0, Multiplicities };

struct SweepSpec {
  IntRange genus;
  IntRange degree;
  IntRange order;
  SweepInvariant invariant = SweepInvariant::Degree;
};

struct Request {
  Command command = Command::Validate;
  std::int64_t genus = 0;
  std::int64_t degree = 0;
  std::int64_t order = 0;
  std::optional<std::int64_t> stratum;
  std::optional<std::int64_t> twist;
  std::int64_t vertex_count = 0;
  std::int64_t degree_of_M = 0;
  std::int64_t points = 1;
  std::string family = "N";
  std::optional<std::int64_t> h1_of_L;
  std::optional<std::int64_t> h1_of_M;
  std::optional<std::int64_t> h1_of_LM;
  SweepSpec sweep;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
};

/// Thrown for malformed command lines; maps to exit code 2.
struct UsageError {
  std::string message;
  bool help = false;  // --help was requested; message holds the help text
};

/// Parses arguments (without the program name). Throws UsageError.
Request parse_request(const std::vector<std::string>& args);

/// Exit codes: 0 success, 1 validation failure, 2 user error, 3 internal error.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// parse_request + run, with usage errors reported on `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secant::cli
