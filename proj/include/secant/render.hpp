#pragma once

// JSON encodings of every result type, and the text/CSV/LaTeX renderers
// used by the command-line tool. All numbers leave as exact strings.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "secant/cohomology.hpp"
#include "secant/exactmath.hpp"
#include "secant/secant_core.hpp"
#include "secant/tangent_geometry.hpp"

namespace secant {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Latex, Text };

std::optional<OutputFormat> parse_format(std::string_view text);

Json to_json(const Rational& v);
Json to_json(const QPolynomial& p);
Json to_json(const SecantInstance& inst);
Json to_json(const HilbertSeries& series);
Json to_json(const CohomologyTable& table);
Json to_json(const TangentConeDescriptor& cone);
Json to_json(const ConeOverSecant& cone);

QPolynomial polynomial_from_json(const Json& j);
SecantInstance instance_from_json(const Json& j);
HilbertSeries series_from_json(const Json& j);
CohomologyTable table_from_json(const Json& j);

/// LaTeX for a rational: integers plain, otherwise \frac{p}{q} with the sign outside.
std::string latex(const Rational& v);
std::string latex(const QPolynomial& p);

/// Generic rendering of a result document. Arrays stored under
/// "coefficients" or "numerator" are treated as polynomials by the text and
/// LaTeX renderers; CSV flattens to (key, value) rows.
std::string render(const Json& doc, OutputFormat format);

/// Tables get dedicated layouts: CSV columns (i, l, dim), a LaTeX tabular.
std::string render(const CohomologyTable& table, OutputFormat format);

}  // namespace secant
