#include "secant/render.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "secant/error.hpp"

namespace secant {

namespace {

struct Row {
  std::string key;
  std::string value;
  bool polynomial = false;
};

bool is_polynomial_key(std::string_view key) {
  return key == "coefficients" || key == "numerator";
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Flattens to (path, value) rows. With keep_polynomials, polynomial arrays
// stay whole and render through `poly`.
void flatten(const Json& j, const std::string& path, const std::string& key,
             bool keep_polynomials,
             std::string (*poly)(const QPolynomial&), std::vector<Row>& rows) {
  const auto child = [&path](const std::string& k) {
    return path.empty() ? k : path + "." + k;
  };
  if (keep_polynomials && j.is_array() && is_polynomial_key(key)) {
    rows.push_back({path, poly(polynomial_from_json(j)), true});
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, child(k), k, keep_polynomials, poly, rows);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], child(std::to_string(i)), "", keep_polynomials, poly, rows);
    }
  } else {
    rows.push_back({path, scalar_text(j), false});
  }
}

std::string plain_poly(const QPolynomial& p) { return p.to_string(); }
std::string latex_poly(const QPolynomial& p) { return latex(p); }

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

std::string latex_value(const std::string& v) {
  if (v.find('/') != std::string::npos) {
    try {
      return latex(Rational::parse(v));
    } catch (const Error&) {
    }
  }
  return latex_escape(v);
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "latex") return OutputFormat::Latex;
  if (text == "text") return OutputFormat::Text;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON encodings

Json to_json(const Rational& v) { return v.to_string(); }

Json to_json(const QPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

Json to_json(const SecantInstance& inst) {
  return Json{{"genus", inst.genus}, {"degree", inst.degree}, {"order", inst.order}};
}

Json to_json(const HilbertSeries& series) {
  return Json{{"numerator", to_json(series.numerator)},
              {"krull_dim", series.krull_dim}};
}

Json to_json(const CohomologyTable& table) {
  Json params = Json::object();
  for (const auto& [k, v] : table.params) params[k] = v;
  Json entries = Json::array();
  for (const auto& e : table.entries) {
    entries.push_back(Json{{"i", e.i},
                           {"l", e.twist ? Json(*e.twist) : Json(nullptr)},
                           {"dim", to_string(e.dim)}});
  }
  return Json{{"family", std::string(to_string(table.family))},
              {"params", std::move(params)},
              {"entries", std::move(entries)}};
}

Json to_json(const TangentConeDescriptor& cone) {
  return Json{{"ambient", to_json(cone.ambient)},
              {"stratum", cone.stratum},
              {"base", cone.base ? to_json(*cone.base) : Json(nullptr)},
              {"vertex_proj_dim", cone.vertex_proj_dim},
              {"cone_proj_dim", cone.cone_proj_dim},
              {"multiplicity", to_string(cone.multiplicity)},
              {"base_is_fano", cone.base_is_fano},
              {"series", to_json(cone.series)}};
}

Json to_json(const ConeOverSecant& cone) {
  return Json{{"inst", to_json(cone.inst)},
              {"vertex_count", cone.vertex_count},
              {"series", to_json(cone.series)}};
}

QPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Domain, "polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) {
      throw Error(ErrorKind::Domain, "coefficients must be strings");
    }
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  QPolynomial p(coeffs);
  if (p.coefficients().size() != coeffs.size()) {
    throw Error(ErrorKind::Domain, "polynomial has trailing zero coefficients");
  }
  return p;
}

SecantInstance instance_from_json(const Json& j) {
  try {
    return SecantInstance::make(j.at("genus").get<std::int64_t>(),
                                j.at("degree").get<std::int64_t>(),
                                j.at("order").get<std::int64_t>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Domain, std::string("bad instance: ") + e.what());
  }
}

HilbertSeries series_from_json(const Json& j) {
  try {
    return HilbertSeries{polynomial_from_json(j.at("numerator")),
                         j.at("krull_dim").get<std::int64_t>()};
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Domain, std::string("bad series: ") + e.what());
  }
}

CohomologyTable table_from_json(const Json& j) {
  try {
    const auto family = parse_table_family(j.at("family").get<std::string>());
    if (!family) throw Error(ErrorKind::Domain, "unknown table family");
    CohomologyTable table{*family, {}, {}};
    for (const auto& [k, v] : j.at("params").items()) {
      table.params.emplace_back(k, v.get<std::string>());
    }
    for (const auto& e : j.at("entries")) {
      TableEntry entry;
      entry.i = e.at("i").get<std::int64_t>();
      if (!e.at("l").is_null()) entry.twist = e.at("l").get<std::int64_t>();
      entry.dim = parse_bigint(e.at("dim").get<std::string>());
      table.entries.push_back(std::move(entry));
    }
    return table;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Domain, std::string("bad table: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// LaTeX

std::string latex(const Rational& v) {
  if (v.is_integer()) return v.to_string();
  const Rational mag = v.sign() < 0 ? -v : v;
  return std::string(v.sign() < 0 ? "-" : "") + "\\frac{" +
         to_string(mag.numerator()) + "}{" + to_string(mag.denominator()) + "}";
}

std::string latex(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t power = p.coefficients().size(); power-- > 0;) {
    const Rational& c = p.coefficients()[power];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0 || !(mag == Rational(1))) {
      os << latex(mag);
      if (power > 0) os << " ";
    }
    if (power == 1) os << "t";
    if (power > 1) os << "t^{" << power << "}";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Renderers

std::string render(const Json& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return doc.dump(2) + "\n";

    case OutputFormat::Csv: {
      std::vector<Row> rows;
      flatten(doc, "", "", false, plain_poly, rows);
      std::string out = "key,value\n";
      for (const auto& row : rows) {
        out += csv_field(row.key) + "," + csv_field(row.value) + "\n";
      }
      return out;
    }

    case OutputFormat::Text: {
      std::vector<Row> rows;
      flatten(doc, "", "", true, plain_poly, rows);
      if (rows.size() == 1) return rows.front().value + "\n";
      std::string out;
      for (const auto& row : rows) out += row.key + ": " + row.value + "\n";
      return out;
    }

    case OutputFormat::Latex: {
      std::vector<Row> rows;
      flatten(doc, "", "", true, latex_poly, rows);
      const auto cell = [](const Row& row) {
        return row.polynomial ? row.value : latex_value(row.value);
      };
      if (rows.size() == 1) return cell(rows.front()) + "\n";
      std::string out = "\\begin{tabular}{ll}\n";
      for (const auto& row : rows) {
        out += "\\texttt{" + latex_escape(row.key) + "} & $" + cell(row) +
               "$ \\\\\n";
      }
      return out + "\\end{tabular}\n";
    }
  }
  return {};
}

std::string render(const CohomologyTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return to_json(table).dump(2) + "\n";

    case OutputFormat::Csv: {
      std::string out = "i,l,dim\n";
      for (const auto& e : table.entries) {
        out += std::to_string(e.i) + "," +
               (e.twist ? std::to_string(*e.twist) : std::string()) + "," +
               to_string(e.dim) + "\n";
      }
      return out;
    }

    case OutputFormat::Text: {
      std::string out = std::string(to_string(table.family));
      for (const auto& [k, v] : table.params) out += " " + k + "=" + v;
      out += "\n";
      for (const auto& e : table.entries) {
        out += "  i=" + std::to_string(e.i);
        if (e.twist) out += " l=" + std::to_string(*e.twist);
        out += " dim=" + to_string(e.dim) + "\n";
      }
      return out;
    }

    case OutputFormat::Latex: {
      std::string out = "\\begin{tabular}{rrr}\n$i$ & $\\ell$ & $\\dim$ \\\\\n\\hline\n";
      for (const auto& e : table.entries) {
        out += std::to_string(e.i) + " & " +
               (e.twist ? std::to_string(*e.twist) : std::string("--")) + " & " +
               to_string(e.dim) + " \\\\\n";
      }
      return out + "\\end{tabular}\n";
    }
  }
  return {};
}

}  // namespace secant
