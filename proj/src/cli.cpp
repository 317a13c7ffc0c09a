#include "secant/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "secant/error.hpp"
#include "secant/validation.hpp"

namespace secant::cli {

namespace {

IntRange parse_range(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    IntRange r{std::stoll(lo, &used), 0};
    if (used != lo.size()) throw std::invalid_argument(text);
    r.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (r.lo > r.hi) throw std::invalid_argument(text);
    return r;
  } catch (const std::exception&) {
    throw UsageError{flag + " expects an integer or a range a:b with a <= b, got '" +
                     text + "'"};
  }
}

std::optional<SweepInvariant> parse_invariant(const std::string& text) {
  if (text == "hilbert") return SweepInvariant::Hilbert;
  if (text == "series") return SweepInvariant::Series;
  if (text == "degree") return SweepInvariant::Degree;
  if (text == "generators") return SweepInvariant::Generators;
  if (text == "canonical-h0") return SweepInvariant::CanonicalH0;
  if (text == "multiplicities") return SweepInvariant::Multiplicities;
  return std::nullopt;
}

std::vector<std::int64_t> twists_or(const std::optional<std::int64_t>& twist,
                                    std::int64_t lo, std::int64_t hi) {
  if (twist) return {*twist};
  std::vector<std::int64_t> out;
  for (std::int64_t l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

Json sweep_cell(const SecantInstance& inst, SweepInvariant invariant,
                std::ostream& log) {
  Json cell = to_json(inst);
  switch (invariant) {
    case SweepInvariant::Hilbert:
      cell["coefficients"] = to_json(hilbert_polynomial(inst));
      break;
    case SweepInvariant::Series:
      cell["series"] = to_json(hilbert_series(inst));
      break;
    case SweepInvariant::Degree:
      cell["degree_of_variety"] = to_string(variety_degree(inst));
      break;
    case SweepInvariant::CanonicalH0:
      cell["canonical_h0"] = to_string(canonical_h0(inst));
      break;
    case SweepInvariant::Generators:
      try {
        cell["generators"] = to_string(generator_count(inst));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GeneratorDegreeUnknown) throw;
        cell["generators"] = nullptr;
        log << "note: genus " << inst.genus << " degree " << inst.degree
            << " order " << inst.order << ": " << e.what() << "\n";
      }
      break;
    case SweepInvariant::Multiplicities: {
      Json mults = Json::array();
      for (std::int64_t s = 0; s <= inst.order; ++s) {
        mults.push_back(to_string(multiplicity_along_stratum(inst, s)));
      }
      cell["multiplicities"] = std::move(mults);
      break;
    }
  }
  return cell;
}

Json run_sweep(const SweepSpec& spec, std::ostream& err) {
  std::vector<SecantInstance> cells;
  Json skipped = Json::array();
  for (std::int64_t g = spec.genus.lo; g <= spec.genus.hi; ++g) {
    for (std::int64_t d = spec.degree.lo; d <= spec.degree.hi; ++d) {
      for (std::int64_t k = spec.order.lo; k <= spec.order.hi; ++k) {
        const SecantInstance inst{g, d, k};
        try {
          inst.validate();
          cells.push_back(inst);
        } catch (const Error& e) {
          err << "skip: genus " << g << " degree " << d << " order " << k << ": "
              << e.what() << "\n";
          Json s = to_json(inst);
          s["reason"] = e.what();
          skipped.push_back(std::move(s));
        }
      }
    }
  }
  if (cells.empty()) {
    throw Error(ErrorKind::Domain, "sweep grid contains no instance with d >= 2g+2k+1");
  }

  // Cells are independent; results land in grid order whatever finishes first.
  std::vector<Json> results(cells.size());
  std::vector<std::string> logs(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      std::ostringstream log;
      try {
        results[i] = sweep_cell(cells[i], spec.invariant, log);
      } catch (...) {
        failures[i] = std::current_exception();
      }
      logs[i] = log.str();
    }
  };
  const unsigned n_threads = std::clamp<unsigned>(
      std::thread::hardware_concurrency(), 1u,
      static_cast<unsigned>(std::min<std::size_t>(cells.size(), 8)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json out_cells = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    err << logs[i];
    out_cells.push_back(std::move(results[i]));
  }
  static constexpr const char* kNames[] = {"hilbert",      "series",
                                           "degree",       "generators",
                                           "canonical-h0", "multiplicities"};
  return Json{{"invariant", kNames[static_cast<int>(spec.invariant)]},
              {"cells", std::move(out_cells)},
              {"skipped", std::move(skipped)}};
}

int run_validate(const Request& r, std::ostream& out) {
  const auto results = validation::run_checks(validation::catalogue());
  const auto passed = static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto& c) { return c.passed; }));
  const bool ok = passed == results.size();

  std::ostringstream os;
  if (r.format == OutputFormat::Json) {
    Json checks = Json::array();
    for (const auto& c : results) {
      checks.push_back(Json{{"name", c.name},
                            {"passed", c.passed},
                            {"millis", c.millis},
                            {"detail", c.detail}});
    }
    os << Json{{"passed", ok}, {"checks", std::move(checks)}}.dump(2) << "\n";
  } else {
    for (const auto& c : results) {
      char timing[32];
      std::snprintf(timing, sizeof timing, "%.1f ms", c.millis);
      os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << timing << "]";
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
    }
    os << passed << "/" << results.size() << " checks passed\n";
  }

  if (r.out_path) {
    std::ofstream file(*r.out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Domain, "cannot write " + *r.out_path);
    file << os.str();
  } else {
    out << os.str();
  }
  return ok ? 0 : 1;
}

std::string dispatch(const Request& r, std::ostream& err) {
  const auto instance = [&r] {
    return SecantInstance::make(r.genus, r.degree, r.order);
  };

  switch (r.command) {
    case Command::Hilbert: {
      const SecantInstance inst = instance();
      if (r.twist) {
        return render(Json{{"twist", *r.twist},
                           {"value", to_string(hilbert_function(inst, *r.twist))}},
                      r.format);
      }
      return render(Json{{"coefficients", to_json(hilbert_polynomial(inst))}},
                    r.format);
    }
    case Command::Series:
      return render(to_json(hilbert_series(instance())), r.format);
    case Command::Degree:
      return render(Json{{"degree", to_string(variety_degree(instance()))}}, r.format);
    case Command::Generators:
      return render(Json{{"generators", to_string(generator_count(instance()))}},
                    r.format);
    case Command::CohSym: {
      const SecantInstance inst = instance();
      return render(sym_E_table(inst, twists_or(r.twist, 0, inst.order + 1)), r.format);
    }
    case Command::CohWedge: {
      if (r.order < 0) throw Error(ErrorKind::Domain, "order must be nonnegative");
      const std::int64_t kplus1 = r.order + 1;
      const LineBundleClass L = LineBundleClass::resolve(r.genus, r.degree, r.h1_of_L);
      const LineBundleClass M =
          LineBundleClass::resolve(r.genus, r.degree_of_M, r.h1_of_M);
      std::optional<LineBundleClass> LM;
      if (r.h1_of_LM) {
        LM = LineBundleClass::resolve(r.genus, r.degree + r.degree_of_M, r.h1_of_LM);
      }
      return render(wedge_E_table(kplus1, L, M, LM, twists_or(r.twist, 1, kplus1)),
                    r.format);
    }
    case Command::CohCanonical: {
      const SecantInstance inst = instance();
      return render(canonical_sym_E_table(inst, twists_or(r.twist, 1, inst.order + 2)),
                    r.format);
    }
    case Command::CohLine: {
      const auto family = parse_table_family(r.family);
      if (!family || (*family != TableFamily::N && *family != TableFamily::T)) {
        throw Error(ErrorKind::Domain, "--family must be N or T");
      }
      const LineBundleClass lb = LineBundleClass::resolve(r.genus, r.degree, r.h1_of_L);
      return render(line_bundle_table(*family, r.points, lb), r.format);
    }
    case Command::TangentCone: {
      const SecantInstance inst = instance();
      if (r.stratum) return render(to_json(tangent_cone_at(inst, *r.stratum)), r.format);
      Json all = Json::array();
      for (std::int64_t s = 0; s <= inst.order; ++s) {
        all.push_back(to_json(tangent_cone_at(inst, s)));
      }
      return render(all, r.format);
    }
    case Command::Cone:
      return render(to_json(cone_over_secant(instance(), r.vertex_count)), r.format);
    case Command::Sweep:
      return render(run_sweep(r.sweep, err), r.format);
    case Command::Validate:
      break;
  }
  return {};
}

}  // namespace

Request parse_request(const std::vector<std::string>& args) {
  Request r;
  CLI::App app{"Exact invariants of secant varieties of curves", "secant"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string sweep_genus, sweep_degree, sweep_order, sweep_invariant = "degree";

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv, latex or text")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    sub->add_option("--out", r.out_path, "write the result to this file");
  };
  const auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--genus", r.genus, "genus g of the curve")->required();
    sub->add_option("--degree", r.degree, "degree d of the embedding line bundle")
        ->required();
    sub->add_option("--order", r.order, "secant order k")->required();
    add_output(sub);
  };

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"hilbert", Command::Hilbert, "Hilbert polynomial, or h^0(O(twist)) with --twist"},
      {"series", Command::Series, "Hilbert series numerator"},
      {"degree", Command::Degree, "degree of the secant variety"},
      {"generators", Command::Generators, "number of minimal generators of the ideal"},
      {"coh-sym", Command::CohSym, "cohomology of symmetric powers of the secant sheaf"},
      {"coh-wedge", Command::CohWedge, "cohomology of exterior powers twisted by T(M)"},
      {"coh-canonical", Command::CohCanonical, "canonical-twisted symmetric powers"},
      {"coh-line", Command::CohLine, "cohomology of N_{m,L} or T_m(L)"},
      {"tangent-cone", Command::TangentCone, "tangent cone along singular strata"},
      {"cone", Command::Cone, "Hilbert series of a cone over the secant variety"},
      {"sweep", Command::Sweep, "evaluate an invariant over a grid"},
      {"validate", Command::Validate, "run the self-validation catalogue"},
  };

  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->callback([&r, cmd = e.command] { r.command = cmd; });
    switch (e.command) {
      case Command::Hilbert:
      case Command::CohSym:
      case Command::CohCanonical:
        add_instance(sub);
        sub->add_option("--twist", r.twist, "twist l");
        break;
      case Command::Series:
      case Command::Degree:
      case Command::Generators:
        add_instance(sub);
        break;
      case Command::TangentCone:
        add_instance(sub);
        sub->add_option("--stratum", r.stratum, "stratum s (default: all)");
        break;
      case Command::Cone:
        add_instance(sub);
        sub->add_option("--vertex-count", r.vertex_count, "m, vertex is P^{m-1}");
        break;
      case Command::CohWedge:
        sub->add_option("--genus", r.genus, "genus g of the curve")->required();
        sub->add_option("--degree", r.degree, "degree of L")->required();
        sub->add_option("--order", r.order, "k, so the symmetric product is C_{k+1}")
            ->required();
        sub->add_option("--degree-of-M", r.degree_of_M, "degree of M (default 0)");
        sub->add_option("--twist", r.twist, "exterior power l in [1, k+1]");
        sub->add_option("--h1-of-L", r.h1_of_L, "h^1(L) for special L");
        sub->add_option("--h1-of-M", r.h1_of_M, "h^1(M) for special M");
        sub->add_option("--h1-of-LM", r.h1_of_LM, "h^1(L(x)M) for special L(x)M");
        add_output(sub);
        break;
      case Command::CohLine:
        sub->add_option("--family", r.family, "N or T")->required();
        sub->add_option("--points", r.points, "m, the symmetric product C_m")->required();
        sub->add_option("--genus", r.genus, "genus g of the curve")->required();
        sub->add_option("--degree", r.degree, "degree of L")->required();
        sub->add_option("--h1-of-L", r.h1_of_L, "h^1(L) for special L");
        add_output(sub);
        break;
      case Command::Sweep:
        sub->add_option("--genus", sweep_genus, "g or g0:g1")->required();
        sub->add_option("--degree", sweep_degree, "d or d0:d1")->required();
        sub->add_option("--order", sweep_order, "k or k0:k1")->required();
        sub->add_option("--invariant", sweep_invariant,
                        "hilbert, series, degree, generators, canonical-h0, "
                        "multiplicities");
        add_output(sub);
        break;
      case Command::Validate:
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", r.out_path, "write the report to this file");
        break;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError{app.help(), true};
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError{app.help("", CLI::AppFormatMode::All), true};
  } catch (const CLI::ParseError& e) {
    throw UsageError{e.what()};
  }

  r.format = *parse_format(format);
  if (r.command == Command::Sweep) {
    r.sweep.genus = parse_range(sweep_genus, "--genus");
    r.sweep.degree = parse_range(sweep_degree, "--degree");
    r.sweep.order = parse_range(sweep_order, "--order");
    const auto inv = parse_invariant(sweep_invariant);
    if (!inv) throw UsageError{"unknown --invariant '" + sweep_invariant + "'"};
    r.sweep.invariant = *inv;
  }
  return r;
}

int run(const Request& request, std::ostream& out, std::ostream& err) {
  try {
    if (request.command == Command::Validate) return run_validate(request, out);
    const std::string doc = dispatch(request, err);
    if (request.out_path) {
      std::ofstream file(*request.out_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::Domain, "cannot write " + *request.out_path);
      file << doc;
    } else {
      out << doc;
    }
    return 0;
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return is_internal(e.kind()) ? 3 : 2;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request request;
  try {
    request = parse_request(args);
  } catch (const UsageError& e) {
    if (e.help) {
      out << e.message;
      return 0;
    }
    err << "error[UsageError]: " << e.message << "\n";
    return 2;
  }
  return run(request, out, err);
}

}  // namespace secant::cli
