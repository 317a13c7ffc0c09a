#include "secant/cohomology.hpp"

#include <string>

#include "secant/error.hpp"

namespace secant {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string describe(const LineBundleClass& lb) {
  return "(genus " + str(lb.genus) + ", degree " + str(lb.degree) + ", h0 " +
         str(lb.h0) + ", h1 " + str(lb.h1) + ")";
}

std::vector<std::pair<std::string, std::string>> bundle_params(
    const std::string& prefix, const LineBundleClass& lb) {
  return {{prefix + "degree", str(lb.degree)},
          {prefix + "h0", str(lb.h0)},
          {prefix + "h1", str(lb.h1)}};
}

std::vector<std::pair<std::string, std::string>> instance_params(
    const SecantInstance& inst) {
  return {{"genus", str(inst.genus)},
          {"degree", str(inst.degree)},
          {"order", str(inst.order)}};
}

LineBundleClass product_class(const LineBundleClass& L, const LineBundleClass& M,
                              const std::optional<LineBundleClass>& product) {
  if (L.genus != M.genus) {
    throw Error(ErrorKind::Domain, "L and M live on curves of different genus");
  }
  const std::int64_t degree = L.degree + M.degree;
  if (product) {
    product->validate();
    if (product->genus != L.genus || product->degree != degree) {
      throw Error(ErrorKind::Domain,
                  "class of L(x)M " + describe(*product) +
                      " does not have genus " + str(L.genus) + " and degree " +
                      str(degree));
    }
    return *product;
  }
  if (auto forced = LineBundleClass::forced(L.genus, degree)) return *forced;
  throw Error(ErrorKind::AmbiguousBundle,
              "h1 of L(x)M (degree " + str(degree) +
                  ") is not determined by its degree; supply it explicitly");
}

}  // namespace

// ---------------------------------------------------------------------------
// LineBundleClass

LineBundleClass LineBundleClass::make(std::int64_t genus, std::int64_t degree,
                                      std::int64_t h0, std::int64_t h1) {
  LineBundleClass lb{genus, degree, h0, h1};
  lb.validate();
  return lb;
}

void LineBundleClass::validate() const {
  if (genus < 0 || h0 < 0 || h1 < 0) {
    throw Error(ErrorKind::Domain, "negative entry in line bundle " + describe(*this));
  }
  if (h0 - h1 != degree - genus + 1) {
    throw Error(ErrorKind::Domain,
                "line bundle " + describe(*this) + " violates Riemann-Roch");
  }
  if (degree < 0 && h0 != 0) {
    throw Error(ErrorKind::Domain,
                "negative-degree line bundle " + describe(*this) + " has sections");
  }
  if (degree > 2 * genus - 2 && h1 != 0) {
    throw Error(ErrorKind::Domain,
                "line bundle " + describe(*this) + " of degree > 2g-2 has h1 != 0");
  }
}

LineBundleClass LineBundleClass::canonical(std::int64_t genus) {
  return make(genus, 2 * genus - 2, genus, 1);
}

LineBundleClass LineBundleClass::trivial(std::int64_t genus) {
  return make(genus, 0, 1, genus);
}

LineBundleClass LineBundleClass::nonspecial(std::int64_t genus,
                                            std::int64_t degree) {
  if (degree <= 2 * genus - 2) {
    throw Error(ErrorKind::Domain,
                "degree " + str(degree) + " <= 2g-2 is not forced nonspecial");
  }
  return make(genus, degree, degree - genus + 1, 0);
}

std::optional<LineBundleClass> LineBundleClass::forced(std::int64_t genus,
                                                       std::int64_t degree) {
  if (genus < 0) throw Error(ErrorKind::Domain, "negative genus");
  if (degree < 0) return make(genus, degree, 0, genus - 1 - degree);
  if (degree > 2 * genus - 2) return make(genus, degree, degree - genus + 1, 0);
  return std::nullopt;
}

LineBundleClass LineBundleClass::resolve(std::int64_t genus, std::int64_t degree,
                                         std::optional<std::int64_t> h1) {
  if (auto lb = forced(genus, degree)) {
    if (h1 && *h1 != lb->h1) {
      throw Error(ErrorKind::Domain,
                  "h1 = " + str(*h1) + " contradicts the forced value " +
                      str(lb->h1) + " in degree " + str(degree));
    }
    return *lb;
  }
  if (!h1) {
    throw Error(ErrorKind::AmbiguousBundle,
                "degree " + str(degree) + " lies in the special range [0, 2g-2]; "
                "h1 must be supplied");
  }
  return make(genus, degree, *h1 + degree - genus + 1, *h1);
}

// ---------------------------------------------------------------------------
// Dimensions

BigInt sym_dim(std::int64_t n, std::int64_t j) {
  if (j < 0) return 0;
  return binomial(n + j - 1, j);
}

BigInt wedge_dim(std::int64_t n, std::int64_t j) {
  if (j < 0) return 0;
  return binomial(n, j);
}

BigInt coh_N(std::int64_t m, const LineBundleClass& lb, std::int64_t i) {
  if (i < 0 || i > m) return 0;
  return wedge_dim(lb.h0, m - i) * sym_dim(lb.h1, i);
}

BigInt coh_T(std::int64_t m, const LineBundleClass& lb, std::int64_t i) {
  if (i < 0 || i > m) return 0;
  return sym_dim(lb.h0, m - i) * wedge_dim(lb.h1, i);
}

BigInt coh_sym_E(const SecantInstance& inst, std::int64_t twist, std::int64_t i) {
  inst.validate();
  if (twist < 0) {
    throw Error(ErrorKind::Domain, "symmetric power " + str(twist) + " is negative");
  }
  const std::int64_t k = inst.order;
  if (i < 0 || i > k + 1) return 0;
  if (twist == 0) return binomial(inst.genus, i);
  if (i == k + 1) return 0;
  return binomial(inst.genus, i) *
         hilbert_function(SecantInstance{inst.genus, inst.degree, k - i}, twist);
}

std::vector<DirectImageRank> higher_direct_image_ranks(const SecantInstance& inst) {
  inst.validate();
  std::vector<DirectImageRank> out;
  for (std::int64_t i = 0; i <= inst.order; ++i) {
    BigInt mult = binomial(inst.genus, i);
    if (mult == 0) continue;
    out.push_back({i, std::move(mult), inst.order - i});
  }
  return out;
}

BigInt coh_wedge_E(std::int64_t kplus1, std::int64_t twist,
                   const LineBundleClass& L, const LineBundleClass& M,
                   std::int64_t i, const std::optional<LineBundleClass>& product) {
  if (kplus1 < 1) throw Error(ErrorKind::Domain, "k+1 must be positive");
  if (twist < 1 || twist > kplus1) {
    throw Error(ErrorKind::Domain, "exterior power " + str(twist) +
                                       " outside [1, " + str(kplus1) + "]");
  }
  L.validate();
  M.validate();
  const LineBundleClass LM = product_class(L, M, product);
  if (i < 0 || i > kplus1) return 0;

  BigInt total = 0;
  for (std::int64_t p = 0; p <= i; ++p) {
    const std::int64_t q = i - p;
    total += sym_dim(M.h0, kplus1 - twist - p) * sym_dim(LM.h1, q) *
             wedge_dim(M.h1, p) * wedge_dim(LM.h0, twist - q);
  }
  return total;
}

BigInt coh_canonical_sym_E(const SecantInstance& inst, std::int64_t twist,
                           std::int64_t i) {
  inst.validate();
  if (twist <= 0) {
    throw Error(ErrorKind::Domain,
                "canonical-twisted table needs a positive twist, got " + str(twist));
  }
  std::int64_t order = 0;
  if (i == 0) {
    order = inst.order;
  } else if (i == 1 && inst.order >= 1) {
    order = inst.order - 1;
  } else {
    return 0;
  }
  const Rational chi =
      hilbert_polynomial(SecantInstance{inst.genus, inst.degree, order})(
          Rational(-twist));
  const Rational dim = -chi;
  if (!dim.is_integer() || dim.sign() < 0) {
    throw Error(ErrorKind::InternalMismatch,
                "-chi(" + str(-twist) + ") = " + dim.to_string() +
                    " is not a dimension");
  }
  return dim.numerator();
}

// ---------------------------------------------------------------------------
// Tables

std::string_view to_string(TableFamily family) {
  switch (family) {
    case TableFamily::N: return "N";
    case TableFamily::T: return "T";
    case TableFamily::SymE: return "SymE";
    case TableFamily::WedgeE: return "WedgeE";
    case TableFamily::CanonicalSymE: return "CanonicalSymE";
  }
  return "?";
}

std::optional<TableFamily> parse_table_family(std::string_view text) {
  for (TableFamily f : {TableFamily::N, TableFamily::T, TableFamily::SymE,
                        TableFamily::WedgeE, TableFamily::CanonicalSymE}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

CohomologyTable line_bundle_table(TableFamily family, std::int64_t m,
                                  const LineBundleClass& lb) {
  if (family != TableFamily::N && family != TableFamily::T) {
    throw Error(ErrorKind::Domain, "line bundle tables are N or T");
  }
  if (m < 1) throw Error(ErrorKind::Domain, "symmetric product order must be positive");
  lb.validate();
  CohomologyTable table{family, {{"m", str(m)}, {"genus", str(lb.genus)}}, {}};
  for (auto& kv : bundle_params("", lb)) table.params.push_back(std::move(kv));
  for (std::int64_t i = 0; i <= m; ++i) {
    table.entries.push_back(
        {i, std::nullopt, family == TableFamily::N ? coh_N(m, lb, i) : coh_T(m, lb, i)});
  }
  return table;
}

CohomologyTable sym_E_table(const SecantInstance& inst,
                            const std::vector<std::int64_t>& twists) {
  CohomologyTable table{TableFamily::SymE, instance_params(inst), {}};
  for (std::int64_t l : twists) {
    for (std::int64_t i = 0; i <= inst.order + 1; ++i) {
      table.entries.push_back({i, l, coh_sym_E(inst, l, i)});
    }
  }
  return table;
}

CohomologyTable wedge_E_table(std::int64_t kplus1, const LineBundleClass& L,
                              const LineBundleClass& M,
                              const std::optional<LineBundleClass>& product,
                              const std::vector<std::int64_t>& twists) {
  const LineBundleClass LM = product_class(L, M, product);
  CohomologyTable table{TableFamily::WedgeE,
                        {{"kplus1", str(kplus1)}, {"genus", str(L.genus)}},
                        {}};
  for (auto& kv : bundle_params("L.", L)) table.params.push_back(std::move(kv));
  for (auto& kv : bundle_params("M.", M)) table.params.push_back(std::move(kv));
  for (auto& kv : bundle_params("LM.", LM)) table.params.push_back(std::move(kv));
  for (std::int64_t l : twists) {
    for (std::int64_t i = 0; i <= kplus1; ++i) {
      table.entries.push_back({i, l, coh_wedge_E(kplus1, l, L, M, i, LM)});
    }
  }
  return table;
}

CohomologyTable canonical_sym_E_table(const SecantInstance& inst,
                                      const std::vector<std::int64_t>& twists) {
  CohomologyTable table{TableFamily::CanonicalSymE, instance_params(inst), {}};
  for (std::int64_t l : twists) {
    for (std::int64_t i = 0; i <= inst.order + 1; ++i) {
      table.entries.push_back({i, l, coh_canonical_sym_E(inst, l, i)});
    }
  }
  return table;
}

}  // namespace secant
