#include "wschub_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wschub/error.hpp"
#include "wschub/positivity.hpp"
#include "wschub/projective.hpp"
#include "wschub/weighted.hpp"

namespace wschub::cli {

namespace {

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError(std::string("malformed ") + what + " list '" + text + "'");
    }
  }
  if (out.empty()) throw DomainError(std::string("empty ") + what + " list");
  return out;
}

std::string space_label(const Space& s) {
  return "wGr(" + std::to_string(s.d) + "," + std::to_string(s.n) + ") " + s.weight_system().to_string();
}

/// Writes to --output when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string symbolic_total(const IndexSet& v) { return "w_{" + v.to_string() + "}"; }

std::string symbolic_diagonal(const IndexSet& lambda) {
  const auto inv = inversions(lambda);
  if (inv.empty()) return "1";
  std::string out;
  for (const Inversion& i : inv) {
    const IndexSet moved = apply_inversion(lambda, i);
    out += "(Yw_{" + moved.to_string() + "} - (" + symbolic_total(moved) + "/" + symbolic_total(lambda) + ")*Yw_{" +
           lambda.to_string() + "})";
  }
  return out;
}

void print_basis_text(std::ostream& os, const SchubertBasis& basis, const std::string& title, bool symbolic) {
  const MomentGraph& graph = *basis.graph;
  os << title << "\n";
  for (std::size_t lam = 0; lam < graph.size(); ++lam) {
    os << "class {" << graph.vertex(lam).to_string() << "}\n";
    for (std::size_t mu = 0; mu < graph.size(); ++mu) {
      os << "  {" << graph.vertex(mu).to_string() << "}: ";
      if (symbolic && lam == mu && basis.flavor == Flavor::kWeighted) {
        os << symbolic_diagonal(graph.vertex(lam));
      } else {
        os << basis.classes[lam].value(mu).to_string();
      }
      os << "\n";
    }
  }
}


// ---------------------------------------------------------------------------

int cmd_basis(const Space& s, std::size_t cap, bool with_ordinary, bool json, bool symbolic, const std::string& path,
              std::ostream& out) {
  const WeightSystem ws = s.weight_system();
  const OrdinaryBasis ordinary = build_ordinary_basis(s.n, s.d, cap);
  const WeightedBasis pieri = build_weighted_basis(s.n, s.d, ws, Route::kPieri, nullptr, cap);
  const WeightedBasis substituted = build_weighted_basis(s.n, s.d, ws, Route::kSubstitution, &ordinary, cap);
  for (std::size_t i = 0; i < pieri.classes.size(); ++i) {
    if (!(pieri.classes[i] == substituted.classes[i])) {
      throw RouteMismatch("substitution and Pieri routes disagree on class {" + pieri.graph->vertex(i).to_string() +
                          "}");
    }
  }
  Sink sink(path, out);
  if (json) {
    Json doc = basis_to_json(s, pieri);
    if (with_ordinary) {
      Json ord = basis_to_json(s, ordinary);
      doc["ordinary"] = Json{{"flavor", ord["flavor"]}, {"classes", ord["classes"]}};
    }
    *sink << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (symbolic) {
    *sink << "totals\n";
    for (const IndexSet& v : pieri.graph->vertices()) {
      *sink << "  " << symbolic_total(v) << " = " << ws.total(v).get_str() << "\n";
    }
  }
  print_basis_text(*sink, pieri, "weighted basis of " + space_label(s), symbolic);
  if (with_ordinary) print_basis_text(*sink, ordinary, "ordinary basis of Gr(" + std::to_string(s.d) + "," +
                                                       std::to_string(s.n) + ")", false);
  return kExitOk;
}

int cmd_constants(const Space& s, const ConstantsOptions& options, bool check_positivity, bool json,
                  const std::string& path, std::ostream& out, std::ostream& err) {
  const auto entries = compute_constants(s, options);
  Sink sink(path, out);
  if (json) {
    *sink << constants_to_json(s, entries).dump(2) << "\n";
  } else {
    *sink << "structure constants of " << space_label(s) << "\n";
    for (const ConstantEntry& e : entries) {
      *sink << "c[{" << e.lambda << "},{" << e.mu << "}]^{" << e.nu << "} = " << e.value.to_string() << "\n";
      *sink << "  wu: ";
      bool first = true;
      for (const auto& [key, c] : e.wu_expansion) {
        if (!first) *sink << " + ";
        first = false;
        if (key == "1") {
          *sink << c.get_str();
        } else {
          *sink << (c == 1 ? std::string() : "(" + c.get_str() + ")*") << key;
        }
      }
      *sink << "\n  nonneg: " << (e.nonneg ? "true" : "false") << "\n";
    }
  }
  if (!check_positivity) return kExitOk;
  if (!s.weight_system().is_non_decreasing()) {
    err << "note: weights are not non-decreasing; positivity is not guaranteed and was not enforced\n";
    return kExitOk;
  }
  int failures = 0;
  for (const ConstantEntry& e : entries) {
    if (!e.nonneg) {
      err << "positivity failure: c[{" << e.lambda << "},{" << e.mu << "}]^{" << e.nu << "}\n";
      ++failures;
    }
  }
  return failures ? kExitVerificationFailed : kExitOk;
}

int cmd_check(const Space& s, const CheckOptions& options, bool json, const std::string& path, std::ostream& out) {
  const auto results = run_checks(s, options);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  Sink sink(path, out);
  if (json) {
    Json suites = Json::array();
    for (const auto& r : results) suites.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    *sink << Json{{"space", space_to_json(s)}, {"suites", suites}, {"passed", all}}.dump(2) << "\n";
  } else {
    *sink << "checks for " << space_label(s) << "\n";
    for (const auto& r : results) {
      *sink << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) *sink << ": " << r.detail;
      *sink << "\n";
    }
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_kawasaki(const std::vector<long>& b, bool json, const std::string& path, std::ostream& out) {
  const KawasakiFactors k = kawasaki_factors(b);
  Sink sink(path, out);
  if (json) {
    std::vector<std::string> l, m;
    for (const auto& v : k.l) l.push_back(v.get_str());
    for (const auto& v : k.multiples) m.push_back(rational_to_string(v));
    *sink << Json{{"b", b}, {"l", l}, {"multiples", m}}.dump(2) << "\n";
    return kExitOk;
  }
  *sink << "k  l_k  multiple\n";
  for (std::size_t i = 0; i < k.l.size(); ++i) {
    *sink << (i + 1) << "  " << k.l[i].get_str() << "  " << k.multiples[i].get_str() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Verification suites

std::string vertex_triple(const MomentGraph& g, std::size_t a, std::size_t b, std::size_t c) {
  return "({" + g.vertex(a).to_string() + "},{" + g.vertex(b).to_string() + "},{" + g.vertex(c).to_string() + "})";
}

SuiteResult gkm_membership(const std::vector<const SchubertBasis*>& bases) {
  SuiteResult r{"gkm-membership", true, ""};
  std::size_t violations = 0;
  for (const SchubertBasis* basis : bases) {
    for (const auto& cls : basis->classes) violations += check_gkm(cls).size();
  }
  if (violations) {
    r.passed = false;
    r.detail = std::to_string(violations) + " edge violations";
  }
  return r;
}

SuiteResult upper_triangularity(const WeightedBasis& basis) {
  SuiteResult r{"upper-triangularity", true, ""};
  const MomentGraph& g = *basis.graph;
  const WeightSystem& ws = *basis.weights;
  for (std::size_t lam = 0; lam < g.size() && r.passed; ++lam) {
    for (std::size_t mu = 0; mu < g.size(); ++mu) {
      const Polynomial& v = basis.classes[lam].value(mu);
      if (!g.leq(lam, mu) && !v.is_zero()) {
        r.passed = false;
        r.detail = "class {" + g.vertex(lam).to_string() + "} is nonzero at {" + g.vertex(mu).to_string() + "}";
        break;
      }
    }
    if (r.passed && !(basis.classes[lam].value(lam) == weighted_diagonal_restriction(g.vertex(lam), ws))) {
      r.passed = false;
      r.detail = "diagonal of {" + g.vertex(lam).to_string() + "} is not the product of its inversion forms";
    }
  }
  return r;
}

SuiteResult restriction_routes(const WeightedBasis& a, const WeightedBasis& b) {
  SuiteResult r{"restriction-routes", true, ""};
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (!(a.classes[i] == b.classes[i])) {
      r.passed = false;
      r.detail = "class {" + a.graph->vertex(i).to_string() + "} differs";
      break;
    }
  }
  return r;
}

SuiteResult constant_routes(const ConstantTable& gkm, const ConstantTable& formula) {
  SuiteResult r{"constant-routes", true, ""};
  const MomentGraph& g = *gkm.graph();
  std::size_t bad = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (gkm.at(a, b, c) == formula.at(a, b, c)) continue;
        if (bad++ == 0) r.detail = "first difference at " + vertex_triple(g, a, b, c);
      }
    }
  }
  if (bad) {
    r.passed = false;
    r.detail = std::to_string(bad) + " entries differ, " + r.detail;
  }
  return r;
}

SuiteResult pieri_suite(const WeightedBasis& basis) {
  SuiteResult r{"pieri", true, ""};
  const MomentGraph& g = *basis.graph;
  const WeightSystem& ws = *basis.weights;
  const RestrictionVector& divisor = basis.classes[g.div()];
  for (std::size_t lam = 0; lam < g.size() && r.passed; ++lam) {
    const PieriExpansion rule = weighted_pieri(g.vertex(lam), ws);
    const RestrictionVector product = pointwise_multiply(divisor, basis.classes[lam]);
    for (std::size_t mu = 0; mu < g.size(); ++mu) {
      Polynomial assembled = rule.self * basis.classes[lam].value(mu);
      for (const auto& [cover, coeff] : rule.covers) assembled += basis[cover].value(mu) * coeff;
      if (!(assembled == product.value(mu))) {
        r.passed = false;
        r.detail = "div * {" + g.vertex(lam).to_string() + "} fails at {" + g.vertex(mu).to_string() + "}";
        break;
      }
    }
  }
  return r;
}

SuiteResult kostka_suite(const WeightedBasis& basis, int max_r) {
  SuiteResult r{"kostka", true, ""};
  const MomentGraph& g = *basis.graph;
  KostkaTable table(basis.graph, *basis.weights);
  const RestrictionVector& divisor = basis.classes[g.div()];
  for (std::size_t eta = 0; eta < g.size() && r.passed; ++eta) {
    RestrictionVector power = basis.classes[eta];
    for (int k = 0; k <= max_r && r.passed; ++k) {
      if (k > 0) power = pointwise_multiply(divisor, power);
      const auto coeffs = expand_in_schubert_basis(power, basis);
      for (std::size_t nu = 0; nu < g.size(); ++nu) {
        if (!(coeffs[nu] == table(k, eta, nu))) {
          r.passed = false;
          r.detail = "r=" + std::to_string(k) + " eta={" + g.vertex(eta).to_string() + "} nu={" +
                     g.vertex(nu).to_string() + "}";
          break;
        }
      }
    }
  }
  return r;
}

SuiteResult recursive_identity(const ConstantTable& table, const WeightSystem& ws) {
  SuiteResult r{"recursive-identity", true, ""};
  const MomentGraph& g = *table.graph();
  std::size_t bad = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (recursive_identity_residual(a, b, c, ws, table).is_zero()) continue;
        if (bad++ == 0) r.detail = "first nonzero residual at " + vertex_triple(g, a, b, c);
      }
    }
  }
  if (bad) {
    r.passed = false;
    r.detail = std::to_string(bad) + " nonzero residuals, " + r.detail;
  }
  return r;
}

SuiteResult translation_suite(const WeightedBasis& basis) {
  SuiteResult r{"translation-formula", true, ""};
  const auto failures = translation_formula_failures(basis);
  if (!failures.empty()) {
    r.passed = false;
    r.detail = "fails for y_" + std::to_string(failures.front());
  }
  return r;
}

SuiteResult specialization(const ConstantTable& table, ConstantsFormula& formula, const OrdinaryBasis& ordinary) {
  SuiteResult r{"specialization", true, ""};
  const MomentGraph& g = *table.graph();
  const WeightSystem& ws = formula.weights();
  const bool trivial = ws.is_trivial();
  const auto ctx = weighted_context(g.n());
  for (std::size_t a = 0; a < g.size() && r.passed; ++a) {
    for (std::size_t b = 0; b < g.size() && r.passed; ++b) {
      const auto chain = nonequivariant_constants_chain(a, b, formula);
      const auto limit = nonequivariant_constants_limit(table.row(a, b), ws, g.d());
      if (chain != limit) {
        r.passed = false;
        r.detail = "chain sum and wu->0 limit differ for ({" + g.vertex(a).to_string() + "},{" +
                   g.vertex(b).to_string() + "})";
      }
      if (!trivial || !r.passed) continue;
      const auto plain = expand_in_schubert_basis(pointwise_multiply(ordinary.classes[a], ordinary.classes[b]), ordinary);
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (!(plain[c].renamed(ctx) == table.at(a, b, c))) {
          r.passed = false;
          r.detail = "trivial weights differ from ordinary constants at " + vertex_triple(g, a, b, c);
          break;
        }
      }
    }
  }
  return r;
}

SuiteResult positivity_suite(const ConstantTable& table, const WeightSystem& ws) {
  SuiteResult r{"positivity", true, ""};
  const MomentGraph& g = *table.graph();
  const WuContext wu(ws, g.d());
  const bool sorted = ws.is_non_decreasing();
  std::size_t negative = 0;
  for (std::size_t a = 0; a < g.size() && r.passed; ++a) {
    for (std::size_t b = 0; b < g.size() && r.passed; ++b) {
      for (std::size_t c = 0; c < g.size(); ++c) {
        const auto cert = positivity_certificate(table.at(a, b, c), wu);
        if (!cert) {
          r.passed = false;
          r.detail = "constant at " + vertex_triple(g, a, b, c) + " is not a polynomial in the wu forms";
          break;
        }
        if (!cert->nonneg) ++negative;
      }
    }
  }
  if (r.passed && negative) {
    if (sorted) {
      r.passed = false;
      r.detail = std::to_string(negative) + " constants have a negative wu coefficient";
    } else {
      r.detail = std::to_string(negative) + " constants have a negative wu coefficient (weights unsorted, not enforced)";
    }
  } else if (r.passed && !sorted) {
    r.detail = "weights unsorted, not enforced";
  }
  return r;
}

SuiteResult algebra_laws(const ConstantTable& table) {
  SuiteResult r{"commutativity-associativity", true, ""};
  const MomentGraph& g = *table.graph();
  const std::size_t count = g.size();
  const auto ctx = table.at(0, 0, 0).context();
  for (std::size_t a = 0; a < count && r.passed; ++a) {
    for (std::size_t b = 0; b < count && r.passed; ++b) {
      for (std::size_t c = 0; c < count; ++c) {
        if (!(table.at(a, b, c) == table.at(b, a, c))) {
          r.passed = false;
          r.detail = "not commutative at " + vertex_triple(g, a, b, c);
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < count && r.passed; ++a) {
    for (std::size_t b = 0; b < count && r.passed; ++b) {
      for (std::size_t c = 0; c < count && r.passed; ++c) {
        for (std::size_t k = 0; k < count; ++k) {
          Polynomial left = Polynomial::zero(ctx);
          Polynomial right = Polynomial::zero(ctx);
          for (std::size_t e = 0; e < count; ++e) {
            left += table.at(a, b, e) * table.at(e, c, k);
            right += table.at(b, c, e) * table.at(a, e, k);
          }
          if (!(left == right)) {
            r.passed = false;
            r.detail = "not associative at " + vertex_triple(g, a, b, c) + " -> {" + g.vertex(k).to_string() + "}";
            break;
          }
        }
      }
    }
  }
  return r;
}

/// Products of seeded random combinations Σ x_λ wS̃_λ, Σ y_μ wS̃_μ expanded
/// directly and through the constant table.
SuiteResult random_products(const WeightedBasis& basis, const ConstantTable& table, std::uint64_t seed) {
  SuiteResult r{"random-products", true, "seed " + std::to_string(seed)};
  const MomentGraph& g = *basis.graph;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto ctx = weighted_context(g.n());
  auto combination = [&](std::vector<Rational>& xs) {
    std::vector<Polynomial> values(g.size(), Polynomial::zero(ctx));
    xs.assign(g.size(), Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i) {
      xs[i] = coeff(rng);
      for (std::size_t v = 0; v < g.size(); ++v) values[v] += basis.classes[i].value(v) * xs[i];
    }
    return RestrictionVector(basis.graph, basis.flavor, basis.weights, std::move(values));
  };
  for (int trial = 0; trial < 3 && r.passed; ++trial) {
    std::vector<Rational> xs, ys;
    const RestrictionVector x = combination(xs);
    const RestrictionVector y = combination(ys);
    const auto direct = expand_in_schubert_basis(pointwise_multiply(x, y), basis);
    for (std::size_t nu = 0; nu < g.size(); ++nu) {
      Polynomial via = Polynomial::zero(ctx);
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          if (xs[a] != 0 && ys[b] != 0) via += table.at(a, b, nu) * Rational(xs[a] * ys[b]);
        }
      }
      if (!(via == direct[nu])) {
        r.passed = false;
        r.detail += ", trial " + std::to_string(trial) + " differs at {" + g.vertex(nu).to_string() + "}";
        break;
      }
    }
  }
  return r;
}

void corrupt_table(ConstantTable& table) {
  const MomentGraph& g = *table.graph();
  auto row = table.row(g.div(), g.div());
  row[g.top()] += Polynomial::constant(row[g.top()].context(), 1);
  table.set_row(g.div(), g.div(), std::move(row));
}

}  // namespace

// ---------------------------------------------------------------------------

void validate_space(const Space& s) {
  if (s.n < 2 || s.n > kMaxAmbient) {
    throw DomainError("n must lie in [2," + std::to_string(kMaxAmbient) + "], got " + std::to_string(s.n));
  }
  if (s.d <= 0 || s.d >= s.n) throw DomainError("need 0 < d < n, got d=" + std::to_string(s.d));
  if (static_cast<int>(s.weights.size()) != s.n) {
    throw DomainError("expected " + std::to_string(s.n) + " weights, got " + std::to_string(s.weights.size()));
  }
  (void)s.weight_system();
}

std::size_t resolve_vertex_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WSCHUB_MAX_VERTICES")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw DomainError(std::string("WSCHUB_MAX_VERTICES must be a non-negative integer, got '") + env + "'");
    }
  }
  return kDefaultVertexCap;
}

std::vector<ConstantEntry> compute_constants(const Space& s, const ConstantsOptions& options) {
  const WeightSystem ws = s.weight_system();
  const std::size_t cap = options.cap ? options.cap : kDefaultVertexCap;
  const OrdinaryBasis ordinary = build_ordinary_basis(s.n, s.d, cap);
  const WeightedBasis basis = build_weighted_basis(s.n, s.d, ws, Route::kPieri, nullptr, cap);
  const MomentGraph& g = *basis.graph;
  ConstantsFormula formula(ordinary, ws);
  const WuContext wu(ws, s.d);

  std::vector<std::size_t> lams, mus;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!options.lambda || g.vertex(i) == IndexSet::parse(s.n, *options.lambda)) lams.push_back(i);
    if (!options.mu || g.vertex(i) == IndexSet::parse(s.n, *options.mu)) mus.push_back(i);
  }
  if (lams.empty() || mus.empty()) throw DomainError("--lambda/--mu must name vertices of the space");

  std::vector<ConstantEntry> entries;
  std::string diff;
  for (std::size_t a : lams) {
    for (std::size_t b : mus) {
      const auto gkm = weighted_constants_gkm(g.vertex(a), g.vertex(b), basis);
      auto closed = formula.constants(a, b);
      if (options.corrupt && a == lams.front() && b == mus.front()) {
        closed[g.top()] += Polynomial::constant(closed[g.top()].context(), 1);
      }
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (!(gkm[c] == closed[c])) {
          diff += "  " + vertex_triple(g, a, b, c) + ": gkm " + gkm[c].to_string() + " vs formula " +
                  closed[c].to_string() + "\n";
          continue;
        }
        if (gkm[c].is_zero()) continue;
        const auto cert = positivity_certificate(gkm[c], wu);
        if (!cert) {
          throw Error("constant at " + vertex_triple(g, a, b, c) + " is not a polynomial in the wu forms");
        }
        ConstantEntry e{g.vertex(a).to_string(), g.vertex(b).to_string(), g.vertex(c).to_string(), gkm[c], {},
                        cert->nonneg};
        for (const auto& [I, coeff] : cert->coefficients()) e.wu_expansion[wu_monomial_key(I)] = coeff;
        entries.push_back(std::move(e));
      }
    }
  }
  if (!diff.empty()) throw RouteMismatch("formula and GKM routes disagree:\n" + diff);
  return entries;
}

std::vector<SuiteResult> run_checks(const Space& s, const CheckOptions& options) {
  const WeightSystem ws = s.weight_system();
  const std::size_t cap = options.cap ? options.cap : kDefaultVertexCap;
  const OrdinaryBasis ordinary = build_ordinary_basis(s.n, s.d, cap);
  const WeightedBasis pieri = build_weighted_basis(s.n, s.d, ws, Route::kPieri, nullptr, cap);
  const WeightedBasis substituted = build_weighted_basis(s.n, s.d, ws, Route::kSubstitution, &ordinary, cap);

  std::vector<SuiteResult> out;
  out.push_back(gkm_membership({&ordinary, &pieri, &substituted}));
  out.push_back(upper_triangularity(pieri));
  out.push_back(restriction_routes(substituted, pieri));

  ConstantTable gkm = constant_table_gkm(pieri);
  if (options.corrupt) corrupt_table(gkm);
  ConstantsFormula formula(ordinary, ws);
  const ConstantTable closed = constant_table_formula(formula);

  out.push_back(constant_routes(gkm, closed));
  out.push_back(pieri_suite(pieri));
  out.push_back(kostka_suite(pieri, 3));
  out.push_back(recursive_identity(gkm, ws));
  out.push_back(translation_suite(pieri));
  out.push_back(specialization(gkm, formula, ordinary));
  out.push_back(positivity_suite(gkm, ws));
  out.push_back(algebra_laws(gkm));
  out.push_back(random_products(pieri, gkm, options.seed));
  if (s.d == 1) {
    const auto report = stanley_reisner_check(s.n, ws);
    out.push_back({"stanley-reisner", report.ok(), report.failures.empty() ? "" : report.failures.front()});
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant weighted Schubert calculus on weighted Grassmannians", "wschub"};
  app.require_subcommand(1);

  Space space;
  std::string weights_text;
  std::string format = "text";
  std::string output;
  std::optional<std::size_t> max_vertices;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--n", space.n, "Ambient dimension n")->required();
    sub->add_option("--d", space.d, "Subspace dimension d")->required();
    sub->add_option("--weights", weights_text, "Comma-separated weights w_1..w_n (default all zero)");
    sub->add_option("--a", space.a, "Weight a of the scalar action (default 1)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", output, "Write to this file instead of standard output");
    sub->add_option("--max-vertices", max_vertices, "Vertex cap (overrides WSCHUB_MAX_VERTICES)");
  };

  bool with_ordinary = false;
  bool symbolic = false;
  auto* basis = app.add_subcommand("basis", "Print the weighted Schubert restriction table");
  add_space(basis);
  add_common(basis);
  basis->add_flag("--ordinary", with_ordinary, "Also print the ordinary basis");
  basis->add_flag("--symbolic-denominators", symbolic, "Text mode: show diagonals with w_lambda left symbolic");

  std::string lambda_text, mu_text;
  bool check_positivity = false;
  bool corrupt = false;
  auto* constants = app.add_subcommand("constants", "Structure constants by both routes");
  add_space(constants);
  add_common(constants);
  constants->add_option("--lambda", lambda_text, "Restrict to this lambda, e.g. 2,3");
  constants->add_option("--mu", mu_text, "Restrict to this mu, e.g. 1,4");
  constants->add_flag("--check-positivity", check_positivity, "Fail if sorted weights give a negative wu coefficient");
  constants->add_flag("--corrupt", corrupt)->group("");

  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "Run every verification suite");
  add_space(check);
  add_common(check);
  check->add_option("--seed", seed, "Seed for randomized checks");
  check->add_flag("--corrupt", corrupt)->group("");

  std::string b_text;
  auto* kawasaki = app.add_subcommand("kawasaki", "Kawasaki factors l_k^b of weighted projective space");
  kawasaki->add_option("--b", b_text, "Comma-separated positive integers b_1..b_n")->required();
  kawasaki->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  kawasaki->add_option("--output", output, "Write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const bool json = format == "json";
    if (kawasaki->parsed()) return cmd_kawasaki(parse_list(b_text, "b"), json, output, out);

    if (weights_text.empty()) {
      space.weights.assign(static_cast<std::size_t>(std::max(space.n, 0)), 0);
    } else {
      space.weights = parse_list(weights_text, "weights");
    }
    validate_space(space);
    const std::size_t cap = resolve_vertex_cap(max_vertices);
    if (binomial(space.n, space.d) > cap) {
      throw ResourceError("Gr(" + std::to_string(space.d) + "," + std::to_string(space.n) + ") has " +
                          std::to_string(binomial(space.n, space.d)) + " vertices, above the cap of " +
                          std::to_string(cap));
    }

    if (basis->parsed()) return cmd_basis(space, cap, with_ordinary, json, symbolic, output, out);
    if (constants->parsed()) {
      ConstantsOptions options;
      if (!lambda_text.empty()) options.lambda = lambda_text;
      if (!mu_text.empty()) options.mu = mu_text;
      options.cap = cap;
      options.corrupt = corrupt;
      return cmd_constants(space, options, check_positivity, json, output, out, err);
    }
    CheckOptions options;
    options.seed = seed;
    options.cap = cap;
    options.corrupt = corrupt;
    return cmd_check(space, options, json, output, out);
  } catch (const RouteMismatch& e) {
    err << "error: " << e.what();
    return kExitRouteMismatch;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace wschub::cli
