#include "wschub/weighted.hpp"

#include <algorithm>

#include "wschub/error.hpp"
#include "wschub/positivity.hpp"

namespace wschub {

namespace {

Polynomial y_id_weighted(int n, int d) { return weighted_subset_sum(distinguished_elements(n, d).id); }

Rational w_id(const WeightSystem& ws, int d) { return ws.total(distinguished_elements(ws.n(), d).id); }

}  // namespace

Polynomial weighted_subset_sum(const IndexSet& lambda) { return subset_sum(weighted_context(lambda.n()), lambda); }

LinearSubstitution vertex_substitution(const IndexSet& mu, const WeightSystem& ws) {
  const int n = mu.n();
  if (ws.n() != n) throw DomainError("weight system does not match n");
  const Rational w_mu = ws.total(mu);
  LinearSubstitution map{ordinary_context(n), weighted_context(n), {}};
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    row[static_cast<std::size_t>(i - 1)] = 1;
    const Rational ratio = Rational(ws.weight(i)) / w_mu;
    for (int j : mu.elements()) row[static_cast<std::size_t>(j - 1)] -= ratio;
    map.matrix.push_back(std::move(row));
  }
  return map;
}

Polynomial weighted_restriction_by_substitution(const IndexSet& lambda, const IndexSet& mu,
                                                const OrdinaryBasis& ordinary, const WeightSystem& ws) {
  return substitute_linear(ordinary[lambda].value(mu), vertex_substitution(mu, ws));
}

std::vector<LinearForm> weighted_diagonal_factors(const IndexSet& lambda, const WeightSystem& ws) {
  const Polynomial y_lambda = weighted_subset_sum(lambda);
  const Rational w_lambda = ws.total(lambda);
  std::vector<LinearForm> out;
  for (const Inversion& inv : inversions(lambda)) {
    const IndexSet moved = apply_inversion(lambda, inv);
    out.push_back(LinearForm::from_polynomial(weighted_subset_sum(moved) - (ws.total(moved) / w_lambda) * y_lambda));
  }
  return out;
}

Polynomial weighted_diagonal_restriction(const IndexSet& lambda, const WeightSystem& ws) {
  Polynomial p = Polynomial::constant(weighted_context(lambda.n()), 1);
  for (const LinearForm& f : weighted_diagonal_factors(lambda, ws)) p = p * f.to_polynomial();
  return p;
}

Polynomial weighted_divisor_restriction(const IndexSet& mu, const WeightSystem& ws) {
  const auto id = distinguished_elements(mu.n(), mu.d()).id;
  return weighted_subset_sum(id) - (ws.total(id) / ws.total(mu)) * weighted_subset_sum(mu);
}

WeightedBasis build_weighted_basis(int n, int d, const WeightSystem& ws, Route route, const OrdinaryBasis* ordinary,
                                   std::size_t cap) {
  if (ws.n() != n) throw DomainError("weight system has " + std::to_string(ws.n()) + " weights but n=" +
                                     std::to_string(n));
  const auto ctx = weighted_context(n);
  std::vector<std::vector<Polynomial>> table;
  GraphPtr graph;

  if (route == Route::kSubstitution) {
    std::optional<OrdinaryBasis> own;
    if (!ordinary) {
      own = build_ordinary_basis(n, d, cap);
      ordinary = &*own;
    }
    graph = ordinary->graph;
    const std::size_t count = graph->size();
    table.assign(count, std::vector<Polynomial>(count, Polynomial::zero(ctx)));
    for (std::size_t mu = 0; mu < count; ++mu) {
      const auto images = vertex_substitution(graph->vertex(mu), ws).images();
      for (std::size_t lam = 0; lam < count; ++lam) {
        const Polynomial& value = (*ordinary)[lam].value(mu);
        if (!value.is_zero()) table[lam][mu] = substitute(value, images, ctx);
      }
    }
  } else {
    graph = build_graph(n, d, cap);
    const std::size_t count = graph->size();
    table.assign(count, std::vector<Polynomial>(count, Polynomial::zero(ctx)));
    const Rational wid = ws.total(graph->vertex(graph->id()));
    std::vector<Polynomial> y_sum;
    std::vector<Rational> totals;
    for (const auto& v : graph->vertices()) {
      y_sum.push_back(weighted_subset_sum(v));
      totals.push_back(ws.total(v));
    }
    const auto& order = graph->linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t lam = *it;
      table[lam][lam] = weighted_diagonal_restriction(graph->vertex(lam), ws);
      const Rational cover_coeff = wid / totals[lam];
      for (std::size_t nu = 0; nu < count; ++nu) {
        if (nu == lam || !graph->leq(lam, nu)) continue;
        Polynomial rhs = Polynomial::zero(ctx);
        for (std::size_t cover : graph->covers(lam)) rhs += table[cover][nu];
        rhs *= cover_coeff;
        // wS̃_div|_ν minus the self-coefficient of the Pieri rule.
        const Polynomial gap = cover_coeff * y_sum[lam] - (wid / totals[nu]) * y_sum[nu];
        auto q = exact_divide(rhs, LinearForm::from_polynomial(gap));
        if (!q) {
          throw InexactDivision("weighted Pieri recursion for wS~_{" + graph->vertex(lam).to_string() + "} at {" +
                                graph->vertex(nu).to_string() + "} left a remainder");
        }
        table[lam][nu] = std::move(*q);
      }
    }
  }

  WeightedBasis basis{graph, Flavor::kWeighted, ws, {}, {}};
  for (std::size_t lam = 0; lam < graph->size(); ++lam) {
    basis.classes.emplace_back(graph, Flavor::kWeighted, ws, std::move(table[lam]));
    basis.diagonal_factors.push_back(weighted_diagonal_factors(graph->vertex(lam), ws));
  }
  return basis;
}

PieriExpansion weighted_pieri(const IndexSet& lambda, const WeightSystem& ws) {
  const auto id = distinguished_elements(lambda.n(), lambda.d()).id;
  const Rational ratio = ws.total(id) / ws.total(lambda);
  PieriExpansion out{weighted_subset_sum(id) - ratio * weighted_subset_sum(lambda), {}};
  for (IndexSet& cover : covering_elements(lambda)) out.covers.emplace_back(std::move(cover), ratio);
  return out;
}

LinearForm wu_form(Pair alpha, const WeightSystem& ws, int d) {
  const int n = ws.n();
  if (!(n >= alpha.i && alpha.i > alpha.j && alpha.j >= 1)) {
    throw DomainError("wu_(" + std::to_string(alpha.i) + "," + std::to_string(alpha.j) + ") needs n >= i > j >= 1");
  }
  const auto ctx = weighted_context(n);
  const Polynomial form = Polynomial::variable(ctx, static_cast<std::size_t>(alpha.i - 1)) -
                          Polynomial::variable(ctx, static_cast<std::size_t>(alpha.j - 1)) -
                          (w_alpha(alpha, ws) / w_id(ws, d)) * y_id_weighted(n, d);
  return LinearForm::from_polynomial(form);
}

Rational w_alpha(Pair alpha, const WeightSystem& ws) { return Rational(ws.weight(alpha.i) - ws.weight(alpha.j)); }

Polynomial wu_I_r(std::span<const Pair> I, int r, const WeightSystem& ws, int d) {
  const int p = static_cast<int>(I.size());
  if (r < 0 || r > p) throw DomainError("r must lie in [0, |I|]");
  const auto ctx = weighted_context(ws.n());
  const Rational wid = w_id(ws, d);
  std::vector<Polynomial> forms;
  for (const Pair& a : I) forms.push_back(wu_form(a, ws, d).to_polynomial());

  Polynomial total = Polynomial::zero(ctx);
  std::vector<char> chosen(static_cast<std::size_t>(p), 0);
  std::fill(chosen.end() - r, chosen.end(), 1);
  do {
    Polynomial term = Polynomial::constant(ctx, 1);
    for (int s = 0; s < p; ++s) {
      if (chosen[static_cast<std::size_t>(s)]) {
        term *= w_alpha(I[static_cast<std::size_t>(s)], ws) / wid;
      } else {
        term = term * forms[static_cast<std::size_t>(s)];
      }
    }
    total += term;
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return total;
}

std::vector<Polynomial> wu_I_all(std::span<const Pair> I, const WeightSystem& ws, int d) {
  const auto ctx = weighted_context(ws.n());
  const Rational wid = w_id(ws, d);
  std::vector<Polynomial> coeffs{Polynomial::constant(ctx, 1)};
  for (const Pair& a : I) {
    const Polynomial form = wu_form(a, ws, d).to_polynomial();
    const Rational slope = w_alpha(a, ws) / wid;
    std::vector<Polynomial> next(coeffs.size() + 1, Polynomial::zero(ctx));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k] += coeffs[k] * form;
      next[k + 1] += coeffs[k] * slope;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<Pair> simple_pairs(const UMultiset& I) {
  std::vector<Pair> out;
  for (int i : I) out.push_back({i + 1, i});
  return out;
}

// ---------------------------------------------------------------------------
// Constant tables

ConstantTable::ConstantTable(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> ws)
    : graph_(std::move(graph)), flavor_(flavor), ws_(std::move(ws)), rows_(graph_->size() * graph_->size()) {}

const std::vector<Polynomial>& ConstantTable::row(std::size_t lam, std::size_t mu) const {
  const auto& r = rows_[lam * graph_->size() + mu];
  if (r.empty()) {
    throw DomainError("constant table has no entry for ({" + graph_->vertex(lam).to_string() + "},{" +
                      graph_->vertex(mu).to_string() + "})");
  }
  return r;
}

void ConstantTable::set_row(std::size_t lam, std::size_t mu, std::vector<Polynomial> values) {
  if (values.size() != graph_->size()) throw DomainError("constant row needs one value per vertex");
  rows_[lam * graph_->size() + mu] = std::move(values);
}

ConstantsFormula::ConstantsFormula(const OrdinaryBasis& ordinary, WeightSystem ws)
    : ordinary_(ordinary), ws_(std::move(ws)), kostka_(ordinary.graph, ws_) {
  if (ws_.n() != ordinary.graph->n()) throw DomainError("weight system does not match n");
}

const std::vector<Polynomial>& ConstantsFormula::ordinary_row(std::size_t lam, std::size_t mu) {
  const auto key = std::make_pair(lam, mu);
  if (auto it = ordinary_cache_.find(key); it != ordinary_cache_.end()) return it->second;
  const auto product = pointwise_multiply(ordinary_.classes[lam], ordinary_.classes[mu]);
  return ordinary_cache_.emplace(key, expand_in_schubert_basis(product, ordinary_)).first->second;
}

const UExpansion& ConstantsFormula::u_expansion(std::size_t lam, std::size_t mu, std::size_t eta) {
  const auto key = std::make_tuple(lam, mu, eta);
  if (auto it = u_cache_.find(key); it != u_cache_.end()) return it->second;
  return u_cache_.emplace(key, u_expand(ordinary_row(lam, mu)[eta])).first->second;
}

const std::vector<Polynomial>& ConstantsFormula::wu_powers(const UMultiset& I) {
  if (auto it = wu_cache_.find(I); it != wu_cache_.end()) return it->second;
  const auto pairs = simple_pairs(I);
  return wu_cache_.emplace(I, wu_I_all(pairs, ws_, ordinary_.graph->d())).first->second;
}

std::vector<Polynomial> ConstantsFormula::constants(const IndexSet& lambda, const IndexSet& mu) {
  return constants(ordinary_.graph->index_of(lambda), ordinary_.graph->index_of(mu));
}

std::vector<Polynomial> ConstantsFormula::constants(std::size_t lam, std::size_t mu) {
  const MomentGraph& graph = *ordinary_.graph;
  const auto ctx = weighted_context(graph.n());
  std::vector<Polynomial> out(graph.size(), Polynomial::zero(ctx));
  const auto& row = ordinary_row(lam, mu);
  for (std::size_t eta = 0; eta < graph.size(); ++eta) {
    if (row[eta].is_zero()) continue;
    // acc[r] = Σ_I c(λ,μ,η;I) wu_I^(r)
    std::vector<Polynomial> acc;
    for (const auto& [I, c] : u_expansion(lam, mu, eta).entries) {
      const auto& powers = wu_powers(I);
      if (acc.size() < powers.size()) acc.resize(powers.size(), Polynomial::zero(ctx));
      for (std::size_t r = 0; r < powers.size(); ++r) acc[r] += powers[r] * c;
    }
    for (std::size_t nu = 0; nu < graph.size(); ++nu) {
      if (!graph.leq(eta, nu)) continue;
      for (std::size_t r = 0; r < acc.size(); ++r) {
        if (acc[r].is_zero()) continue;
        const Polynomial& k = kostka_(static_cast<int>(r), eta, nu);
        if (!k.is_zero()) out[nu] += k * acc[r];
      }
    }
  }
  return out;
}

std::vector<Polynomial> weighted_constants_formula(const IndexSet& lambda, const IndexSet& mu, const WeightSystem& ws,
                                                   const OrdinaryBasis& ordinary) {
  ConstantsFormula formula(ordinary, ws);
  return formula.constants(lambda, mu);
}

std::vector<Polynomial> weighted_constants_gkm(const IndexSet& lambda, const IndexSet& mu,
                                               const WeightedBasis& basis) {
  return expand_in_schubert_basis(pointwise_multiply(basis[lambda], basis[mu]), basis);
}

ConstantTable constant_table_gkm(const SchubertBasis& basis) {
  ConstantTable table(basis.graph, basis.flavor, basis.weights);
  const std::size_t count = basis.graph->size();
  for (std::size_t lam = 0; lam < count; ++lam) {
    for (std::size_t mu = 0; mu < count; ++mu) {
      table.set_row(lam, mu,
                    expand_in_schubert_basis(pointwise_multiply(basis.classes[lam], basis.classes[mu]), basis));
    }
  }
  return table;
}

ConstantTable constant_table_formula(ConstantsFormula& formula) {
  const GraphPtr& graph = formula.kostka().graph();
  ConstantTable table(graph, Flavor::kWeighted, formula.weights());
  for (std::size_t lam = 0; lam < graph->size(); ++lam) {
    for (std::size_t mu = 0; mu < graph->size(); ++mu) table.set_row(lam, mu, formula.constants(lam, mu));
  }
  return table;
}

Polynomial recursive_identity_residual(std::size_t lam, std::size_t mu, std::size_t nu, const WeightSystem& ws,
                                       const ConstantTable& table) {
  const MomentGraph& graph = *table.graph();
  const Rational wid = ws.total(graph.vertex(graph.id()));
  const Polynomial gap =
      weighted_divisor_restriction(graph.vertex(nu), ws) - weighted_divisor_restriction(graph.vertex(lam), ws);
  Polynomial residual = gap * table.at(lam, mu, nu);
  const Rational lam_ratio = wid / ws.total(graph.vertex(lam));
  for (std::size_t cover : graph.covers(lam)) residual -= table.at(cover, mu, nu) * lam_ratio;
  for (std::size_t below : graph.covered(nu)) {
    residual += table.at(lam, mu, below) * (wid / ws.total(graph.vertex(below)));
  }
  return residual;
}

std::vector<Rational> nonequivariant_constants_chain(std::size_t lam, std::size_t mu, ConstantsFormula& formula) {
  KostkaTable& kostka = formula.kostka();
  const MomentGraph& graph = *kostka.graph();
  const WeightSystem& ws = formula.weights();
  const auto& row = formula.ordinary_row(lam, mu);
  std::vector<Rational> out(graph.size(), Rational(0));
  for (std::size_t nu = 0; nu < graph.size(); ++nu) {
    if (graph.length(lam) + graph.length(mu) != graph.length(nu)) continue;
    for (std::size_t eta = 0; eta < graph.size(); ++eta) {
      if (row[eta].is_zero() || !graph.leq(eta, nu)) continue;
      // c̃^η evaluated at u_i = w_{i+1} - w_i.
      Rational value = 0;
      for (const auto& [I, c] : formula.u_expansion(lam, mu, eta).entries) {
        Rational term = c;
        for (int i : I) term *= Rational(ws.weight(i + 1) - ws.weight(i));
        value += term;
      }
      if (value == 0) continue;
      for (const auto& chain : kostka.chains(nu, eta)) {
        Rational denom = 1;
        for (std::size_t q = 1; q < chain.size(); ++q) denom *= ws.total(graph.vertex(chain[q]));
        out[nu] += value / denom;
      }
    }
  }
  return out;
}

std::vector<Rational> nonequivariant_constants_limit(const std::vector<Polynomial>& equivariant, const WeightSystem& ws,
                                                     int d) {
  const WuContext wu(ws, d);
  std::vector<Rational> out;
  out.reserve(equivariant.size());
  for (const Polynomial& p : equivariant) {
    auto expanded = wu.expand(p);
    if (!expanded) throw DomainError("structure constant is not a polynomial in the wu forms: " + p.to_string());
    out.push_back(expanded->constant_term());
  }
  return out;
}

std::vector<int> translation_formula_failures(const WeightedBasis& basis) {
  const MomentGraph& graph = *basis.graph;
  const WeightSystem& ws = *basis.weights;
  const auto ctx = weighted_context(graph.n());
  const Rational wid = ws.total(graph.vertex(graph.id()));
  const Polynomial y_id = weighted_subset_sum(graph.vertex(graph.id()));
  const RestrictionVector& divisor = basis.classes[graph.div()];
  std::vector<int> failures;
  for (int i = 1; i <= graph.n(); ++i) {
    const Polynomial yi = Polynomial::variable(ordinary_context(graph.n()), static_cast<std::size_t>(i - 1));
    const Rational ratio = Rational(ws.weight(i)) / wid;
    const Polynomial shifted = Polynomial::variable(ctx, static_cast<std::size_t>(i - 1)) - ratio * y_id;
    for (std::size_t mu = 0; mu < graph.size(); ++mu) {
      const Polynomial lhs = substitute_linear(yi, vertex_substitution(graph.vertex(mu), ws));
      const Polynomial rhs = shifted + ratio * divisor.value(mu);
      if (!(lhs == rhs)) {
        failures.push_back(i);
        break;
      }
    }
  }
  return failures;
}

}  // namespace wschub
