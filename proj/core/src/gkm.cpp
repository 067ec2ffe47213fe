#include "wschub/gkm.hpp"

#include <algorithm>
#include <bit>

#include "wschub/error.hpp"

namespace wschub {

GraphPtr build_graph(int n, int d, std::size_t cap) {
  std::shared_ptr<MomentGraph> g(new MomentGraph());
  g->n_ = n;
  g->d_ = d;
  g->vertices_ = enumerate_index_sets(n, d, cap);
  const std::size_t count = g->vertices_.size();
  for (const auto& v : g->vertices_) g->lengths_.push_back(v.length());

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto shared = std::popcount(g->vertices_[a].mask() & g->vertices_[b].mask());
      if (shared == d - 1) g->edges_.push_back({a, b});
    }
  }

  g->order_.resize(count);
  for (std::size_t i = 0; i < count; ++i) g->order_[i] = i;
  std::stable_sort(g->order_.begin(), g->order_.end(),
                   [&](std::size_t x, std::size_t y) { return g->lengths_[x] < g->lengths_[y]; });

  g->covers_.resize(count);
  g->covered_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (const IndexSet& c : covering_elements(g->vertices_[i])) g->covers_[i].push_back(g->index_of(c));
    for (const IndexSet& c : covered_elements(g->vertices_[i])) g->covered_[i].push_back(g->index_of(c));
  }

  const auto dist = distinguished_elements(n, d);
  g->id_ = g->index_of(dist.id);
  g->div_ = g->index_of(dist.div);
  return g;
}

std::size_t MomentGraph::index_of(const IndexSet& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) {
    throw DomainError("{" + v.to_string() + "} is not a vertex of Gr(" + std::to_string(d_) + "," +
                      std::to_string(n_) + ")");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool MomentGraph::is_edge(std::size_t a, std::size_t b) const {
  return a != b && std::popcount(vertices_[a].mask() & vertices_[b].mask()) == d_ - 1;
}

bool MomentGraph::leq(std::size_t i, std::size_t j) const { return bruhat_leq(vertices_[i], vertices_[j]); }

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::kOrdinary:
      return "ordinary";
    case Flavor::kAffineCone:
      return "affine_cone";
    case Flavor::kWeighted:
      return "weighted";
  }
  return "?";
}

ContextPtr flavor_context(Flavor f, int n) {
  return f == Flavor::kOrdinary ? ordinary_context(n) : weighted_context(n);
}

RestrictionVector::RestrictionVector(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> weights,
                                     std::vector<Polynomial> values)
    : graph_(std::move(graph)),
      flavor_(flavor),
      weights_(std::move(weights)),
      ctx_(flavor_context(flavor, graph_->n())),
      values_(std::move(values)) {
  if (values_.size() != graph_->size()) throw DomainError("restriction vector needs one value per vertex");
  if (flavor_ != Flavor::kOrdinary) {
    if (!weights_) throw DomainError(to_string(flavor_) + " restriction vector needs a weight system");
    if (weights_->n() != graph_->n()) throw DomainError("weight system does not match n");
  }
  for (const Polynomial& p : values_) {
    if (!same_context(p.context(), ctx_)) throw ContextMismatch("restriction value in the wrong context");
  }
}

RestrictionVector RestrictionVector::constant(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> weights,
                                              const Rational& c) {
  const auto ctx = flavor_context(flavor, graph->n());
  std::vector<Polynomial> values(graph->size(), Polynomial::constant(ctx, c));
  return RestrictionVector(std::move(graph), flavor, std::move(weights), std::move(values));
}

RestrictionVector RestrictionVector::as_flavor(Flavor f) const {
  if ((f == Flavor::kOrdinary) != (flavor_ == Flavor::kOrdinary)) {
    throw DomainError("cannot relabel between ordinary and weighted storage");
  }
  return RestrictionVector(graph_, f, weights_, values_);
}

bool operator==(const RestrictionVector& a, const RestrictionVector& b) {
  return a.flavor_ == b.flavor_ && a.weights_ == b.weights_ && a.graph_->n() == b.graph_->n() &&
         a.graph_->d() == b.graph_->d() && a.values_ == b.values_;
}

Polynomial subset_sum(const ContextPtr& ctx, const IndexSet& lambda) {
  std::vector<Term> terms;
  for (int i : lambda.elements()) {
    Monomial m;
    m.set_exponent(static_cast<std::size_t>(i - 1), 1);
    terms.push_back({m, Rational(1)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

LinearForm gkm_edge_form(const MomentGraph& graph, std::size_t a, std::size_t b, Flavor flavor,
                         const std::optional<WeightSystem>& weights) {
  if (!graph.is_edge(a, b)) {
    throw DomainError("{" + graph.vertex(a).to_string() + "} and {" + graph.vertex(b).to_string() +
                      "} are not joined by an edge");
  }
  const IndexSet& lam = graph.vertex(a);
  const IndexSet& mu = graph.vertex(b);
  switch (flavor) {
    case Flavor::kOrdinary: {
      const auto ctx = ordinary_context(graph.n());
      return LinearForm::from_polynomial(subset_sum(ctx, lam) - subset_sum(ctx, mu));
    }
    case Flavor::kWeighted: {
      if (!weights) throw DomainError("weighted edge form needs weights");
      const auto ctx = weighted_context(graph.n());
      return LinearForm::from_polynomial(weights->total(mu) * subset_sum(ctx, lam) -
                                         weights->total(lam) * subset_sum(ctx, mu));
    }
    case Flavor::kAffineCone:
      break;
  }
  throw DomainError("the affine cone condition is a pair of forms; use cone_edge_forms");
}

std::pair<LinearForm, LinearForm> cone_edge_forms(const MomentGraph& graph, std::size_t a, std::size_t b) {
  if (!graph.is_edge(a, b)) throw DomainError("not an edge");
  const auto ctx = cone_context(graph.n());
  const Polynomial z = Polynomial::variable(ctx, static_cast<std::size_t>(graph.n()));
  return {LinearForm::from_polynomial(subset_sum(ctx, graph.vertex(a)) + z),
          LinearForm::from_polynomial(subset_sum(ctx, graph.vertex(b)) + z)};
}

Polynomial lift_to_cone(const Polynomial& p, const WeightSystem& ws) {
  const int n = ws.n();
  const auto target = cone_context(n);
  const Polynomial z = Polynomial::variable(target, static_cast<std::size_t>(n));
  std::vector<Polynomial> images;
  for (int i = 1; i <= n; ++i) {
    images.push_back(Polynomial::variable(target, static_cast<std::size_t>(i - 1)) -
                     Rational(ws.weight(i), ws.a()) * z);
  }
  return substitute(p, images, target);
}

std::vector<EdgeViolation> check_cone_condition(const MomentGraph& graph, std::span<const Polynomial> values) {
  if (values.size() != graph.size()) throw DomainError("need one value per vertex");
  std::vector<EdgeViolation> out;
  for (const auto& e : graph.edges()) {
    const auto [fa, fb] = cone_edge_forms(graph, e.a, e.b);
    const LinearForm forms[] = {fa, fb};
    const Polynomial diff = values[e.a] - values[e.b];
    if (!reduce_modulo(diff, forms).is_zero()) out.push_back({graph.vertex(e.a), graph.vertex(e.b)});
  }
  return out;
}

std::vector<EdgeViolation> check_gkm(const RestrictionVector& v) {
  const MomentGraph& graph = *v.graph();
  if (v.flavor() == Flavor::kAffineCone) {
    std::vector<Polynomial> lifted;
    lifted.reserve(graph.size());
    for (const Polynomial& p : v.values()) lifted.push_back(lift_to_cone(p, *v.weights()));
    return check_cone_condition(graph, lifted);
  }
  std::vector<EdgeViolation> out;
  for (const auto& e : graph.edges()) {
    const Polynomial diff = v.value(e.a) - v.value(e.b);
    if (diff.is_zero()) continue;
    const LinearForm form = gkm_edge_form(graph, e.a, e.b, v.flavor(), v.weights());
    if (!exact_divide(diff, form)) out.push_back({graph.vertex(e.a), graph.vertex(e.b)});
  }
  return out;
}

RestrictionVector pointwise_multiply(const RestrictionVector& a, const RestrictionVector& b) {
  if (a.flavor() != b.flavor()) throw DomainError("cannot multiply restriction vectors of different flavors");
  if (a.graph() != b.graph() && (a.graph()->n() != b.graph()->n() || a.graph()->d() != b.graph()->d())) {
    throw DomainError("restriction vectors live on different graphs");
  }
  if (a.weights() != b.weights()) throw DomainError("restriction vectors use different weights");
  std::vector<Polynomial> values;
  values.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) values.push_back(a.value(i) * b.value(i));
  return RestrictionVector(a.graph(), a.flavor(), a.weights(), std::move(values));
}

std::vector<Polynomial> expand_in_schubert_basis(const RestrictionVector& v, const SchubertBasis& basis) {
  const MomentGraph& graph = *basis.graph;
  if (v.flavor() != basis.flavor || v.weights() != basis.weights || v.graph()->size() != graph.size()) {
    throw DomainError("vector and basis describe different spaces");
  }
  if (basis.classes.size() != graph.size() || basis.diagonal_factors.size() != graph.size()) {
    throw DomainError("basis needs one class and one factored diagonal per vertex");
  }
  std::vector<Polynomial> coeffs(graph.size(), Polynomial::zero(v.context()));
  std::vector<char> solved(graph.size(), 0);
  for (std::size_t kappa : graph.linear_extension()) {
    Polynomial numer = v.value(kappa);
    for (std::size_t nu = 0; nu < graph.size(); ++nu) {
      if (nu == kappa) continue;
      const Polynomial& entry = basis.classes[nu].value(kappa);
      if (entry.is_zero()) continue;
      if (!solved[nu]) {
        throw DomainError("basis is not upper triangular: class {" + graph.vertex(nu).to_string() +
                          "} is nonzero at {" + graph.vertex(kappa).to_string() + "}");
      }
      if (coeffs[nu].is_zero()) continue;
      numer -= coeffs[nu] * entry;
    }
    solved[kappa] = 1;
    if (numer.is_zero()) continue;
    for (const LinearForm& factor : basis.diagonal_factors[kappa]) {
      auto q = exact_divide(numer, factor);
      if (!q) {
        throw InexactDivision("expansion residual at {" + graph.vertex(kappa).to_string() +
                              "} is not divisible by the diagonal factor " + factor.to_string());
      }
      numer = std::move(*q);
    }
    coeffs[kappa] = std::move(numer);
  }
  return coeffs;
}

}  // namespace wschub
