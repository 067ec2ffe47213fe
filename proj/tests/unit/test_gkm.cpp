#include <gtest/gtest.h>

#include "wschub/error.hpp"
#include "wschub/gkm.hpp"
#include "wschub/schubert.hpp"
#include "wschub/weighted.hpp"

using namespace wschub;

TEST(MomentGraph, EdgesAndOrder) {
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {6, 3}, {5, 1}}) {
    const auto g = build_graph(n, d);
    // each vertex swaps one of its d elements for one of the n-d others
    EXPECT_EQ(g->edges().size(), g->size() * static_cast<std::size_t>(d * (n - d)) / 2);
    int last = -1;
    for (std::size_t v : g->linear_extension()) {
      EXPECT_GE(g->length(v), last);
      last = g->length(v);
    }
    EXPECT_EQ(g->length(g->top()), g->max_length());
    EXPECT_EQ(g->length(g->id()), 0);
    EXPECT_EQ(g->length(g->div()), 1);
  }
  EXPECT_THROW(build_graph(4, 2, 5), ResourceError);
}

TEST(MomentGraph, IndexOf) {
  const auto g = build_graph(4, 2);
  EXPECT_EQ(g->vertex(g->index_of(IndexSet(4, {2, 3}))).to_string(), "2,3");
  EXPECT_THROW(g->index_of(IndexSet(5, {2, 3})), DomainError);
}

TEST(EdgeForms, OrdinaryAndWeighted) {
  const auto g = build_graph(4, 2);
  const std::size_t a = g->index_of(IndexSet(4, {1, 2}));
  const std::size_t b = g->index_of(IndexSet(4, {1, 3}));
  const auto ctx = ordinary_context(4);
  EXPECT_EQ(gkm_edge_form(*g, a, b, Flavor::kOrdinary, std::nullopt).to_polynomial(),
            Polynomial::variable(ctx, 1) - Polynomial::variable(ctx, 2));
  const WeightSystem ws({0, 1, 2, 3}, 1);
  // w_13 Yw_12 - w_12 Yw_13 with w_12 = 2, w_13 = 3
  const auto wctx = weighted_context(4);
  const Polynomial expected = Rational(3) * (Polynomial::variable(wctx, 0) + Polynomial::variable(wctx, 1)) -
                              Rational(2) * (Polynomial::variable(wctx, 0) + Polynomial::variable(wctx, 2));
  EXPECT_EQ(gkm_edge_form(*g, a, b, Flavor::kWeighted, ws).to_polynomial(), expected);
  const std::size_t far = g->index_of(IndexSet(4, {3, 4}));
  EXPECT_THROW(gkm_edge_form(*g, a, far, Flavor::kOrdinary, std::nullopt), DomainError);
}

TEST(CheckGkm, DetectsViolation) {
  const auto g = build_graph(4, 2);
  const auto ctx = ordinary_context(4);
  std::vector<Polynomial> values(g->size(), Polynomial::zero(ctx));
  values[0] = Polynomial::variable(ctx, 0);
  const RestrictionVector bad(g, Flavor::kOrdinary, std::nullopt, values);
  EXPECT_FALSE(check_gkm(bad).empty());
  const RestrictionVector one = RestrictionVector::constant(g, Flavor::kOrdinary, std::nullopt, 1);
  EXPECT_TRUE(check_gkm(one).empty());
}

TEST(CheckGkm, AffineConeLift) {
  // The weighted divisor class, stored in Yw-coordinates, satisfies the cone
  // condition after lifting Yw_i -> y_i - (w_i/a) z.
  const WeightSystem ws({0, 1, 2, 3}, 2);
  const auto basis = build_weighted_basis(4, 2, ws, Route::kPieri);
  for (const auto& cls : basis.classes) {
    EXPECT_TRUE(check_gkm(cls.as_flavor(Flavor::kAffineCone)).empty());
    EXPECT_TRUE(check_gkm(cls).empty());
  }
  std::vector<Polynomial> values = basis.classes[0].values();
  values[3] += Polynomial::variable(weighted_context(4), 0);
  const RestrictionVector bad(basis.graph, Flavor::kAffineCone, ws, values);
  EXPECT_FALSE(check_gkm(bad).empty());
}

TEST(RestrictionVector, Validation) {
  const auto g = build_graph(4, 2);
  EXPECT_THROW(RestrictionVector(g, Flavor::kWeighted, std::nullopt,
                                 std::vector<Polynomial>(g->size(), Polynomial::zero(weighted_context(4)))),
               DomainError);
  EXPECT_THROW(RestrictionVector(g, Flavor::kOrdinary, std::nullopt,
                                 std::vector<Polynomial>(g->size(), Polynomial::zero(weighted_context(4)))),
               ContextMismatch);
  EXPECT_THROW(RestrictionVector(g, Flavor::kOrdinary, std::nullopt, {}), DomainError);
}

TEST(Expand, RejectsNonTriangular) {
  const auto basis = build_ordinary_basis(4, 2);
  SchubertBasis broken = basis;
  std::vector<Polynomial> values = broken.classes[0].values();
  values[5] = Polynomial::constant(ordinary_context(4), 1);  // class {1,2} nonzero below it
  broken.classes[0] = RestrictionVector(basis.graph, Flavor::kOrdinary, std::nullopt, values);
  EXPECT_THROW(expand_in_schubert_basis(basis.classes[3], broken), DomainError);
}

TEST(Expand, ReconstructsVector) {
  const auto basis = build_ordinary_basis(5, 2);
  const auto& g = *basis.graph;
  const auto product = pointwise_multiply(basis.classes[g.div()], basis.classes[4]);
  const auto coeffs = expand_in_schubert_basis(product, basis);
  for (std::size_t mu = 0; mu < g.size(); ++mu) {
    Polynomial sum = Polynomial::zero(ordinary_context(5));
    for (std::size_t nu = 0; nu < g.size(); ++nu) sum += coeffs[nu] * basis.classes[nu].value(mu);
    EXPECT_EQ(sum, product.value(mu));
  }
}
