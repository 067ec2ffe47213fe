#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wschub/error.hpp"
#include "wschub/positivity.hpp"
#include "wschub/weighted.hpp"

using namespace wschub;

namespace {

const WeightSystem kSorted({0, 1, 2, 3}, 1);
const WeightSystem kUnsorted({3, 1, 4, 1}, 2);

Polynomial Y(int n, int i) { return Polynomial::variable(weighted_context(n), static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST(WeightSystem, Totals) {
  EXPECT_EQ(kSorted.total(IndexSet(4, {1, 3})), Rational(3));
  EXPECT_EQ(kSorted.total(IndexSet(4, {3, 4})), Rational(6));
  EXPECT_EQ(WeightSystem::trivial(4).total(IndexSet(4, {1, 2})), Rational(1));
  EXPECT_THROW(WeightSystem({0, -1}, 1), DomainError);
  EXPECT_THROW(WeightSystem({0, 1}, 0), DomainError);
  EXPECT_THROW(kSorted.total(IndexSet(5, {1, 2})), DomainError);
  const auto sorted = sort_weights(kUnsorted);
  EXPECT_TRUE(sorted.sorted.is_non_decreasing());
  EXPECT_EQ(sorted.order, (std::vector<int>{2, 4, 1, 3}));
}

TEST(WeightedBasis, DiagonalOfS14) {
  for (const WeightSystem& ws : {kSorted, kUnsorted, WeightSystem({1, 2, 2, 5}, 3)}) {
    const auto basis = build_weighted_basis(4, 2, ws, Route::kPieri);
    const auto& s14 = basis[IndexSet(4, {1, 4})];
    EXPECT_EQ(s14.value(IndexSet(4, {1, 4})), oracle::gr24_s14_diagonal(ws));
    EXPECT_TRUE(s14.value(IndexSet(4, {2, 3})).is_zero());
  }
}

TEST(WeightedBasis, DivisorByBothConstructions) {
  const auto basis = build_weighted_basis(4, 2, kSorted, Route::kSubstitution);
  const Polynomial y_id = oracle::yw(4, {3, 4});
  for (const auto& mu : basis.graph->vertices()) {
    Polynomial expected = y_id;
    Polynomial y_mu = Polynomial::zero(weighted_context(4));
    for (int i : mu.elements()) y_mu += Y(4, i);
    expected -= (Rational(6) / kSorted.total(mu)) * y_mu;
    EXPECT_EQ(basis[IndexSet(4, {2, 4})].value(mu), expected);
  }
}

TEST(WeightedBasis, RoutesAgree) {
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {5, 3}, {4, 1}}) {
    std::vector<long> w;
    for (int i = 0; i < n; ++i) w.push_back((3 * i + 1) % 5);
    const WeightSystem ws(w, 2);
    const auto a = build_weighted_basis(n, d, ws, Route::kSubstitution);
    const auto b = build_weighted_basis(n, d, ws, Route::kPieri);
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      EXPECT_EQ(a.classes[i], b.classes[i]);
      EXPECT_TRUE(check_gkm(b.classes[i]).empty());
    }
  }
}

TEST(WeightedBasis, TrivialWeightsDegenerate) {
  const auto ordinary = build_ordinary_basis(5, 2);
  const auto weighted = build_weighted_basis(5, 2, WeightSystem::trivial(5), Route::kPieri);
  for (std::size_t i = 0; i < ordinary.classes.size(); ++i) {
    for (std::size_t mu = 0; mu < ordinary.classes.size(); ++mu) {
      EXPECT_EQ(ordinary.classes[i].value(mu).renamed(weighted_context(5)), weighted.classes[i].value(mu));
    }
  }
}

TEST(WeightedBasis, RejectsMismatchedWeights) {
  EXPECT_THROW(build_weighted_basis(5, 2, kSorted, Route::kPieri), DomainError);
}

TEST(WeightedPieri, IdAndCoefficients) {
  const auto rule = weighted_pieri(IndexSet(4, {3, 4}), kSorted);
  EXPECT_TRUE(rule.self.is_zero());
  ASSERT_EQ(rule.covers.size(), 1u);
  EXPECT_EQ(rule.covers[0].first, IndexSet(4, {2, 4}));
  EXPECT_EQ(rule.covers[0].second, Rational(1));
  const auto r13 = weighted_pieri(IndexSet(4, {1, 3}), kSorted);
  for (const auto& [cover, coeff] : r13.covers) EXPECT_EQ(coeff, Rational(2));
}

TEST(WuForm, Values) {
  // wu_(4,3) = (Yw4 - Yw3) - (1/6)(Yw3 + Yw4)
  EXPECT_EQ(wu_form({4, 3}, kSorted, 2).to_polynomial(),
            Y(4, 4) - Y(4, 3) - Rational(1, 6) * (Y(4, 3) + Y(4, 4)));
  EXPECT_EQ(wu_form({3, 1}, WeightSystem::trivial(4), 2).to_polynomial(), Y(4, 3) - Y(4, 1));
  EXPECT_EQ(w_alpha({2, 1}, kUnsorted), Rational(-2));
  EXPECT_THROW(wu_form({1, 2}, kSorted, 2), DomainError);
  EXPECT_THROW(wu_form({5, 2}, kSorted, 2), DomainError);
}

TEST(WuForm, Independent) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> w(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> ws(6);
    for (auto& x : ws) x = w(rng);
    EXPECT_NO_THROW(WuContext(WeightSystem(ws, 1 + trial % 3), 1 + trial % 5));
  }
}

TEST(WuIr, ClosedFormMatchesGeneratingProduct) {
  // Oracle: expand ∏(wu_α + (w(α)/w_id) Q) with Q as an actual variable.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(1, 5);
  const WeightSystem ws({0, 2, 3, 7, 8}, 2);
  std::vector<std::string> names = weighted_context(5)->names();
  names.push_back("Q");
  const auto ctx = VariableContext::make(names);
  const Rational wid = ws.total(IndexSet(5, {4, 5}));
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Pair> I;
    const int size = 1 + trial % 4;
    for (int s = 0; s < size; ++s) {
      int i = pick(rng), j = pick(rng);
      while (i == j) j = pick(rng);
      I.push_back({std::max(i, j), std::min(i, j)});
    }
    Polynomial gen = Polynomial::constant(ctx, 1);
    const Polynomial Q = Polynomial::variable(ctx, "Q");
    std::vector<Polynomial> embed;
    for (int v = 0; v < 5; ++v) embed.push_back(Polynomial::variable(ctx, static_cast<std::size_t>(v)));
    for (const Pair& a : I) {
      const Polynomial form = substitute(wu_form(a, ws, 2).to_polynomial(), embed, ctx);
      gen = gen * (form + (w_alpha(a, ws) / wid) * Q);
    }
    const auto all = wu_I_all(I, ws, 2);
    ASSERT_EQ(all.size(), I.size() + 1);
    for (int r = 0; r <= size; ++r) {
      // coefficient of Q^r
      std::vector<Term> picked;
      for (const Term& t : gen.terms()) {
        if (t.mono.exponent(5) != r) continue;
        Monomial m = t.mono;
        m.set_exponent(5, 0);
        picked.emplace_back(m, t.coeff);
      }
      const Polynomial expected = Polynomial::from_terms(weighted_context(5), picked);
      EXPECT_EQ(wu_I_r(I, r, ws, 2), expected);
      EXPECT_EQ(all[static_cast<std::size_t>(r)], expected);
    }
    EXPECT_THROW(wu_I_r(I, size + 1, ws, 2), DomainError);
  }
}

TEST(Kostka, ClosedFormMatchesIteratedPieri) {
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}}) {
    std::vector<long> w;
    for (int i = 0; i < n; ++i) w.push_back(i * i % 7);
    const WeightSystem ws(w, 1);
    const auto basis = build_weighted_basis(n, d, ws, Route::kPieri);
    const auto& g = *basis.graph;
    KostkaTable table(basis.graph, ws);
    for (std::size_t eta = 0; eta < g.size(); ++eta) {
      RestrictionVector power = basis.classes[eta];
      for (int r = 0; r <= 3; ++r) {
        if (r) power = pointwise_multiply(basis.classes[g.div()], power);
        const auto coeffs = expand_in_schubert_basis(power, basis);
        for (std::size_t nu = 0; nu < g.size(); ++nu) EXPECT_EQ(coeffs[nu], table(r, eta, nu));
      }
    }
  }
}

TEST(Kostka, SpecialValues) {
  const auto g = build_graph(4, 2);
  const IndexSet eta(4, {2, 3});
  const Polynomial gap = weighted_divisor_restriction(eta, kSorted);
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(kostka(r, eta, eta, kSorted), gap.pow(static_cast<unsigned>(r)));
  EXPECT_EQ(kostka(1, eta, IndexSet(4, {1, 3}), kSorted),
            Polynomial::constant(weighted_context(4), Rational(6) / kSorted.total(eta)));
  EXPECT_TRUE(kostka(0, eta, IndexSet(4, {1, 3}), kSorted).is_zero());
  EXPECT_TRUE(kostka(3, eta, IndexSet(4, {1, 4}), kSorted).is_zero());
}

TEST(Constants, WorkedExample) {
  const auto ordinary = build_ordinary_basis(4, 2);
  for (const WeightSystem& ws : {kSorted, kUnsorted, WeightSystem::trivial(4)}) {
    const auto e = oracle::gr24_example(ws);
    const auto basis = build_weighted_basis(4, 2, ws, Route::kPieri);
    const auto& g = *basis.graph;
    const IndexSet s23(4, {2, 3}), s14(4, {1, 4});
    const auto a = weighted_constants_gkm(s23, s23, basis);
    const auto b = weighted_constants_formula(s23, s14, ws, ordinary);
    EXPECT_EQ(a[g.index_of(s23)], e.c2323_23);
    EXPECT_EQ(a[g.index_of(IndexSet(4, {1, 3}))], e.c2323_13);
    EXPECT_EQ(a[g.index_of(IndexSet(4, {1, 2}))], e.c2323_12);
    EXPECT_EQ(b[g.index_of(IndexSet(4, {1, 3}))], e.c2314_13);
    EXPECT_EQ(b[g.index_of(IndexSet(4, {1, 2}))], e.c2314_12);
  }
}

TEST(Constants, RoutesAgreeAndVanish) {
  const WeightSystem ws({0, 1, 1, 4, 6}, 2);
  const auto ordinary = build_ordinary_basis(5, 2);
  const auto basis = build_weighted_basis(5, 2, ws, Route::kSubstitution, &ordinary);
  const auto& g = *basis.graph;
  ConstantsFormula formula(ordinary, ws);
  const auto gkm = constant_table_gkm(basis);
  const auto closed = constant_table_formula(formula);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t c = 0; c < g.size(); ++c) {
        const Polynomial& v = gkm.at(a, b, c);
        EXPECT_EQ(v, closed.at(a, b, c));
        if (!(g.leq(a, c) && g.leq(b, c))) EXPECT_TRUE(v.is_zero());
        if (!v.is_zero()) {
          EXPECT_TRUE(v.is_homogeneous());
          EXPECT_EQ(v.degree(), g.length(a) + g.length(b) - g.length(c));
        }
        EXPECT_TRUE(recursive_identity_residual(a, b, c, ws, gkm).is_zero());
      }
    }
    EXPECT_EQ(gkm.at(g.id(), a, a), Polynomial::constant(weighted_context(5), 1));
  }
}

TEST(Constants, PieriAsSpecialCase) {
  const auto basis = build_weighted_basis(5, 2, WeightSystem({2, 0, 3, 1, 5}, 2), Route::kPieri);
  const auto& g = *basis.graph;
  const auto table = constant_table_gkm(basis);
  for (std::size_t lam = 0; lam < g.size(); ++lam) {
    const auto rule = weighted_pieri(g.vertex(lam), *basis.weights);
    EXPECT_EQ(table.at(g.div(), lam, lam), rule.self);
    for (const auto& [cover, coeff] : rule.covers) {
      EXPECT_EQ(table.at(g.div(), lam, g.index_of(cover)), Polynomial::constant(weighted_context(5), coeff));
    }
  }
}

TEST(Constants, ResidualDetectsCorruption) {
  const auto basis = build_weighted_basis(4, 2, kSorted, Route::kPieri);
  auto table = constant_table_gkm(basis);
  const auto& g = *basis.graph;
  auto row = table.row(g.div(), g.div());
  row[g.top()] += Polynomial::constant(weighted_context(4), 1);
  table.set_row(g.div(), g.div(), row);
  bool found = false;
  for (std::size_t c = 0; c < g.size(); ++c) found |= !recursive_identity_residual(g.div(), g.div(), c, kSorted, table).is_zero();
  EXPECT_TRUE(found);
}

TEST(Positivity, CertificateAndNegativeControl) {
  const WuContext wu(kSorted, 2);
  const Polynomial wu1 = wu_form({2, 1}, kSorted, 2).to_polynomial();
  const auto neg = positivity_certificate(-wu1, wu);
  ASSERT_TRUE(neg);
  EXPECT_FALSE(neg->nonneg);
  EXPECT_EQ(neg->coefficients().at(UMultiset{1}), Rational(-1));
  EXPECT_FALSE(positivity_certificate(oracle::yw(4, {3, 4}), wu));
  const auto basis = build_weighted_basis(4, 2, kSorted, Route::kPieri);
  const auto table = constant_table_gkm(basis);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::size_t c = 0; c < 6; ++c) {
        const auto cert = positivity_certificate(table.at(a, b, c), wu);
        ASSERT_TRUE(cert);
        EXPECT_TRUE(cert->nonneg);
      }
    }
  }
}

TEST(NonEquivariant, WorkedValueAndAgreement) {
  const auto ordinary = build_ordinary_basis(4, 2);
  ConstantsFormula formula(ordinary, kSorted);
  const auto& g = *ordinary.graph;
  const std::size_t s23 = g.index_of(IndexSet(4, {2, 3}));
  const std::size_t s12 = g.index_of(IndexSet(4, {1, 2}));
  const auto chain = nonequivariant_constants_chain(s23, s23, formula);
  EXPECT_EQ(chain[s12], Rational(3, 2));  // 1 + 1/3 + (2/4)(1/3)
  const auto basis = build_weighted_basis(4, 2, kSorted, Route::kPieri);
  const auto table = constant_table_gkm(basis);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      EXPECT_EQ(nonequivariant_constants_chain(a, b, formula), nonequivariant_constants_limit(table.row(a, b), kSorted, 2));
    }
  }
  EXPECT_EQ(nonequivariant_constants_chain(g.id(), s23, formula)[s23], Rational(1));
}

TEST(Translation, HoldsVertexwise) {
  for (const WeightSystem& ws : {kSorted, kUnsorted}) {
    EXPECT_TRUE(translation_formula_failures(build_weighted_basis(4, 2, ws, Route::kPieri)).empty());
  }
}
