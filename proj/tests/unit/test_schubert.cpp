#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wschub/error.hpp"
#include "wschub/schubert.hpp"

using namespace wschub;

namespace {

Polynomial y(int n, int i) { return Polynomial::variable(ordinary_context(n), static_cast<std::size_t>(i - 1)); }

/// Rewrites c with y_k = y_1 + u_1 + ... + u_{k-1}; the result must not
/// involve y_1 and gives the u-expansion by back-substitution.
Polynomial triangular_u(const Polynomial& c, int n) {
  std::vector<std::string> names{"y1"};
  for (int i = 1; i < n; ++i) names.push_back("u" + std::to_string(i));
  const auto ctx = VariableContext::make(names);
  std::vector<Polynomial> images;
  Polynomial acc = Polynomial::variable(ctx, 0);
  images.push_back(acc);
  for (int k = 2; k <= n; ++k) {
    acc += Polynomial::variable(ctx, static_cast<std::size_t>(k - 1));
    images.push_back(acc);
  }
  return substitute(c, images, ctx);
}

}  // namespace

TEST(OrdinaryBasis, Gr24Values) {
  const auto basis = build_ordinary_basis(4, 2);
  const auto s23 = basis[IndexSet(4, {2, 3})];
  EXPECT_EQ(s23.value(IndexSet(4, {2, 3})), (y(4, 4) - y(4, 2)) * (y(4, 4) - y(4, 3)));
  EXPECT_TRUE(s23.value(IndexSet(4, {1, 4})).is_zero());
  EXPECT_TRUE(s23.value(IndexSet(4, {2, 4})).is_zero());
  const auto div = basis[IndexSet(4, {2, 4})];
  for (const auto& mu : basis.graph->vertices()) EXPECT_EQ(div.value(mu), divisor_restriction(mu));
  EXPECT_EQ(divisor_restriction(IndexSet(4, {1, 3})), y(4, 4) - y(4, 1));
}

TEST(OrdinaryBasis, Diagonal) {
  EXPECT_EQ(diagonal_restriction(IndexSet(4, {1, 2})),
            (y(4, 3) - y(4, 1)) * (y(4, 4) - y(4, 1)) * (y(4, 3) - y(4, 2)) * (y(4, 4) - y(4, 2)));
  EXPECT_TRUE(diagonal_factors(IndexSet(4, {3, 4})).empty());
  const auto basis = build_ordinary_basis(5, 3);
  for (std::size_t i = 0; i < basis.graph->size(); ++i) {
    EXPECT_EQ(basis.classes[i].value(i), diagonal_restriction(basis.graph->vertex(i)));
    EXPECT_TRUE(check_gkm(basis.classes[i]).empty());
  }
}

TEST(OrdinaryConstants, Gr24Products) {
  const auto basis = build_ordinary_basis(4, 2);
  const auto& g = *basis.graph;
  const auto c = ordinary_constants(IndexSet(4, {2, 3}), IndexSet(4, {2, 3}), basis);
  EXPECT_EQ(c[g.index_of(IndexSet(4, {2, 3}))], (y(4, 4) - y(4, 2)) * (y(4, 4) - y(4, 3)));
  EXPECT_EQ(c[g.index_of(IndexSet(4, {1, 3}))], y(4, 4) - y(4, 3));
  EXPECT_EQ(c[g.index_of(IndexSet(4, {1, 2}))], Polynomial::constant(ordinary_context(4), 1));
  const auto d = ordinary_constants(IndexSet(4, {2, 3}), IndexSet(4, {1, 4}), basis);
  for (std::size_t nu = 0; nu < g.size(); ++nu) {
    if (g.vertex(nu) == IndexSet(4, {1, 3})) {
      EXPECT_EQ(d[nu], y(4, 4) - y(4, 1));
    } else {
      EXPECT_TRUE(d[nu].is_zero());
    }
  }
}

TEST(OrdinaryConstants, LittlewoodRichardsonDegreeZero) {
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {6, 3}, {6, 2}}) {
    const auto basis = build_ordinary_basis(n, d);
    const auto& g = *basis.graph;
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = a; b < g.size(); ++b) {
        const auto row = ordinary_constants(g.vertex(a), g.vertex(b), basis);
        for (std::size_t c = 0; c < g.size(); ++c) {
          if (g.length(a) + g.length(b) != g.length(c)) continue;
          const long lr = oracle::lr_coefficient(oracle::partition_of(g.vertex(a)), oracle::partition_of(g.vertex(b)),
                                                 oracle::partition_of(g.vertex(c)), d);
          EXPECT_EQ(row[c], Polynomial::constant(ordinary_context(n), lr));
        }
      }
    }
  }
}

TEST(UExpand, MatchesTriangularSubstitution) {
  const auto basis = build_ordinary_basis(5, 2);
  const auto& g = *basis.graph;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const auto row = ordinary_constants(g.vertex(a), g.vertex(b), basis);
      for (const Polynomial& c : row) {
        const UExpansion u = u_expand(c);
        EXPECT_TRUE(u.has_integer_coefficients());
        EXPECT_TRUE(u.is_non_negative());
        EXPECT_EQ(u.to_polynomial(), c);
        const Polynomial tri = triangular_u(c, 5);
        EXPECT_EQ(tri.degree_in(0), 0);
        for (const Term& t : tri.terms()) {
          UMultiset I;
          for (int i = 1; i < 5; ++i) {
            for (int e = 0; e < t.mono.exponent(static_cast<std::size_t>(i)); ++e) I.push_back(i);
          }
          ASSERT_TRUE(u.entries.count(I));
          EXPECT_EQ(u.entries.at(I), t.coeff);
        }
        EXPECT_EQ(u.entries.size(), tri.term_count());
      }
    }
  }
}

TEST(UExpand, RejectsOutsideSubring) {
  EXPECT_THROW(u_expand(y(4, 1)), DomainError);
  EXPECT_FALSE(try_u_expand(y(4, 2) + y(4, 1)));
  EXPECT_EQ(multiset_to_string({2, 3}), "(3,2)(4,3)");
}
