#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wschub/error.hpp"
#include "wschub/projective.hpp"
#include "wschub/weighted.hpp"

using namespace wschub;

TEST(StanleyReisner, BasisIsFaceMonomials) {
  for (int n = 3; n <= 5; ++n) {
    for (long a : {1L, 2L}) {
      std::vector<long> w;
      for (int i = 0; i < n; ++i) w.push_back((i * 2 + static_cast<int>(a)) % 4);
      const auto report = stanley_reisner_check(n, WeightSystem(w, a));
      EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures.front());
    }
  }
}

TEST(StanleyReisner, TopAndNextClass) {
  const WeightSystem ws({0, 0, 1, 1}, 1);
  const auto basis = build_weighted_basis(4, 1, ws, Route::kPieri);
  const auto& g = *basis.graph;
  for (std::size_t mu = 0; mu < g.size(); ++mu) {
    EXPECT_EQ(basis[IndexSet(4, {4})].value(mu), Polynomial::constant(weighted_context(4), 1));
    EXPECT_EQ(basis[IndexSet(4, {3})].value(mu), face_variable(4, g.vertex(mu)[0], ws));
  }
}

TEST(StanleyReisner, RejectsBadInput) {
  EXPECT_THROW(stanley_reisner_check(4, WeightSystem({0, 1, 2}, 1)), DomainError);
  EXPECT_THROW(stanley_reisner_check(1, WeightSystem({0}, 1)), DomainError);
}

TEST(Kawasaki, MatchesBruteForce) {
  for (const std::vector<long>& b : {std::vector<long>{1, 1, 2}, {2, 3, 4}, {1, 1, 1}, {6, 10, 15, 4}, {3}}) {
    const auto got = kawasaki_factors(b);
    const auto expected = oracle::kawasaki_l(b);
    ASSERT_EQ(got.l.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(got.l[k], mpz_class(static_cast<long>(expected[k])));
    EXPECT_EQ(got.l[0], 1);
    EXPECT_EQ(got.multiples[0], Rational(1));
  }
  const auto k = kawasaki_factors({1, 1, 2});
  EXPECT_EQ(k.l[1], 2);
  EXPECT_EQ(k.l[2], 2);
  EXPECT_EQ(k.multiples[1], Rational(1));  // 2 / b_3
  EXPECT_EQ(k.multiples[2], Rational(1));  // 2 / (b_2 b_3)
  for (const auto& m : kawasaki_factors({1, 1, 1}).multiples) EXPECT_EQ(m, Rational(1));
}

TEST(Kawasaki, RejectsNonPositive) {
  EXPECT_THROW(kawasaki_factors({0, 1}), DomainError);
  EXPECT_THROW(kawasaki_factors({}), DomainError);
}
