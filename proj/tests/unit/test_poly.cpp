#include <gtest/gtest.h>

#include <map>
#include <random>

#include "wschub/error.hpp"
#include "wschub/poly.hpp"

using namespace wschub;

namespace {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial random_poly(std::mt19937_64& rng, const ContextPtr& ctx, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t v = 0; v < ctx->size(); ++v) m.set_exponent(v, e(rng) % 3);
    out.emplace_back(m, frac(c(rng), den(rng)));
  }
  return Polynomial::from_terms(ctx, out);
}

/// Dense reference product over exponent vectors.
std::map<std::vector<int>, Rational> naive_product(const Polynomial& a, const Polynomial& b) {
  std::map<std::vector<int>, Rational> out;
  const std::size_t n = a.context()->size();
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      std::vector<int> e(n);
      for (std::size_t v = 0; v < n; ++v) e[v] = s.mono.exponent(v) + t.mono.exponent(v);
      out[e] += s.coeff * t.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::vector<int>, Rational> as_map(const Polynomial& p) {
  std::map<std::vector<int>, Rational> out;
  for (const Term& t : p.terms()) {
    std::vector<int> e(p.context()->size());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = t.mono.exponent(v);
    out[e] = t.coeff;
  }
  return out;
}

}  // namespace

TEST(Rational, PrintAndParse) {
  EXPECT_EQ(rational_to_string(Rational(3)), "3/1");
  EXPECT_EQ(rational_to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(Context, Interned) {
  EXPECT_EQ(ordinary_context(4), ordinary_context(4));
  EXPECT_EQ(weighted_context(3)->name(0), "Yw1");
  EXPECT_EQ(cone_context(3)->name(3), "z");
  EXPECT_THROW(VariableContext::make({"a", "a"}), DomainError);
  EXPECT_THROW(VariableContext::make({}), DomainError);
}

TEST(Monomial, GradedLexOrder) {
  Monomial x1, x2, x1sq;
  x1.set_exponent(0, 1);
  x2.set_exponent(1, 1);
  x1sq.set_exponent(0, 2);
  EXPECT_GT(x1, x2);
  EXPECT_GT(x2 * x2, x1);  // degree first
  EXPECT_GT(x1sq, x1 * x2);
  EXPECT_EQ((x1 * x2).degree(), 2);
}

TEST(Polynomial, ProductMatchesNaive) {
  std::mt19937_64 rng(7);
  const auto ctx = ordinary_context(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_poly(rng, ctx, 1 + trial % 7, 3);
    const Polynomial b = random_poly(rng, ctx, 1 + trial % 5, 3);
    EXPECT_EQ(as_map(a * b), naive_product(a, b));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(11);
  const auto ctx = weighted_context(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_poly(rng, ctx, 4, 2);
    const Polynomial b = random_poly(rng, ctx, 3, 2);
    const Polynomial c = random_poly(rng, ctx, 3, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Polynomial, ContextMismatchThrows) {
  const Polynomial a = Polynomial::variable(ordinary_context(3), 0);
  const Polynomial b = Polynomial::variable(weighted_context(3), 0);
  EXPECT_THROW(a + b, ContextMismatch);
}

TEST(ExactDivide, RecoversFactor) {
  std::mt19937_64 rng(3);
  const auto ctx = ordinary_context(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> coeffs(5);
    for (auto& x : coeffs) x = frac(c(rng), 1 + trial % 3);
    coeffs[static_cast<std::size_t>(trial % 5)] += 1;
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r == 0; })) continue;
    const LinearForm f(ctx, coeffs);
    const Polynomial q = random_poly(rng, ctx, 6, 3);
    const auto back = exact_divide(q * f.to_polynomial(), f);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, q);
  }
}

TEST(ExactDivide, DetectsRemainder) {
  const auto ctx = ordinary_context(3);
  const Polynomial y1 = Polynomial::variable(ctx, 0);
  const Polynomial y2 = Polynomial::variable(ctx, 1);
  const LinearForm f = LinearForm::from_polynomial(y1 - y2);
  EXPECT_FALSE(exact_divide(y1 * y2 + Polynomial::constant(ctx, 1), f));
  EXPECT_FALSE(exact_divide(y1, f));
  EXPECT_FALSE(exact_divide(Polynomial::constant(ctx, 2), f));
  EXPECT_TRUE(exact_divide(Polynomial::zero(ctx), f)->is_zero());
  EXPECT_EQ(*exact_divide(y1 * y1 - y2 * y2, f), y1 + y2);
}

TEST(Substitute, AgreesWithEvaluation) {
  std::mt19937_64 rng(5);
  const auto src = ordinary_context(3);
  const auto dst = weighted_context(2);
  const Polynomial a = Polynomial::variable(dst, 0);
  const Polynomial b = Polynomial::variable(dst, 1);
  const std::vector<Polynomial> images{a + b, a * Rational(2) - b, b * Rational(1, 3)};
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_poly(rng, src, 5, 3);
    const Polynomial s = substitute(p, images, dst);
    const std::vector<Rational> pt{frac(trial + 1, 2), frac(-trial, 3)};
    std::vector<Rational> image_pt;
    for (const auto& img : images) image_pt.push_back(img.evaluate(pt));
    EXPECT_EQ(s.evaluate(pt), p.evaluate(image_pt));
  }
}

TEST(ExpandInForms, RoundTrip) {
  const auto ctx = ordinary_context(3);
  const Polynomial y1 = Polynomial::variable(ctx, 0), y2 = Polynomial::variable(ctx, 1),
                   y3 = Polynomial::variable(ctx, 2);
  const std::vector<NamedForm> forms{{"u1", LinearForm::from_polynomial(y2 - y1)},
                                     {"u2", LinearForm::from_polynomial(y3 - y2)}};
  const std::vector<NamedForm> complement{{"y1", LinearForm::from_polynomial(y1)}};
  const auto got = expand_in_forms((y3 - y1) * (y3 - y2), forms, complement);
  ASSERT_TRUE(got);
  const auto& uctx = got->context();
  const Polynomial u1 = Polynomial::variable(uctx, "u1"), u2 = Polynomial::variable(uctx, "u2");
  EXPECT_EQ(*got, (u1 + u2) * u2);
  EXPECT_FALSE(expand_in_forms(y1 * y2, forms, complement));
}

TEST(ReduceModulo, KillsIdeal) {
  const auto ctx = ordinary_context(3);
  const Polynomial y1 = Polynomial::variable(ctx, 0), y2 = Polynomial::variable(ctx, 1);
  const LinearForm f[] = {LinearForm::from_polynomial(y1 - y2)};
  EXPECT_TRUE(reduce_modulo(y1 * y1 - y2 * y2, f).is_zero());
  EXPECT_FALSE(reduce_modulo(y1 + y2, f).is_zero());
}

TEST(Matrix, InverseAndRank) {
  const auto inv = invert_matrix({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
  ASSERT_TRUE(inv);
  EXPECT_EQ((*inv)[0][0], Rational(1));
  EXPECT_EQ((*inv)[0][1], Rational(-1));
  EXPECT_FALSE(invert_matrix({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}));
  const auto ctx = ordinary_context(2);
  const LinearForm forms[] = {LinearForm(ctx, {1, 1}), LinearForm(ctx, {2, 2})};
  EXPECT_EQ(linear_rank(forms), 1u);
}
