#include <gtest/gtest.h>

#include "wschub/combinat.hpp"
#include "wschub/error.hpp"

using namespace wschub;

namespace {

int brute_length(const IndexSet& s) {
  int count = 0;
  for (int k : s.elements()) {
    for (int l = k + 1; l <= s.n(); ++l) count += s.contains(l) ? 0 : 1;
  }
  return count;
}

}  // namespace

TEST(IndexSet, ParsesAndPrints) {
  const IndexSet s = IndexSet::parse(5, "1,3");
  EXPECT_EQ(s.to_string(), "1,3");
  EXPECT_EQ(s.compact(), "13");
  EXPECT_EQ(s.binary_string(), "10100");
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(IndexSet, RejectsMalformed) {
  EXPECT_THROW(IndexSet(4, {3, 1}), DomainError);
  EXPECT_THROW(IndexSet(4, {1, 5}), DomainError);
  EXPECT_THROW(IndexSet(4, {1, 2, 3, 4}), DomainError);
  EXPECT_THROW(IndexSet::parse(4, "1,,2"), DomainError);
  EXPECT_THROW(IndexSet::parse(4, "a"), DomainError);
}

TEST(Enumerate, CountsAndOrder) {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      const auto all = enumerate_index_sets(n, d);
      ASSERT_EQ(all.size(), binomial(n, d));
      for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
    }
  }
  EXPECT_EQ(enumerate_index_sets(4, 2).front().to_string(), "1,2");
}

TEST(Enumerate, CapAndDomain) {
  EXPECT_THROW(enumerate_index_sets(6, 3, 19), ResourceError);
  EXPECT_NO_THROW(enumerate_index_sets(6, 3, 20));
  EXPECT_THROW(enumerate_index_sets(4, 0), DomainError);
  EXPECT_THROW(enumerate_index_sets(4, 4), DomainError);
  EXPECT_THROW(enumerate_index_sets(kMaxAmbient + 1, 2), ResourceError);
}

TEST(Length, MatchesInversionCount) {
  for (const auto& s : enumerate_index_sets(7, 3)) {
    EXPECT_EQ(s.length(), brute_length(s));
    EXPECT_EQ(static_cast<int>(inversions(s).size()), s.length());
  }
}

TEST(Distinguished, IdAndDivisor) {
  const auto dist = distinguished_elements(4, 2);
  EXPECT_EQ(dist.id.to_string(), "3,4");
  EXPECT_EQ(dist.div.to_string(), "2,4");
  EXPECT_EQ(dist.id.length(), 0);
  EXPECT_EQ(dist.div.length(), 1);
  for (const auto& s : enumerate_index_sets(6, 3)) EXPECT_TRUE(bruhat_leq(distinguished_elements(6, 3).id, s));
}

TEST(Bruhat, TopIsMaximum) {
  const IndexSet top(5, {1, 2});
  for (const auto& s : enumerate_index_sets(5, 2)) EXPECT_TRUE(bruhat_leq(s, top));
  EXPECT_FALSE(bruhat_leq(IndexSet(4, {1, 4}), IndexSet(4, {2, 3})));
  EXPECT_FALSE(bruhat_leq(IndexSet(4, {2, 3}), IndexSet(4, {1, 4})));
}

TEST(Covers, MatchBruteForce) {
  for (int n = 3; n <= 7; ++n) {
    for (int d = 1; d < n; ++d) {
      const auto all = enumerate_index_sets(n, d);
      for (const auto& s : all) {
        std::vector<IndexSet> expected;
        for (const auto& t : all) {
          if (bruhat_leq(s, t) && t.length() == s.length() + 1) expected.push_back(t);
        }
        auto got = covering_elements(s);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected) << s.to_string();
        for (const auto& c : got) {
          const auto below = covered_elements(c);
          EXPECT_NE(std::find(below.begin(), below.end(), s), below.end());
        }
      }
    }
  }
}

TEST(Inversion, ApplyRaisesLength) {
  const IndexSet s(5, {1, 3});
  for (const Inversion& inv : inversions(s)) {
    const IndexSet moved = apply_inversion(s, inv);
    EXPECT_TRUE(moved.contains(inv.l));
    EXPECT_FALSE(moved.contains(inv.k));
  }
  EXPECT_THROW(apply_inversion(s, {2, 4}), DomainError);
}
