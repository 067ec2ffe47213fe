#pragma once

#include <string>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/weights.hpp"

namespace wschub {

/// Outcome of comparing the weighted Schubert basis of wGr(1,n) (weighted
/// projective space) with the face-ring monomials z_{k+1}⋯z_n, where
/// z_i|_μ = Yw_i - (b_i/b_μ) Yw_μ and b_i = w_i + a.
struct StanleyReisnerReport {
  int n = 0;
  bool basis_matches = true;      // wS̃_k|_μ == ∏_{i>k} z_i|_μ for all k, μ
  bool pieri_matches = true;      // wS̃_{n-1}·wS̃_k == (z_n - (b_n/b_k) z_k) wS̃_k + (b_n/b_k) wS̃_{k-1}
  bool constants_match = true;    // GKM coefficient of wS̃_{k-1} equals b_n/b_k
  std::vector<std::string> failures;

  bool ok() const { return basis_matches && pieri_matches && constants_match; }
};

/// z_i restricted to vertex {μ}.
Polynomial face_variable(int i, int mu, const WeightSystem& ws);

/// Throws DomainError unless n >= 2 and ws has n weights (d is always 1).
StanleyReisnerReport stanley_reisner_check(int n, const WeightSystem& ws);

struct KawasakiFactors {
  std::vector<mpz_class> l;         // l_1..l_n
  std::vector<Rational> multiples;  // m_1 = 1, m_k = l_k / (b_{n-k+2}⋯b_n)
};

/// l_k = lcm over k-subsets S of (∏_{i∈S} b_i) / gcd(b_i : i∈S). Rational
/// factors only. Throws DomainError on an empty list or an entry below 1.
KawasakiFactors kawasaki_factors(const std::vector<long>& b);

}  // namespace wschub
