#include "wschub/projective.hpp"

#include "wschub/error.hpp"
#include "wschub/weighted.hpp"

namespace wschub {

namespace {

Rational b_of(int i, const WeightSystem& ws) { return Rational(ws.b(i)); }

}  // namespace

Polynomial face_variable(int i, int mu, const WeightSystem& ws) {
  const auto ctx = weighted_context(ws.n());
  if (i == mu) return Polynomial::zero(ctx);
  return Polynomial::variable(ctx, static_cast<std::size_t>(i - 1)) -
         (b_of(i, ws) / b_of(mu, ws)) * Polynomial::variable(ctx, static_cast<std::size_t>(mu - 1));
}

StanleyReisnerReport stanley_reisner_check(int n, const WeightSystem& ws) {
  if (n < 2) throw DomainError("weighted projective space needs n >= 2");
  if (ws.n() != n) throw DomainError("weight system does not match n");
  const WeightedBasis basis = build_weighted_basis(n, 1, ws, Route::kPieri);
  const MomentGraph& graph = *basis.graph;
  const auto ctx = weighted_context(n);
  StanleyReisnerReport report;
  report.n = n;

  auto vertex = [&](int k) { return graph.index_of(IndexSet(n, {k})); };
  auto monomial = [&](int k, int mu) {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (int i = k + 1; i <= n; ++i) p = p * face_variable(i, mu, ws);
    return p;
  };

  for (int k = 1; k <= n; ++k) {
    for (int mu = 1; mu <= n; ++mu) {
      if (!(basis.classes[vertex(k)].value(vertex(mu)) == monomial(k, mu))) {
        report.basis_matches = false;
        report.failures.push_back("wS~_" + std::to_string(k) + " at {" + std::to_string(mu) +
                                  "} differs from z_" + std::to_string(k + 1) + "..z_" + std::to_string(n));
      }
    }
  }

  const RestrictionVector& divisor = basis.classes[vertex(n - 1)];
  for (int k = 1; k <= n; ++k) {
    const RestrictionVector product = pointwise_multiply(divisor, basis.classes[vertex(k)]);
    const Rational ratio = b_of(n, ws) / b_of(k, ws);
    for (int mu = 1; mu <= n; ++mu) {
      Polynomial expected = (face_variable(n, mu, ws) - ratio * face_variable(k, mu, ws)) * monomial(k, mu);
      if (k > 1) expected += ratio * monomial(k - 1, mu);
      if (!(product.value(vertex(mu)) == expected)) {
        report.pieri_matches = false;
        report.failures.push_back("Pieri product for k=" + std::to_string(k) + " fails at {" + std::to_string(mu) +
                                  "}");
      }
    }
    if (k > 1) {
      const auto coeffs = expand_in_schubert_basis(product, basis);
      if (!(coeffs[vertex(k - 1)] == Polynomial::constant(ctx, ratio))) {
        report.constants_match = false;
        report.failures.push_back("coefficient of wS~_" + std::to_string(k - 1) + " is " +
                                  coeffs[vertex(k - 1)].to_string() + ", expected " + rational_to_string(ratio));
      }
    }
  }
  return report;
}

KawasakiFactors kawasaki_factors(const std::vector<long>& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) throw DomainError("kawasaki_factors needs at least one entry");
  if (n > 30) throw DomainError("kawasaki_factors supports at most 30 entries");
  for (long v : b) {
    if (v < 1) throw DomainError("entries of b must be positive integers, got " + std::to_string(v));
  }
  KawasakiFactors out;
  out.l.assign(static_cast<std::size_t>(n), mpz_class(1));
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    mpz_class product = 1;
    mpz_class g = 0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1ul)) continue;
      ++k;
      product *= b[static_cast<std::size_t>(i)];
      g = gcd(g, mpz_class(b[static_cast<std::size_t>(i)]));
    }
    mpz_class& slot = out.l[static_cast<std::size_t>(k - 1)];
    slot = lcm(slot, mpz_class(product / g));
  }
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      out.multiples.emplace_back(1);
      continue;
    }
    mpz_class tail = 1;
    for (int i = n - k + 2; i <= n; ++i) tail *= b[static_cast<std::size_t>(i - 1)];
    Rational m(out.l[static_cast<std::size_t>(k - 1)], tail);
    m.canonicalize();
    out.multiples.push_back(m);
  }
  return out;
}

}  // namespace wschub
