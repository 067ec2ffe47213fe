#include "wschub/schubert.hpp"

#include "wschub/error.hpp"

namespace wschub {

std::vector<LinearForm> diagonal_factors(const IndexSet& lambda) {
  const auto ctx = ordinary_context(lambda.n());
  const Polynomial y_lambda = subset_sum(ctx, lambda);
  std::vector<LinearForm> out;
  for (const Inversion& inv : inversions(lambda)) {
    out.push_back(LinearForm::from_polynomial(subset_sum(ctx, apply_inversion(lambda, inv)) - y_lambda));
  }
  return out;
}

Polynomial diagonal_restriction(const IndexSet& lambda) {
  Polynomial p = Polynomial::constant(ordinary_context(lambda.n()), 1);
  for (const LinearForm& f : diagonal_factors(lambda)) p = p * f.to_polynomial();
  return p;
}

Polynomial divisor_restriction(const IndexSet& mu) {
  const auto ctx = ordinary_context(mu.n());
  const auto id = distinguished_elements(mu.n(), mu.d()).id;
  return subset_sum(ctx, id) - subset_sum(ctx, mu);
}

OrdinaryBasis build_ordinary_basis(int n, int d, std::size_t cap) {
  const GraphPtr graph = build_graph(n, d, cap);
  const auto ctx = ordinary_context(n);
  const std::size_t count = graph->size();
  std::vector<std::vector<Polynomial>> table(count, std::vector<Polynomial>(count, Polynomial::zero(ctx)));
  std::vector<Polynomial> y_sum;
  for (const auto& v : graph->vertices()) y_sum.push_back(subset_sum(ctx, v));

  const auto& order = graph->linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t lam = *it;
    table[lam][lam] = diagonal_restriction(graph->vertex(lam));
    for (std::size_t nu = 0; nu < count; ++nu) {
      if (nu == lam || !graph->leq(lam, nu)) continue;
      Polynomial rhs = Polynomial::zero(ctx);
      for (std::size_t cover : graph->covers(lam)) rhs += table[cover][nu];
      auto q = exact_divide(rhs, LinearForm::from_polynomial(y_sum[lam] - y_sum[nu]));
      if (!q) {
        throw InexactDivision("Pieri recursion for S~_{" + graph->vertex(lam).to_string() + "} at {" +
                              graph->vertex(nu).to_string() + "} left a remainder");
      }
      table[lam][nu] = std::move(*q);
    }
  }

  OrdinaryBasis basis{graph, Flavor::kOrdinary, std::nullopt, {}, {}};
  for (std::size_t lam = 0; lam < count; ++lam) {
    basis.classes.emplace_back(graph, Flavor::kOrdinary, std::nullopt, std::move(table[lam]));
    basis.diagonal_factors.push_back(diagonal_factors(graph->vertex(lam)));
  }
  return basis;
}

std::vector<Polynomial> ordinary_constants(const IndexSet& lambda, const IndexSet& mu, const OrdinaryBasis& basis) {
  const auto product = pointwise_multiply(basis[lambda], basis[mu]);
  return expand_in_schubert_basis(product, basis);
}

std::string multiset_to_string(const UMultiset& I) {
  if (I.empty()) return "{}";
  std::string out;
  for (int i : I) out += "(" + std::to_string(i + 1) + "," + std::to_string(i) + ")";
  return out;
}

bool UExpansion::has_integer_coefficients() const {
  for (const auto& [I, c] : entries) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool UExpansion::is_non_negative() const {
  for (const auto& [I, c] : entries) {
    if (c < 0) return false;
  }
  return true;
}

Polynomial UExpansion::to_polynomial() const {
  const auto ctx = ordinary_context(n);
  Polynomial total = Polynomial::zero(ctx);
  for (const auto& [I, c] : entries) {
    Polynomial term = Polynomial::constant(ctx, c);
    for (int i : I) {
      term = term * (Polynomial::variable(ctx, static_cast<std::size_t>(i)) -
                     Polynomial::variable(ctx, static_cast<std::size_t>(i - 1)));
    }
    total += term;
  }
  return total;
}

std::optional<UExpansion> try_u_expand(const Polynomial& c) {
  const ContextPtr& ctx = c.context();
  const std::size_t n = ctx->size();
  std::vector<NamedForm> forms;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Rational> coeffs(n, Rational(0));
    coeffs[i] = 1;
    coeffs[i - 1] = -1;
    forms.push_back({"u" + std::to_string(i), LinearForm(ctx, std::move(coeffs))});
  }
  std::vector<Rational> y1(n, Rational(0));
  y1[0] = 1;
  const NamedForm complement[] = {{"y1", LinearForm(ctx, std::move(y1))}};
  auto expanded = expand_in_forms(c, forms, complement);
  if (!expanded) return std::nullopt;

  UExpansion out;
  out.n = static_cast<int>(n);
  for (const Term& t : expanded->terms()) {
    UMultiset I;
    for (std::size_t v = 0; v + 1 < n; ++v) {
      for (int e = t.mono.exponent(v); e > 0; --e) I.push_back(static_cast<int>(v) + 1);
    }
    out.entries.emplace(std::move(I), t.coeff);
  }
  return out;
}

UExpansion u_expand(const Polynomial& c) {
  auto out = try_u_expand(c);
  if (!out) throw DomainError("polynomial is not in the subring generated by u_1..u_{n-1}: " + c.to_string());
  return *out;
}

}  // namespace wschub
