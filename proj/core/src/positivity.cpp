#include "wschub/positivity.hpp"

#include "wschub/error.hpp"
#include "wschub/weighted.hpp"

namespace wschub {

WuContext::WuContext(const WeightSystem& ws, int d) : ws_(ws) {
  const int n = ws.n();
  const auto id = distinguished_elements(n, d).id;
  for (int i = 1; i < n; ++i) forms_.push_back({"wu" + std::to_string(i), wu_form({i + 1, i}, ws, d)});
  complement_.push_back({"Yw_id", LinearForm::from_polynomial(weighted_subset_sum(id))});

  std::vector<LinearForm> all;
  for (const auto& f : forms_) all.push_back(f.form);
  if (linear_rank(all) != forms_.size()) throw DomainError("wu forms are linearly dependent");
  all.push_back(complement_.front().form);
  if (linear_rank(all) != all.size()) throw DomainError("wu forms together with Yw_id are not a basis");
}

std::optional<Polynomial> WuContext::expand(const Polynomial& p) const {
  return expand_in_forms(p, forms_, complement_);
}

std::map<UMultiset, Rational> PositivityCertificate::coefficients() const {
  std::map<UMultiset, Rational> out;
  const std::size_t vars = in_wu.context()->size();
  for (const Term& t : in_wu.terms()) {
    UMultiset I;
    for (std::size_t v = 0; v < vars; ++v) {
      for (int e = t.mono.exponent(v); e > 0; --e) I.push_back(static_cast<int>(v) + 1);
    }
    out.emplace(std::move(I), t.coeff);
  }
  return out;
}

std::optional<PositivityCertificate> positivity_certificate(const Polynomial& p, const WuContext& wu) {
  auto expanded = wu.expand(p);
  if (!expanded) return std::nullopt;
  bool nonneg = true;
  for (const Term& t : expanded->terms()) {
    if (t.coeff < 0) nonneg = false;
  }
  return PositivityCertificate{std::move(*expanded), nonneg};
}

}  // namespace wschub
