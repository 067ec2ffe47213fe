#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wschub/poly.hpp"
#include "wschub/schubert.hpp"
#include "wschub/weights.hpp"

namespace wschub {

/// The forms wu_1..wu_{n-1} (wu_i = wu_{(i+1,i)}) together with the
/// complement Yw_id. Construction verifies that the wu_i are independent and
/// that adding Yw_id gives a basis of the degree-one forms.
class WuContext {
 public:
  /// Throws DomainError if the independence checks fail.
  WuContext(const WeightSystem& ws, int d);

  const WeightSystem& weights() const { return ws_; }
  const std::vector<NamedForm>& forms() const { return forms_; }
  const NamedForm& complement() const { return complement_.front(); }

  /// p written in wu_1..wu_{n-1}, or nullopt if Yw_id survives.
  std::optional<Polynomial> expand(const Polynomial& p) const;

 private:
  WeightSystem ws_;
  std::vector<NamedForm> forms_;
  std::vector<NamedForm> complement_;
};

struct PositivityCertificate {
  Polynomial in_wu;  // context wu1..wu_{n-1}
  bool nonneg;

  /// Monomials keyed like UMultiset (wu_2 wu_3^2 -> {2,3,3}).
  std::map<UMultiset, Rational> coefficients() const;
};

/// nullopt when p is not a polynomial in the wu_i (NOT_IN_SUBRING).
std::optional<PositivityCertificate> positivity_certificate(const Polynomial& p, const WuContext& wu);

}  // namespace wschub
