#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wschub/gkm.hpp"

namespace wschub {

/// Equivariant Schubert classes S̃_λ of Gr(d,n), flavor kOrdinary.
using OrdinaryBasis = SchubertBasis;

/// S̃_λ|_λ = ∏_{(k,l)∈inv(λ)} (y_{(k,l)λ} - y_λ) = ∏ (y_l - y_k).
Polynomial diagonal_restriction(const IndexSet& lambda);
/// The same product as a list of linear factors (empty for id).
std::vector<LinearForm> diagonal_factors(const IndexSet& lambda);

/// S̃_div|_μ = y_id - y_μ.
Polynomial divisor_restriction(const IndexSet& mu);

/// Full restriction table by descending induction on length: the top class
/// is its diagonal, and below it
///   (y_λ - y_ν)·S̃_λ|_ν = Σ_{λ'→λ} S̃_{λ'}|_ν   for ν > λ,
/// each division required to be exact (InexactDivision otherwise).
OrdinaryBasis build_ordinary_basis(int n, int d, std::size_t cap = kDefaultVertexCap);

/// c̃_{λμ}^ν for all ν, indexed by vertex.
std::vector<Polynomial> ordinary_constants(const IndexSet& lambda, const IndexSet& mu, const OrdinaryBasis& basis);

/// A multiset I of simple pairs (i+1,i), stored as the sorted list of i.
using UMultiset = std::vector<int>;

/// "(3,2)(4,3)" style.
std::string multiset_to_string(const UMultiset& I);

/// Canonical expansion c = Σ_I c(I) u_I in u_i = y_{i+1} - y_i.
struct UExpansion {
  int n = 0;
  std::map<UMultiset, Rational> entries;

  bool has_integer_coefficients() const;
  bool is_non_negative() const;
  /// Rebuilds Σ c(I) u_I as a y-polynomial.
  Polynomial to_polynomial() const;
};

/// u1..u_{n-1} with complement y1. Throws DomainError if c depends on y1 in
/// those coordinates (NOT_IN_SUBRING): c is then not a structure constant.
UExpansion u_expand(const Polynomial& c);

/// As u_expand but returning nullopt instead of throwing.
std::optional<UExpansion> try_u_expand(const Polynomial& c);

}  // namespace wschub
