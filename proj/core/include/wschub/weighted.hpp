#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wschub/gkm.hpp"
#include "wschub/kostka.hpp"
#include "wschub/schubert.hpp"
#include "wschub/weights.hpp"

namespace wschub {

/// Weighted Schubert classes wS̃_λ of wGr(d,n), flavor kWeighted.
using WeightedBasis = SchubertBasis;

/// Restriction of a y-polynomial to vertex μ in Yw-coordinates:
/// y_i ↦ Yw_i - (w_i/w_μ) Yw_μ.
LinearSubstitution vertex_substitution(const IndexSet& mu, const WeightSystem& ws);

/// Yw_λ = Σ_{i∈λ} Yw_i.
Polynomial weighted_subset_sum(const IndexSet& lambda);

/// wS̃_λ|_μ obtained by pushing S̃_λ|_μ through vertex_substitution(μ).
Polynomial weighted_restriction_by_substitution(const IndexSet& lambda, const IndexSet& mu,
                                                const OrdinaryBasis& ordinary, const WeightSystem& ws);

/// ∏_{(k,l)∈inv(λ)} (Yw_{(k,l)λ} - (w_{(k,l)λ}/w_λ) Yw_λ), as factors.
std::vector<LinearForm> weighted_diagonal_factors(const IndexSet& lambda, const WeightSystem& ws);
Polynomial weighted_diagonal_restriction(const IndexSet& lambda, const WeightSystem& ws);

/// Yw_id - (w_id/w_μ) Yw_μ: the divisor class at μ.
Polynomial weighted_divisor_restriction(const IndexSet& mu, const WeightSystem& ws);

enum class Route { kSubstitution, kPieri };

/// Full weighted restriction table.
///  - kSubstitution maps the ordinary table vertex by vertex (builds its
///    own ordinary basis when `ordinary` is null).
///  - kPieri solves the weighted Pieri recursion
///      ((w_id/w_λ)Yw_λ - (w_id/w_ν)Yw_ν)·wS̃_λ|_ν = (w_id/w_λ) Σ_{λ'→λ} wS̃_{λ'}|_ν
///    downward from the top class, never touching the ordinary table.
/// Throws InexactDivision if a Pieri step leaves a remainder.
WeightedBasis build_weighted_basis(int n, int d, const WeightSystem& ws, Route route,
                                   const OrdinaryBasis* ordinary = nullptr, std::size_t cap = kDefaultVertexCap);

struct PieriExpansion {
  Polynomial self;                                   // Yw_id - (w_id/w_λ) Yw_λ
  std::vector<std::pair<IndexSet, Rational>> covers;  // λ' → w_id/w_λ
};

PieriExpansion weighted_pieri(const IndexSet& lambda, const WeightSystem& ws);

/// Pair α = (i,j) with i > j.
struct Pair {
  int i;
  int j;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// wu_α = (Yw_i - Yw_j) - ((w_i - w_j)/w_id) Yw_id. Throws DomainError unless n >= i > j >= 1.
LinearForm wu_form(Pair alpha, const WeightSystem& ws, int d);
/// w(α) = w_i - w_j.
Rational w_alpha(Pair alpha, const WeightSystem& ws);

/// wu_I^(r) by the closed form: sum over r-element index subsets S of I of
/// ∏_{s∈S} w(α_s)/w_id · ∏_{s∉S} wu_{α_s}. Throws DomainError unless 0 <= r <= |I|.
Polynomial wu_I_r(std::span<const Pair> I, int r, const WeightSystem& ws, int d);

/// All of wu_I^(0..|I|) at once, read off the generating product
/// ∏ (wu_α + (w(α)/w_id) Q).
std::vector<Polynomial> wu_I_all(std::span<const Pair> I, const WeightSystem& ws, int d);

std::vector<Pair> simple_pairs(const UMultiset& I);

/// Structure constants indexed [λ][μ][ν] by vertex, one table per route.
class ConstantTable {
 public:
  ConstantTable(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> ws);

  const GraphPtr& graph() const { return graph_; }
  Flavor flavor() const { return flavor_; }
  const std::optional<WeightSystem>& weights() const { return ws_; }

  bool has(std::size_t lam, std::size_t mu) const { return !rows_[lam * graph_->size() + mu].empty(); }
  const std::vector<Polynomial>& row(std::size_t lam, std::size_t mu) const;
  const Polynomial& at(std::size_t lam, std::size_t mu, std::size_t nu) const { return row(lam, mu)[nu]; }
  void set_row(std::size_t lam, std::size_t mu, std::vector<Polynomial> values);

 private:
  GraphPtr graph_;
  Flavor flavor_;
  std::optional<WeightSystem> ws_;
  std::vector<std::vector<Polynomial>> rows_;
};

/// Weighted constants via the closed formula
///   wc̃_{λμ}^ν = Σ_{ν≥η≥λ,μ} Σ_I Σ_r c(λ,μ,η;I) K_{1^r η}^ν wu_I^(r),
/// with c(λ,μ,η;I) the canonical u-expansion of the ordinary constants.
/// Caches Kostka coefficients, wu_I^(r) and ordinary constants between calls.
class ConstantsFormula {
 public:
  ConstantsFormula(const OrdinaryBasis& ordinary, WeightSystem ws);

  std::vector<Polynomial> constants(const IndexSet& lambda, const IndexSet& mu);
  std::vector<Polynomial> constants(std::size_t lam, std::size_t mu);

  /// c̃_{λμ}^η and its u-expansion for every η.
  const std::vector<Polynomial>& ordinary_row(std::size_t lam, std::size_t mu);
  const UExpansion& u_expansion(std::size_t lam, std::size_t mu, std::size_t eta);

  KostkaTable& kostka() { return kostka_; }
  const WeightSystem& weights() const { return ws_; }

 private:
  const std::vector<Polynomial>& wu_powers(const UMultiset& I);

  const OrdinaryBasis& ordinary_;
  WeightSystem ws_;
  KostkaTable kostka_;
  std::map<UMultiset, std::vector<Polynomial>> wu_cache_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> ordinary_cache_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, UExpansion> u_cache_;
};

std::vector<Polynomial> weighted_constants_formula(const IndexSet& lambda, const IndexSet& mu,
                                                   const WeightSystem& ws, const OrdinaryBasis& ordinary);

/// Weighted constants via pointwise product and triangular expansion.
std::vector<Polynomial> weighted_constants_gkm(const IndexSet& lambda, const IndexSet& mu,
                                               const WeightedBasis& basis);

/// Every pair (λ,μ), computed with the GKM route on `basis`.
ConstantTable constant_table_gkm(const SchubertBasis& basis);
/// Every pair (λ,μ), computed with the closed formula.
ConstantTable constant_table_formula(ConstantsFormula& formula);

/// (wS̃_div|_ν - wS̃_div|_λ) wc̃_{λμ}^ν
///   - (Σ_{λ'→λ} (w_id/w_λ) wc̃_{λ'μ}^ν - Σ_{ν→ν'} (w_id/w_{ν'}) wc̃_{λμ}^{ν'}).
/// Identically zero for a correct table.
Polynomial recursive_identity_residual(std::size_t lam, std::size_t mu, std::size_t nu, const WeightSystem& ws,
                                       const ConstantTable& table);

/// Non-equivariant constants wc_{λμ}^ν by the chain sum
///   Σ_{ν≥η≥λ,μ} Σ_{chains ν→…→η} c̃_{λμ}^η(u_i = w_{i+1}-w_i) / (w_{ν¹}⋯w_{νˡ})
/// when l(λ)+l(μ) = l(ν), and 0 otherwise. Indexed by vertex.
std::vector<Rational> nonequivariant_constants_chain(std::size_t lam, std::size_t mu, ConstantsFormula& formula);

/// The same numbers as the wu → 0 limit of the equivariant constants: the
/// constant term of each wc̃ written in wu_1..wu_{n-1}. Throws DomainError if
/// some constant is not in the wu-subring.
std::vector<Rational> nonequivariant_constants_limit(const std::vector<Polynomial>& equivariant,
                                                     const WeightSystem& ws, int d);

/// Vertexwise check of y_i·1 = (Yw_i - (w_i/w_id)Yw_id)·1 + (w_i/w_id) wS̃_div
/// for every i; returns the offending i (empty when the identity holds).
std::vector<int> translation_formula_failures(const WeightedBasis& basis);

}  // namespace wschub
