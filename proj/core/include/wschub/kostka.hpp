#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "wschub/gkm.hpp"
#include "wschub/weights.hpp"

namespace wschub {

/// Weighted Kostka coefficients K_{1^r η}^ν: the coefficient of wS̃_ν in
/// (wS̃_div)^r·wS̃_η. Given by a sum over saturated chains
/// ν = ν⁰ → ν¹ → … → νˡ = η and compositions (j_0..j_l) of r - l:
///
///   (w_ν/w_id) ∏_q (w_id/w_{ν^q}) (Yw_id - (w_id/w_{ν^q}) Yw_{ν^q})^{j_q}.
///
/// Chains and coefficients are memoized per table; a table is not meant to
/// be shared between threads.
class KostkaTable {
 public:
  KostkaTable(GraphPtr graph, WeightSystem ws);

  const GraphPtr& graph() const { return graph_; }
  const WeightSystem& weights() const { return ws_; }

  /// Vertex indices of every saturated chain from ν down to η (ν first).
  const std::vector<std::vector<std::size_t>>& chains(std::size_t nu, std::size_t eta);

  const Polynomial& operator()(int r, std::size_t eta, std::size_t nu);

 private:
  const Polynomial& divisor_gap(std::size_t v);

  GraphPtr graph_;
  WeightSystem ws_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> chains_;
  std::map<std::tuple<int, std::size_t, std::size_t>, Polynomial> values_;
  std::map<std::size_t, Polynomial> gaps_;
};

Polynomial kostka(int r, const IndexSet& eta, const IndexSet& nu, const WeightSystem& ws);

}  // namespace wschub
