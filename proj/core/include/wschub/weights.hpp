#pragma once

#include <string>
#include <vector>

#include "wschub/combinat.hpp"
#include "wschub/poly.hpp"

namespace wschub {

/// Weights (w_1..w_n) with w_i >= 0 and a >= 1. Every total weight
/// w_λ = a + Σ_{i∈λ} w_i is then at least 1.
class WeightSystem {
 public:
  /// Throws DomainError on a negative weight or a < 1.
  WeightSystem(std::vector<long> w, long a);

  /// All weights zero, a = 1: the ordinary Grassmannian.
  static WeightSystem trivial(int n) { return WeightSystem(std::vector<long>(static_cast<std::size_t>(n), 0), 1); }

  int n() const { return static_cast<int>(w_.size()); }
  const std::vector<long>& w() const { return w_; }
  long a() const { return a_; }
  /// w_i, 1-indexed.
  long weight(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  /// b_i = w_i + a.
  long b(int i) const { return weight(i) + a_; }

  /// w_λ = a + Σ_{i∈λ} w_i.
  Rational total(const IndexSet& lambda) const;

  bool is_trivial() const;
  bool is_non_decreasing() const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<long> w_;
  long a_;
};

/// w_total as a free function.
inline Rational w_total(const IndexSet& lambda, const WeightSystem& ws) { return ws.total(lambda); }

/// A permutation sorting the weights into non-decreasing order.
/// `order[k]` is the original (1-indexed) position now placed at k+1.
/// User-supplied index sets are never re-labelled automatically.
struct WeightSorting {
  std::vector<int> order;
  WeightSystem sorted;
};

WeightSorting sort_weights(const WeightSystem& ws);

}  // namespace wschub
