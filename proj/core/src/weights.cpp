#include "wschub/weights.hpp"

#include <algorithm>
#include <numeric>

#include "wschub/error.hpp"

namespace wschub {

WeightSystem::WeightSystem(std::vector<long> w, long a) : w_(std::move(w)), a_(a) {
  if (a_ < 1) throw DomainError("a must be at least 1, got " + std::to_string(a_));
  for (long wi : w_) {
    if (wi < 0) throw DomainError("weights must be non-negative, got " + std::to_string(wi));
  }
}

Rational WeightSystem::total(const IndexSet& lambda) const {
  if (lambda.n() != n()) throw DomainError("weight system has " + std::to_string(n()) + " weights but n=" +
                                           std::to_string(lambda.n()));
  long sum = a_;
  for (int i : lambda.elements()) sum += weight(i);
  return Rational(sum);
}

bool WeightSystem::is_trivial() const {
  return a_ == 1 && std::all_of(w_.begin(), w_.end(), [](long x) { return x == 0; });
}

bool WeightSystem::is_non_decreasing() const { return std::is_sorted(w_.begin(), w_.end()); }

std::string WeightSystem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + ";" + std::to_string(a_) + ")";
}

WeightSorting sort_weights(const WeightSystem& ws) {
  std::vector<int> order(static_cast<std::size_t>(ws.n()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return ws.weight(x) < ws.weight(y); });
  std::vector<long> sorted;
  for (int i : order) sorted.push_back(ws.weight(i));
  return {order, WeightSystem(std::move(sorted), ws.a())};
}

}  // namespace wschub
