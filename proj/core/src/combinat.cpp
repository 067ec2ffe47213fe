#include "wschub/combinat.hpp"

#include <algorithm>
#include <sstream>

#include "wschub/error.hpp"

namespace wschub {

namespace {

void require_ambient(int n, int d) {
  if (d <= 0 || d >= n) {
    throw DomainError("need 0 < d < n, got n=" + std::to_string(n) +
                      " d=" + std::to_string(d));
  }
  if (n > kMaxAmbient) {
    throw ResourceError("n=" + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(kMaxAmbient));
  }
}

}  // namespace

IndexSet::IndexSet(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  require_ambient(n_, d());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int e = elements_[i];
    if (e < 1 || e > n_ || (i > 0 && elements_[i - 1] >= e)) {
      throw DomainError("index set must be strictly increasing in [1.." + std::to_string(n_) +
                        "]: " + to_string());
    }
    mask_ |= 1u << e;
  }
}

int IndexSet::length() const {
  int len = 0;
  for (int k : elements_) {
    for (int l = k + 1; l <= n_; ++l) {
      if (!contains(l)) ++len;
    }
  }
  return len;
}

std::string IndexSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::string IndexSet::compact() const {
  std::string out;
  for (int e : elements_) out += std::to_string(e);
  return out;
}

std::string IndexSet::binary_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int e : elements_) out[static_cast<std::size_t>(e - 1)] = '1';
  return out;
}

IndexSet IndexSet::parse(int n, const std::string& text) {
  std::vector<int> elems;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      elems.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("malformed index set '" + text + "'");
    }
  }
  std::sort(elems.begin(), elems.end());
  return IndexSet(n, std::move(elems));
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<IndexSet> enumerate_index_sets(int n, int d, std::size_t cap) {
  require_ambient(n, d);
  if (binomial(n, d) > cap) {
    throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(d) + ") = " +
                        std::to_string(binomial(n, d)) + " exceeds the vertex cap " +
                        std::to_string(cap));
  }
  std::vector<IndexSet> out;
  out.reserve(binomial(n, d));
  std::vector<int> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool bruhat_leq(const IndexSet& lower, const IndexSet& upper) {
  if (lower.n() != upper.n() || lower.d() != upper.d()) {
    throw DomainError("Bruhat comparison across different (n,d)");
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(lower.d()); ++i) {
    if (upper[i] > lower[i]) return false;
  }
  return true;
}

std::vector<Inversion> inversions(const IndexSet& lambda) {
  std::vector<Inversion> out;
  for (int k : lambda.elements()) {
    for (int l = k + 1; l <= lambda.n(); ++l) {
      if (!lambda.contains(l)) out.push_back({k, l});
    }
  }
  return out;
}

IndexSet apply_inversion(const IndexSet& lambda, Inversion inv) {
  if (!(inv.k < inv.l) || !lambda.contains(inv.k) || inv.l > lambda.n() || lambda.contains(inv.l)) {
    throw DomainError("(" + std::to_string(inv.k) + "," + std::to_string(inv.l) +
                      ") is not an inversion of {" + lambda.to_string() + "}");
  }
  std::vector<int> elems(lambda.elements().begin(), lambda.elements().end());
  std::replace(elems.begin(), elems.end(), inv.k, inv.l);
  std::sort(elems.begin(), elems.end());
  return IndexSet(lambda.n(), std::move(elems));
}

std::vector<IndexSet> covering_elements(const IndexSet& lambda) {
  // A cover differs from λ in one element j, replaced by some smaller i not in λ.
  std::vector<IndexSet> out;
  const int target = lambda.length() + 1;
  for (int j : lambda.elements()) {
    for (int i = 1; i < j; ++i) {
      if (lambda.contains(i)) continue;
      std::vector<int> elems(lambda.elements().begin(), lambda.elements().end());
      std::replace(elems.begin(), elems.end(), j, i);
      std::sort(elems.begin(), elems.end());
      IndexSet cand(lambda.n(), std::move(elems));
      if (cand.length() == target) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> covered_elements(const IndexSet& nu) {
  std::vector<IndexSet> out;
  const int target = nu.length() - 1;
  for (const Inversion& inv : inversions(nu)) {
    IndexSet cand = apply_inversion(nu, inv);
    if (cand.length() == target) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Distinguished distinguished_elements(int n, int d) {
  require_ambient(n, d);
  std::vector<int> id;
  for (int i = n - d + 1; i <= n; ++i) id.push_back(i);
  std::vector<int> div = id;
  div.front() = n - d;
  return {IndexSet(n, std::move(id)), IndexSet(n, std::move(div))};
}

}  // namespace wschub
