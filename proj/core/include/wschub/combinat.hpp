#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wschub {

inline constexpr int kMaxAmbient = 12;
inline constexpr std::size_t kDefaultVertexCap = 10000;

/// A d-element subset of {1..n}, stored sorted. Labels a torus-fixed point
/// and the Schubert class attached to it.
///
/// Ordering (operator<=>) is lexicographic on the element list; it is the
/// enumeration order, not the Bruhat order. Use bruhat_leq for the latter.
class IndexSet {
 public:
  /// Throws DomainError unless the elements are strictly increasing in
  /// [1..n] and 0 < d < n.
  IndexSet(int n, std::vector<int> elements);

  int n() const { return n_; }
  int d() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  int operator[](std::size_t i) const { return elements_[i]; }
  bool contains(int k) const { return (mask_ >> k) & 1u; }
  std::uint32_t mask() const { return mask_; }

  /// Number of inversions.
  int length() const;

  /// "1,3" style, matching the CLI and JSON vertex keys.
  std::string to_string() const;
  /// Compact "13" form used in test names and tables; only unambiguous for n < 10.
  std::string compact() const;
  /// 0/1 string of length n with a 1 at each element position.
  std::string binary_string() const;

  /// Parses "1,3". Throws DomainError on malformed input.
  static IndexSet parse(int n, const std::string& text);

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  int n_;
  std::vector<int> elements_;
  std::uint32_t mask_ = 0;
};

/// A pair k in λ, l not in λ with k < l.
struct Inversion {
  int k;
  int l;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

std::size_t binomial(int n, int k);

/// All C(n,d) subsets in lexicographic order. Throws DomainError unless
/// 0 < d < n <= kMaxAmbient and ResourceError if C(n,d) exceeds `cap`.
std::vector<IndexSet> enumerate_index_sets(int n, int d,
                                           std::size_t cap = kDefaultVertexCap);

/// True iff `upper` >= `lower` in Bruhat order, i.e. upper_i <= lower_i for
/// all i. Smaller entries sit higher.
bool bruhat_leq(const IndexSet& lower, const IndexSet& upper);

std::vector<Inversion> inversions(const IndexSet& lambda);

/// (k,l)λ: replace k by l. Throws DomainError if (k,l) is not an inversion.
IndexSet apply_inversion(const IndexSet& lambda, Inversion inv);

/// Every λ' covering λ (written λ' → λ): λ' >= λ, l(λ') = l(λ) + 1.
std::vector<IndexSet> covering_elements(const IndexSet& lambda);

/// Every ν' covered by ν (ν → ν').
std::vector<IndexSet> covered_elements(const IndexSet& nu);

struct Distinguished {
  IndexSet id;   // unique minimum, length 0
  IndexSet div;  // unique element of length 1
};

Distinguished distinguished_elements(int n, int d);

}  // namespace wschub
