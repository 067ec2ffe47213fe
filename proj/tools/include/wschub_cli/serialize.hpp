#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wschub/gkm.hpp"
#include "wschub/weighted.hpp"

namespace wschub::cli {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"c": "num/den", "e": [...]}, ...]}, terms in
/// decreasing graded-lex order.
Json polynomial_to_json(const Polynomial& p);
/// Accepts the format above. The context is the interned ordinary/weighted
/// context when the names match one, a fresh context otherwise. Throws
/// DomainError on malformed input.
Polynomial polynomial_from_json(const Json& j);

struct Space {
  int n = 0;
  int d = 0;
  std::vector<long> weights;
  long a = 1;

  WeightSystem weight_system() const { return WeightSystem(weights, a); }
  friend bool operator==(const Space&, const Space&) = default;
};

Json space_to_json(const Space& s);
Space space_from_json(const Json& j);

/// {"space": ..., "class": {"1,2": <polynomial>, ...}}
Json class_to_json(const Space& s, const RestrictionVector& v);

struct ParsedClass {
  Space space;
  std::vector<std::pair<std::string, Polynomial>> values;  // in file order
};
ParsedClass class_from_json(const Json& j);

/// {"space": ..., "flavor": ..., "classes": {"<λ>": {"<vertex>": <polynomial>}}}
Json basis_to_json(const Space& s, const SchubertBasis& basis);

struct ConstantEntry {
  std::string lambda;
  std::string mu;
  std::string nu;
  Polynomial value;
  std::map<std::string, Rational> wu_expansion;  // "1" for the constant term, "wu1*wu3^2" otherwise
  bool nonneg = false;
};

/// {"space": ..., "constants": [{"lambda", "mu", "nu", "value", "wu_expansion", "nonneg"}, ...]}
Json constants_to_json(const Space& s, const std::vector<ConstantEntry>& entries);

struct ParsedConstants {
  Space space;
  std::vector<ConstantEntry> entries;
};
ParsedConstants constants_from_json(const Json& j);

/// "wu1*wu3^2" style key for a wu-monomial; "1" for the empty multiset.
std::string wu_monomial_key(const UMultiset& I);

}  // namespace wschub::cli
