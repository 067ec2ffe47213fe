#include "wschub_cli/serialize.hpp"

#include "wschub/error.hpp"

namespace wschub::cli {

namespace {

ContextPtr context_for(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  for (const ContextPtr& known : {ordinary_context(n), weighted_context(n)}) {
    if (known->names() == names) return known;
  }
  if (n >= 2 && names.back() == "z") {
    const ContextPtr cone = cone_context(n - 1);
    if (cone->names() == names) return cone;
  }
  return VariableContext::make(names);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON object is missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json out;
  out["vars"] = p.context()->names();
  Json terms = Json::array();
  const std::size_t arity = p.context()->size();
  for (const Term& t : p.terms()) {
    std::vector<int> e(arity);
    for (std::size_t v = 0; v < arity; ++v) e[v] = t.mono.exponent(v);
    terms.push_back(Json{{"c", rational_to_string(t.coeff)}, {"e", e}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  try {
    const auto names = field(j, "vars").get<std::vector<std::string>>();
    const ContextPtr ctx = context_for(names);
    std::vector<Term> terms;
    for (const Json& t : field(j, "terms")) {
      const auto e = field(t, "e").get<std::vector<int>>();
      if (e.size() != names.size()) throw DomainError("exponent vector has the wrong length");
      Monomial m;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] < 0 || e[v] > 255) throw DomainError("exponent out of range");
        m.set_exponent(v, e[v]);
      }
      terms.emplace_back(m, parse_rational(field(t, "c").get<std::string>()));
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

Json space_to_json(const Space& s) { return Json{{"n", s.n}, {"d", s.d}, {"weights", s.weights}, {"a", s.a}}; }

Space space_from_json(const Json& j) {
  try {
    Space s;
    s.n = field(j, "n").get<int>();
    s.d = field(j, "d").get<int>();
    s.weights = field(j, "weights").get<std::vector<long>>();
    s.a = field(j, "a").get<long>();
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed space JSON: ") + ex.what());
  }
}

Json class_to_json(const Space& s, const RestrictionVector& v) {
  Json values = Json::object();
  const MomentGraph& graph = *v.graph();
  for (std::size_t i = 0; i < graph.size(); ++i) values[graph.vertex(i).to_string()] = polynomial_to_json(v.value(i));
  return Json{{"space", space_to_json(s)}, {"class", std::move(values)}};
}

ParsedClass class_from_json(const Json& j) {
  ParsedClass out;
  out.space = space_from_json(field(j, "space"));
  for (const auto& [key, value] : field(j, "class").items()) out.values.emplace_back(key, polynomial_from_json(value));
  return out;
}

Json basis_to_json(const Space& s, const SchubertBasis& basis) {
  const MomentGraph& graph = *basis.graph;
  Json classes = Json::object();
  for (std::size_t lam = 0; lam < graph.size(); ++lam) {
    Json values = Json::object();
    for (std::size_t mu = 0; mu < graph.size(); ++mu) {
      values[graph.vertex(mu).to_string()] = polynomial_to_json(basis.classes[lam].value(mu));
    }
    classes[graph.vertex(lam).to_string()] = std::move(values);
  }
  return Json{{"space", space_to_json(s)}, {"flavor", to_string(basis.flavor)}, {"classes", std::move(classes)}};
}

std::string wu_monomial_key(const UMultiset& I) {
  if (I.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < I.size();) {
    std::size_t run = k;
    while (run < I.size() && I[run] == I[k]) ++run;
    if (!out.empty()) out += "*";
    out += "wu" + std::to_string(I[k]);
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

Json constants_to_json(const Space& s, const std::vector<ConstantEntry>& entries) {
  Json list = Json::array();
  for (const ConstantEntry& e : entries) {
    Json wu = Json::object();
    for (const auto& [key, c] : e.wu_expansion) wu[key] = rational_to_string(c);
    list.push_back(Json{{"lambda", e.lambda},
                        {"mu", e.mu},
                        {"nu", e.nu},
                        {"value", polynomial_to_json(e.value)},
                        {"wu_expansion", std::move(wu)},
                        {"nonneg", e.nonneg}});
  }
  return Json{{"space", space_to_json(s)}, {"constants", std::move(list)}};
}

ParsedConstants constants_from_json(const Json& j) {
  try {
    ParsedConstants out;
    out.space = space_from_json(field(j, "space"));
    for (const Json& e : field(j, "constants")) {
      ConstantEntry entry{field(e, "lambda").get<std::string>(),
                          field(e, "mu").get<std::string>(),
                          field(e, "nu").get<std::string>(),
                          polynomial_from_json(field(e, "value")),
                          {},
                          field(e, "nonneg").get<bool>()};
      for (const auto& [key, c] : field(e, "wu_expansion").items()) {
        entry.wu_expansion[key] = parse_rational(c.get<std::string>());
      }
      out.entries.push_back(std::move(entry));
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed constants JSON: ") + ex.what());
  }
}

}  // namespace wschub::cli
