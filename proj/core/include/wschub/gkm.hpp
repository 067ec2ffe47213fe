#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wschub/combinat.hpp"
#include "wschub/poly.hpp"
#include "wschub/weights.hpp"

namespace wschub {

/// The moment graph of Gr(d,n): one vertex per d-subset, an edge between two
/// subsets exactly when they share d-1 elements. Vertices are held in
/// lexicographic order and referred to by index.
class MomentGraph {
 public:
  struct Edge {
    std::size_t a;
    std::size_t b;  // a < b
  };

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return vertices_.size(); }

  const std::vector<IndexSet>& vertices() const { return vertices_; }
  const IndexSet& vertex(std::size_t i) const { return vertices_[i]; }
  /// Throws DomainError if `v` is not a vertex.
  std::size_t index_of(const IndexSet& v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool is_edge(std::size_t a, std::size_t b) const;

  int length(std::size_t i) const { return lengths_[i]; }
  /// vertex(j) >= vertex(i) in Bruhat order.
  bool leq(std::size_t i, std::size_t j) const;

  /// Vertices sorted by (length, lex); a linear extension of Bruhat order.
  const std::vector<std::size_t>& linear_extension() const { return order_; }
  /// Indices of the λ' with λ' → λ.
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
  /// Indices of the ν' with ν → ν'.
  const std::vector<std::size_t>& covered(std::size_t i) const { return covered_[i]; }

  std::size_t id() const { return id_; }
  std::size_t div() const { return div_; }
  std::size_t top() const { return order_.back(); }
  int max_length() const { return d_ * (n_ - d_); }

 private:
  friend std::shared_ptr<const MomentGraph> build_graph(int n, int d, std::size_t cap);
  MomentGraph() = default;

  int n_ = 0;
  int d_ = 0;
  std::vector<IndexSet> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> lengths_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> covered_;
  std::size_t id_ = 0;
  std::size_t div_ = 0;
};

using GraphPtr = std::shared_ptr<const MomentGraph>;

/// Throws DomainError / ResourceError as enumerate_index_sets.
GraphPtr build_graph(int n, int d, std::size_t cap = kDefaultVertexCap);

/// Which space a restriction vector describes.
///  - kOrdinary:   H_T(Gr), values in y1..yn.
///  - kWeighted:   H_{T_w}(wGr), values in Yw1..Ywn.
///  - kAffineCone: H_K of the punctured affine cone. Values are stored as
///    canonical representatives in Yw1..Ywn (at vertex μ, z is eliminated
///    via y_i = Yw_i - (w_i/w_μ) Yw_μ), so storage coincides with kWeighted;
///    check_gkm verifies the cone's own edge condition after lifting.
enum class Flavor { kOrdinary, kAffineCone, kWeighted };

std::string to_string(Flavor f);

class RestrictionVector {
 public:
  /// Throws DomainError if the value count or contexts disagree with the
  /// graph and flavor, or if a weighted flavor lacks weights.
  RestrictionVector(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> weights,
                    std::vector<Polynomial> values);

  static RestrictionVector constant(GraphPtr graph, Flavor flavor, std::optional<WeightSystem> weights,
                                    const Rational& c);

  const GraphPtr& graph() const { return graph_; }
  Flavor flavor() const { return flavor_; }
  const std::optional<WeightSystem>& weights() const { return weights_; }
  const ContextPtr& context() const { return ctx_; }

  const Polynomial& value(std::size_t vertex) const { return values_[vertex]; }
  const Polynomial& value(const IndexSet& v) const { return values_[graph_->index_of(v)]; }
  const std::vector<Polynomial>& values() const { return values_; }

  /// Same values, relabelled as another flavor sharing the storage context
  /// (kWeighted <-> kAffineCone).
  RestrictionVector as_flavor(Flavor f) const;

  friend bool operator==(const RestrictionVector& a, const RestrictionVector& b);

 private:
  GraphPtr graph_;
  Flavor flavor_;
  std::optional<WeightSystem> weights_;
  ContextPtr ctx_;
  std::vector<Polynomial> values_;
};

/// Value context used by a flavor.
ContextPtr flavor_context(Flavor f, int n);

/// y_λ = Σ_{i∈λ} y_i in `ctx` (the first n variables).
Polynomial subset_sum(const ContextPtr& ctx, const IndexSet& lambda);

/// The form an edge difference must be divisible by: y_λ - y_μ (ordinary) or
/// w_μ Yw_λ - w_λ Yw_μ (weighted). Throws DomainError if {a,b} is not an edge
/// or the flavor is kAffineCone (use cone_edge_forms).
LinearForm gkm_edge_form(const MomentGraph& graph, std::size_t a, std::size_t b, Flavor flavor,
                         const std::optional<WeightSystem>& weights);

/// The pair (y_λ + z, y_μ + z) in y1..yn,z.
std::pair<LinearForm, LinearForm> cone_edge_forms(const MomentGraph& graph, std::size_t a, std::size_t b);

/// Maps a Yw-polynomial into y1..yn,z via Yw_i = y_i - (w_i/a) z.
Polynomial lift_to_cone(const Polynomial& p, const WeightSystem& ws);

struct EdgeViolation {
  IndexSet a;
  IndexSet b;
};

/// Every edge whose condition fails; empty means the vector is a class.
std::vector<EdgeViolation> check_gkm(const RestrictionVector& v);

/// Cone condition on raw values in y1..yn,z: P(λ) = P(μ) modulo
/// (y_λ+z, y_μ+z) on every edge.
std::vector<EdgeViolation> check_cone_condition(const MomentGraph& graph, std::span<const Polynomial> values);

/// Throws DomainError on mismatched graph, flavor, or weights.
RestrictionVector pointwise_multiply(const RestrictionVector& a, const RestrictionVector& b);

/// Upper-triangular basis of restriction vectors indexed by vertex. The
/// diagonal value of each class is kept factored into linear forms.
struct SchubertBasis {
  GraphPtr graph;
  Flavor flavor;
  std::optional<WeightSystem> weights;
  std::vector<RestrictionVector> classes;
  std::vector<std::vector<LinearForm>> diagonal_factors;

  const RestrictionVector& operator[](std::size_t i) const { return classes[i]; }
  const RestrictionVector& operator[](const IndexSet& v) const { return classes[graph->index_of(v)]; }
};

/// Coefficients c with v = Σ c_λ basis[λ], indexed by vertex. Walks the
/// linear extension upward solving one exact division per vertex; every
/// division is checked and upper triangularity of the basis is verified on
/// the way, so the residual is identically zero on return.
/// Throws InexactDivision if v is not in the span, DomainError if the basis
/// is not upper triangular or does not match v.
std::vector<Polynomial> expand_in_schubert_basis(const RestrictionVector& v, const SchubertBasis& basis);

}  // namespace wschub
