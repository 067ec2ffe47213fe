#include "wschub/kostka.hpp"

#include <functional>

#include "wschub/weighted.hpp"

namespace wschub {

KostkaTable::KostkaTable(GraphPtr graph, WeightSystem ws) : graph_(std::move(graph)), ws_(std::move(ws)) {}

const std::vector<std::vector<std::size_t>>& KostkaTable::chains(std::size_t nu, std::size_t eta) {
  const auto key = std::make_pair(nu, eta);
  if (auto it = chains_.find(key); it != chains_.end()) return it->second;
  std::vector<std::vector<std::size_t>> out;
  if (nu == eta) {
    out.push_back({nu});
  } else if (graph_->leq(eta, nu) && graph_->length(nu) > graph_->length(eta)) {
    for (std::size_t next : graph_->covered(nu)) {
      if (!graph_->leq(eta, next)) continue;
      for (const auto& tail : chains(next, eta)) {
        std::vector<std::size_t> chain{nu};
        chain.insert(chain.end(), tail.begin(), tail.end());
        out.push_back(std::move(chain));
      }
    }
  }
  return chains_.emplace(key, std::move(out)).first->second;
}

const Polynomial& KostkaTable::divisor_gap(std::size_t v) {
  if (auto it = gaps_.find(v); it != gaps_.end()) return it->second;
  return gaps_.emplace(v, weighted_divisor_restriction(graph_->vertex(v), ws_)).first->second;
}

const Polynomial& KostkaTable::operator()(int r, std::size_t eta, std::size_t nu) {
  const auto key = std::make_tuple(r, eta, nu);
  if (auto it = values_.find(key); it != values_.end()) return it->second;

  const auto ctx = weighted_context(graph_->n());
  Polynomial total = Polynomial::zero(ctx);
  const int l = graph_->length(nu) - graph_->length(eta);
  if (r >= l && graph_->leq(eta, nu)) {
    const Rational w_id = ws_.total(graph_->vertex(graph_->id()));
    for (const auto& chain : chains(nu, eta)) {
      Rational prefactor = ws_.total(graph_->vertex(nu)) / w_id;
      for (std::size_t v : chain) prefactor *= w_id / ws_.total(graph_->vertex(v));

      // Σ over compositions (j_0..j_l) of r - l of ∏ gap(ν^q)^{j_q}.
      std::vector<std::vector<Polynomial>> powers(chain.size());
      for (std::size_t q = 0; q < chain.size(); ++q) {
        powers[q].push_back(Polynomial::constant(ctx, 1));
        for (int j = 1; j <= r - l; ++j) powers[q].push_back(powers[q].back() * divisor_gap(chain[q]));
      }
      Polynomial sum = Polynomial::zero(ctx);
      std::function<void(std::size_t, int, const Polynomial&)> walk = [&](std::size_t q, int left,
                                                                          const Polynomial& acc) {
        if (q + 1 == chain.size()) {
          sum += acc * powers[q][static_cast<std::size_t>(left)];
          return;
        }
        for (int j = 0; j <= left; ++j) walk(q + 1, left - j, acc * powers[q][static_cast<std::size_t>(j)]);
      };
      walk(0, r - l, Polynomial::constant(ctx, 1));
      total += sum * prefactor;
    }
  }
  return values_.emplace(key, std::move(total)).first->second;
}

Polynomial kostka(int r, const IndexSet& eta, const IndexSet& nu, const WeightSystem& ws) {
  KostkaTable table(build_graph(eta.n(), eta.d()), ws);
  return table(r, table.graph()->index_of(eta), table.graph()->index_of(nu));
}

}  // namespace wschub
