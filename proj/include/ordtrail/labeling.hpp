#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/graph.hpp"
#include "ordtrail/trail.hpp"

namespace ordtrail {

/// Adds the next-heavier edge {u,v} to the labelling. Both updates read the
/// labels from before the edge was added.
template <typename Label>
constexpr void relax_edge(Label& label_u, Label& label_v) noexcept {
  const Label old_u = label_u;
  label_u = std::max<Label>(label_v + 1, label_u);
  label_v = std::max<Label>(old_u + 1, label_v);
}

/// Runs the full label sweep over endpoint pairs given in ascending weight
/// order. labels must start zeroed. Used on hot paths that need no witness.
template <typename Label, typename RankedEndpoints>
constexpr void sweep_labels(std::span<Label> labels, const RankedEndpoints& ranked) noexcept {
  for (const auto& [u, v] : ranked) relax_edge(labels[u], labels[v]);
}

/// Edge lookup by rank. Strict graphs are indexed by weight directly;
/// relaxed graphs are sorted once.
class RankTable {
 public:
  explicit RankTable(const WeightedGraph& g) : keys_(g.q()) {
    if (g.mode() == WeightMode::Strict) {
      for (const Edge& e : g.edges()) {
        const auto w = e.weight.num();
        if (!e.weight.is_integer() || w < 1 || static_cast<std::size_t>(w) > keys_.size()) {
          throw Error(ErrorCode::InvalidGraph, "strict weights must be exactly 1..q");
        }
        keys_[static_cast<std::size_t>(w) - 1] = e.key;
      }
    } else {
      const auto ranked = g.edges_by_rank();
      for (std::size_t k = 0; k < ranked.size(); ++k) keys_[k] = ranked[k].key;
    }
  }

  std::size_t size() const noexcept { return keys_.size(); }

  EdgeKey at(EdgeRank rank) const {
    if (rank < 1 || rank > keys_.size()) {
      throw Error(ErrorCode::RankOutOfRange,
                  "rank " + std::to_string(rank) + " outside 1.." + std::to_string(keys_.size()));
    }
    return keys_[rank - 1];
  }

 private:
  std::vector<EdgeKey> keys_;
};

/// Labels L^i and witness trails after the i lowest-ranked edges.
struct LabelState {
  std::size_t step = 0;
  std::vector<std::size_t> labels;
  std::vector<Trail> witnesses;

  static LabelState zero(std::size_t n) {
    return LabelState{0, std::vector<std::size_t>(n, 0), std::vector<Trail>(n)};
  }

  std::size_t label_sum() const noexcept {
    std::size_t sum = 0;
    for (auto l : labels) sum += l;
    return sum;
  }

  friend bool operator==(const LabelState&, const LabelState&) = default;
};

/// Endpoints of the rank-i edge in canonical (min, max) order.
inline std::pair<VertexId, VertexId> find_edge_by_rank(const WeightedGraph& g, EdgeRank i) {
  const EdgeKey key = RankTable(g).at(i);
  return {key.a, key.b};
}

/// Adds the edge of rank state.step + 1 in place. A witness is replaced only
/// on strict improvement, so ties keep the existing trail.
inline void advance(LabelState& state, const RankTable& table) {
  if (state.step >= table.size()) {
    throw Error(ErrorCode::StepExhausted, "all " + std::to_string(table.size()) + " edges processed");
  }
  const EdgeKey key = table.at(state.step + 1);
  const VertexId u = key.a;
  const VertexId v = key.b;
  const std::size_t old_u = state.labels[u.index];
  const std::size_t old_v = state.labels[v.index];
  Trail old_witness_u = state.witnesses[u.index];

  if (old_v + 1 > old_u) {
    Trail extended;
    extended.steps.reserve(old_v + 1);
    extended.steps.push_back({u, v});
    const auto& tail = state.witnesses[v.index].steps;
    extended.steps.insert(extended.steps.end(), tail.begin(), tail.end());
    state.witnesses[u.index] = std::move(extended);
  }
  if (old_u + 1 > old_v) {
    Trail extended;
    extended.steps.reserve(old_u + 1);
    extended.steps.push_back({v, u});
    extended.steps.insert(extended.steps.end(), old_witness_u.steps.begin(),
                          old_witness_u.steps.end());
    state.witnesses[v.index] = std::move(extended);
  }
  std::size_t label_u = old_u;
  std::size_t label_v = old_v;
  relax_edge(label_u, label_v);
  state.labels[u.index] = label_u;
  state.labels[v.index] = label_v;
  ++state.step;
}

inline LabelState propagate_step(LabelState state, const RankTable& table) {
  advance(state, table);
  return state;
}

inline LabelState propagate_step(const LabelState& state, const WeightedGraph& g) {
  return propagate_step(state, RankTable(g));
}

/// State after i propagation steps from zero.
inline LabelState label_state(const WeightedGraph& g, std::size_t i) {
  if (i > g.q()) {
    throw Error(ErrorCode::RankOutOfRange,
                "step " + std::to_string(i) + " exceeds q = " + std::to_string(g.q()));
  }
  const RankTable table(g);
  auto state = LabelState::zero(g.n());
  while (state.step < i) advance(state, table);
  return state;
}

/// L^i(v).
inline std::size_t get_label(const WeightedGraph& g, std::size_t i, VertexId v) {
  if (v.index >= g.n()) {
    throw Error(ErrorCode::VertexOutOfRange, "v" + std::to_string(v.label()));
  }
  return label_state(g, i).labels[v.index];
}

/// Final state from a single sort by weight; works for any distinct
/// positive weights.
inline LabelState run_labeling_sorted(const WeightedGraph& g) {
  require_valid(g);
  std::vector<EdgeKey> keys;
  keys.reserve(g.q());
  for (const Edge& e : g.edges_by_rank()) keys.push_back(e.key);
  // feed the sorted order through a relaxed-mode table so the witness logic is shared
  std::vector<Edge> relabelled;
  relabelled.reserve(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    relabelled.push_back({keys[k], Weight(static_cast<std::int64_t>(k + 1))});
  }
  const RankTable table(
      WeightedGraph::unchecked(g.n(), WeightMode::Relaxed, std::move(relabelled)));
  auto state = LabelState::zero(g.n());
  while (state.step < table.size()) advance(state, table);
  return state;
}

inline constexpr std::size_t bound_two_floor_q_over_n(std::size_t q, std::size_t n) noexcept {
  return 2 * (q / n);
}

inline constexpr std::size_t bound_floor_two_q_over_n(std::size_t q, std::size_t n) noexcept {
  return (2 * q) / n;
}

struct TrailReport {
  OrderKind kind = OrderKind::Decreasing;
  std::size_t optimum = 0;
  Trail witness;
  VertexId start;
  /// Final decreasing labels L^q(v), for either kind.
  std::vector<std::size_t> labels;
  std::size_t bound_a = 0;
  std::size_t bound_b = 0;

  friend bool operator==(const TrailReport&, const TrailReport&) = default;
};

/// Longest strictly ordered trail. Increasing trails come from reversing the
/// decreasing witness. Ties on the maximum label go to the smallest vertex.
inline TrailReport longest_ordered_trail(const WeightedGraph& g, OrderKind kind) {
  require_valid(g);
  const RankTable table(g);
  auto state = LabelState::zero(g.n());
  while (state.step < table.size()) advance(state, table);

  const auto best = std::max_element(state.labels.begin(), state.labels.end());
  const auto start_index = static_cast<std::size_t>(best - state.labels.begin());

  TrailReport report;
  report.kind = kind;
  report.optimum = *best;
  report.witness = std::move(state.witnesses[start_index]);
  report.start = VertexId(start_index);
  if (kind == OrderKind::Increasing) {
    report.witness = reverse_dual(report.witness);
    if (!report.witness.empty()) report.start = report.witness.steps.front().from;
  }
  report.labels = std::move(state.labels);
  report.bound_a = bound_two_floor_q_over_n(g.q(), g.n());
  report.bound_b = bound_floor_two_q_over_n(g.q(), g.n());
  return report;
}

}  // namespace ordtrail
