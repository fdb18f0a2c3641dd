#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/random.hpp"
#include "ordtrail/weight.hpp"

namespace ordtrail {

/// Dense 0-based vertex index. Files and reports show label() = index + 1.
struct VertexId {
  std::uint32_t index = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}

  /// Vertex from its 1-based display label.
  static constexpr VertexId from_label(std::size_t label) { return VertexId(label - 1); }

  constexpr std::size_t label() const noexcept { return index + 1; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Undirected edge, stored canonically with a <= b. A key with a == b is
/// representable only so that validate() can report it.
struct EdgeKey {
  VertexId a;
  VertexId b;

  static constexpr EdgeKey of(VertexId u, VertexId v) noexcept {
    return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
  }

  constexpr bool touches(VertexId v) const noexcept { return a == v || b == v; }
  constexpr VertexId other(VertexId v) const noexcept { return a == v ? b : a; }

  friend constexpr auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

enum class WeightMode { Strict, Relaxed };

inline constexpr std::string_view to_string(WeightMode mode) noexcept {
  return mode == WeightMode::Strict ? "strict" : "relaxed";
}

struct Edge {
  EdgeKey key;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// 1-based position of an edge in ascending weight order.
using EdgeRank = std::size_t;

inline constexpr std::size_t max_edges(std::size_t n) noexcept { return n * (n - 1) / 2; }

struct Violation {
  ErrorCode code;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  bool has(ErrorCode code) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [code](const Violation& v) { return v.code == code; });
  }
};

/// Undirected graph with pairwise-distinct positive edge weights.
///
/// Edges are kept sorted by EdgeKey. add_edge() enforces every local
/// condition (no loops, no parallel edges, positive and unused weight,
/// integral weight in strict mode). Strict surjectivity onto {1..q} is a
/// global property and is only checked by validate().
class WeightedGraph {
 public:
  WeightedGraph(std::size_t n, WeightMode mode) : n_(n), mode_(mode) {
    if (n == 0) throw Error(ErrorCode::InvalidVertexCount, "a graph needs at least one vertex");
  }

  /// Builds a graph without any checks, for inputs that are validated
  /// afterwards (parsers, negative tests).
  static WeightedGraph unchecked(std::size_t n, WeightMode mode, std::vector<Edge> edges) {
    WeightedGraph g;
    g.n_ = n;
    g.mode_ = mode;
    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& x, const Edge& y) { return x.key < y.key; });
    g.edges_ = std::move(edges);
    return g;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return edges_.size(); }
  WeightMode mode() const noexcept { return mode_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  WeightedGraph& add_edge(VertexId u, VertexId v, Weight w) {
    if (u.index >= n_ || v.index >= n_) {
      throw Error(ErrorCode::VertexOutOfRange, "endpoint outside 1.." + std::to_string(n_));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "v" + std::to_string(u.label()));
    if (!w.is_positive()) throw Error(ErrorCode::NonPositiveWeight, w.to_string());
    if (mode_ == WeightMode::Strict && !w.is_integer()) {
      throw Error(ErrorCode::NonIntegerWeight, w.to_string());
    }
    const EdgeKey key = EdgeKey::of(u, v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), key,
                                [](const Edge& e, const EdgeKey& k) { return e.key < k; });
    if (pos != edges_.end() && pos->key == key) {
      throw Error(ErrorCode::DuplicateEdge, describe(key));
    }
    for (const Edge& e : edges_) {
      if (e.weight == w) throw Error(ErrorCode::DuplicateWeight, w.to_string());
    }
    edges_.insert(pos, Edge{key, w});
    return *this;
  }

  std::optional<Weight> weight(VertexId u, VertexId v) const noexcept {
    const EdgeKey key = EdgeKey::of(u, v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), key,
                                [](const Edge& e, const EdgeKey& k) { return e.key < k; });
    if (pos == edges_.end() || pos->key != key) return std::nullopt;
    return pos->weight;
  }

  bool has_edge(VertexId u, VertexId v) const noexcept { return weight(u, v).has_value(); }

  std::size_t degree(VertexId v) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge& e) { return e.key.touches(v); }));
  }

  /// Edges in ascending weight order; index k holds the edge of rank k + 1.
  std::vector<Edge> edges_by_rank() const {
    std::vector<Edge> ranked = edges_;
    std::sort(ranked.begin(), ranked.end(),
              [](const Edge& x, const Edge& y) { return x.weight < y.weight; });
    return ranked;
  }

  /// Per-vertex incidence lists sorted by neighbour index.
  std::vector<std::vector<std::pair<VertexId, Weight>>> adjacency() const {
    std::vector<std::vector<std::pair<VertexId, Weight>>> adj(n_);
    for (const Edge& e : edges_) {
      adj[e.key.a.index].emplace_back(e.key.b, e.weight);
      if (e.key.a != e.key.b) adj[e.key.b.index].emplace_back(e.key.a, e.weight);
    }
    for (auto& list : adj) {
      std::sort(list.begin(), list.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return adj;
  }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

  static std::string describe(EdgeKey key) {
    return "{v" + std::to_string(key.a.label()) + ",v" + std::to_string(key.b.label()) + "}";
  }

 private:
  WeightedGraph() = default;

  std::size_t n_ = 1;
  WeightMode mode_ = WeightMode::Strict;
  std::vector<Edge> edges_;
};

inline WeightedGraph new_graph(std::size_t n, WeightMode mode) { return WeightedGraph(n, mode); }

/// Reports every violated graph condition instead of stopping at the first.
inline ValidationResult validate(const WeightedGraph& g) {
  ValidationResult result;
  auto report = [&](ErrorCode code, std::string detail) {
    result.violations.push_back({code, std::move(detail)});
  };
  if (g.n() == 0) report(ErrorCode::InvalidVertexCount, "n = 0");

  const auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.key.a.index >= g.n() || e.key.b.index >= g.n()) {
      report(ErrorCode::VertexOutOfRange, WeightedGraph::describe(e.key));
    }
    if (e.key.a == e.key.b) report(ErrorCode::SelfLoop, WeightedGraph::describe(e.key));
    if (k > 0 && edges[k - 1].key == e.key) {
      report(ErrorCode::DuplicateEdge, WeightedGraph::describe(e.key));
    }
    if (!e.weight.is_positive()) report(ErrorCode::NonPositiveWeight, e.weight.to_string());
    if (g.mode() == WeightMode::Strict && !e.weight.is_integer()) {
      report(ErrorCode::NonIntegerWeight, e.weight.to_string());
    }
  }

  std::vector<Weight> weights;
  weights.reserve(edges.size());
  for (const Edge& e : edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  for (std::size_t k = 1; k < weights.size(); ++k) {
    if (weights[k] == weights[k - 1]) report(ErrorCode::DuplicateWeight, weights[k].to_string());
  }

  if (g.mode() == WeightMode::Strict) {
    // distinct integers in 1..q over q edges cover 1..q exactly
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const Weight expected(static_cast<std::int64_t>(k + 1));
      if (weights[k] != expected) {
        report(ErrorCode::NotSurjective,
               "weights must be exactly 1.." + std::to_string(weights.size()));
        break;
      }
    }
  }
  return result;
}

inline void require_valid(const WeightedGraph& g) {
  const auto result = validate(g);
  if (!result.ok()) {
    const Violation& first = result.violations.front();
    throw Error(ErrorCode::InvalidGraph,
                std::string(to_string(first.code)) + " " + first.detail);
  }
}

/// G^i: same vertices, only the i lowest-ranked edges.
inline WeightedGraph weighted_subgraph(const WeightedGraph& g, std::size_t i) {
  if (i > g.q()) {
    throw Error(ErrorCode::RankOutOfRange,
                std::to_string(i) + " exceeds q = " + std::to_string(g.q()));
  }
  auto ranked = g.edges_by_rank();
  ranked.resize(i);
  return WeightedGraph::unchecked(g.n(), g.mode(), std::move(ranked));
}

/// Strict copy of g in which each weight is replaced by its rank.
inline WeightedGraph rank_relabelled(const WeightedGraph& g) {
  auto ranked = g.edges_by_rank();
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    ranked[k].weight = Weight(static_cast<std::int64_t>(k + 1));
  }
  return WeightedGraph::unchecked(g.n(), WeightMode::Strict, std::move(ranked));
}

/// Edge keys of K_n in lexicographic order: (1,2), (1,3), ..., (n-1,n).
inline std::vector<EdgeKey> complete_edge_keys(std::size_t n) {
  std::vector<EdgeKey> keys;
  keys.reserve(max_edges(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) keys.push_back({VertexId(a), VertexId(b)});
  }
  return keys;
}

/// Position of edge {a,b} (a < b) in complete_edge_keys(n).
inline constexpr std::size_t complete_edge_index(std::size_t n, std::size_t a, std::size_t b) noexcept {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Checks that values is a permutation of 1..values.size().
template <typename Int>
bool is_permutation_of_1_to_q(std::span<const Int> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Strict graph on the given keys; keys[k] gets weight weights[k].
template <typename Int>
WeightedGraph graph_from_weighting(std::size_t n, std::span<const EdgeKey> keys,
                                   std::span<const Int> weights) {
  if (weights.size() != keys.size()) {
    throw Error(ErrorCode::WrongPermutationLength,
                "expected " + std::to_string(keys.size()) + " weights, got " +
                    std::to_string(weights.size()));
  }
  if (!is_permutation_of_1_to_q(weights)) {
    throw Error(ErrorCode::NotAPermutation, "weights must be a permutation of 1..q");
  }
  std::vector<Edge> edges;
  edges.reserve(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    edges.push_back({keys[k], Weight(static_cast<std::int64_t>(weights[k]))});
  }
  return WeightedGraph::unchecked(n, WeightMode::Strict, std::move(edges));
}

/// K_n with weights bound to edges in lexicographic key order.
template <typename Int>
WeightedGraph complete_graph(std::size_t n, std::span<const Int> weights) {
  if (n == 0) throw Error(ErrorCode::InvalidVertexCount, "a graph needs at least one vertex");
  const auto keys = complete_edge_keys(n);
  return graph_from_weighting<Int>(n, keys, weights);
}

inline WeightedGraph complete_graph(std::size_t n, std::initializer_list<int> weights) {
  const std::vector<int> w(weights);
  return complete_graph<int>(n, std::span<const int>(w));
}

/// Strict graph with m uniformly chosen edges and a uniformly random
/// weighting 1..m. Deterministic in (n, m, seed).
inline WeightedGraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidVertexCount, "a graph needs at least one vertex");
  if (m > max_edges(n)) {
    throw Error(ErrorCode::TooManyEdges, std::to_string(m) + " edges requested, K_" +
                                             std::to_string(n) + " has " +
                                             std::to_string(max_edges(n)));
  }
  Rng rng(seed);
  auto keys = complete_edge_keys(n);
  rng.shuffle(std::span<EdgeKey>(keys));
  keys.resize(m);
  std::sort(keys.begin(), keys.end());
  const auto perm = random_permutation(m, rng);
  return graph_from_weighting<std::uint32_t>(n, keys, perm);
}

}  // namespace ordtrail
