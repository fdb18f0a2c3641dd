#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/graph.hpp"
#include "ordtrail/trail.hpp"

// Brute-force ground truth for longest decreasing trails. Deliberately plain
// depth-first search with no memoization; it shares nothing with the label
// sweep beyond the graph type.

namespace ordtrail {

struct EnumerationResult {
  std::vector<std::size_t> per_vertex;
  std::size_t optimum = 0;
  std::uint64_t nodes_explored = 0;
};

struct TrailEnumeration {
  std::vector<Trail> trails;
  bool truncated = false;
};

namespace detail {

using Adjacency = std::vector<std::vector<std::pair<VertexId, Weight>>>;

struct MaximalTrailSearch {
  const Adjacency& adj;
  std::size_t cap;
  TrailEnumeration out;
  Trail current;

  // Returns false once the cap has been hit.
  bool extend(VertexId at, const std::optional<Weight>& last) {
    bool extended = false;
    for (const auto& [next, w] : adj[at.index]) {
      if (last && !(w < *last)) continue;
      extended = true;
      current.steps.push_back({at, next});
      const bool keep_going = extend(next, w);
      current.steps.pop_back();
      if (!keep_going) return false;
    }
    if (!extended && !current.empty()) {
      if (out.trails.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.trails.push_back(current);
    }
    return true;
  }
};

inline std::size_t longest_from(const Adjacency& adj, VertexId at, const std::optional<Weight>& last,
                                std::uint64_t& nodes) {
  ++nodes;
  std::size_t best = 0;
  for (const auto& [next, w] : adj[at.index]) {
    if (last && !(w < *last)) continue;
    best = std::max(best, 1 + longest_from(adj, next, w, nodes));
  }
  return best;
}

}  // namespace detail

/// All non-extendable strictly decreasing trails starting at v, depth first
/// with neighbours in ascending order, stopping after cap trails.
inline TrailEnumeration enumerate_dec_trails_from(const WeightedGraph& g, VertexId v,
                                                  std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::OutOfRange, "cap must be at least 1");
  if (v.index >= g.n()) throw Error(ErrorCode::VertexOutOfRange, "v" + std::to_string(v.label()));
  const auto adj = g.adjacency();
  detail::MaximalTrailSearch search{adj, cap, {}, {}};
  search.extend(v, std::nullopt);
  return std::move(search.out);
}

/// Exact longest decreasing trail length per start vertex. Exponential;
/// intended for n up to about 9.
inline EnumerationResult brute_force_longest(const WeightedGraph& g) {
  require_valid(g);
  const auto adj = g.adjacency();
  EnumerationResult result;
  result.per_vertex.resize(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    result.per_vertex[v] = detail::longest_from(adj, VertexId(v), std::nullopt, result.nodes_explored);
    result.optimum = std::max(result.optimum, result.per_vertex[v]);
  }
  return result;
}

}  // namespace ordtrail
