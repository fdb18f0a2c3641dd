#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/graph.hpp"

namespace ordtrail {

/// One directed traversal of an undirected edge.
struct Step {
  VertexId from;
  VertexId to;

  EdgeKey key() const noexcept { return EdgeKey::of(from, to); }

  friend constexpr bool operator==(const Step&, const Step&) = default;
};

/// Sequence of steps. Direction matters: the reverse of a decreasing trail
/// is increasing. Nothing here enforces validity; use is_ordered_trail.
struct Trail {
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  /// Vertex sequence v0..vk; empty for the empty trail.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    if (steps.empty()) return out;
    out.reserve(steps.size() + 1);
    out.push_back(steps.front().from);
    for (const Step& s : steps) out.push_back(s.to);
    return out;
  }

  /// Trail through the given 1-based vertex labels, e.g. {3, 2, 4, 3}.
  static Trail through(std::initializer_list<std::size_t> labels) {
    return through(std::vector<std::size_t>(labels));
  }

  static Trail through(const std::vector<std::size_t>& labels) {
    Trail t;
    for (std::size_t k = 1; k < labels.size(); ++k) {
      t.steps.push_back({VertexId::from_label(labels[k - 1]), VertexId::from_label(labels[k])});
    }
    return t;
  }

  friend bool operator==(const Trail&, const Trail&) = default;
};

enum class OrderKind { Decreasing, Increasing };

inline constexpr std::string_view to_string(OrderKind kind) noexcept {
  return kind == OrderKind::Decreasing ? "dec" : "inc";
}

inline bool in_order(OrderKind kind, const Weight& earlier, const Weight& later) noexcept {
  return kind == OrderKind::Decreasing ? earlier > later : earlier < later;
}

/// Weights along the trail, or nullopt if some step is not an edge of g.
inline std::optional<std::vector<Weight>> trail_weights(const WeightedGraph& g, const Trail& t) {
  std::vector<Weight> out;
  out.reserve(t.length());
  for (const Step& s : t.steps) {
    auto w = g.weight(s.from, s.to);
    if (!w) return std::nullopt;
    out.push_back(*w);
  }
  return out;
}

/// Neighbour-by-neighbour check: every step is an edge, steps chain, edges
/// are distinct and consecutive weights are strictly ordered.
inline bool is_ordered_trail(const WeightedGraph& g, const Trail& t, OrderKind kind) {
  std::vector<EdgeKey> used;
  used.reserve(t.length());
  std::optional<Weight> previous;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const Step& s = t.steps[k];
    if (s.from == s.to) return false;
    const auto w = g.weight(s.from, s.to);
    if (!w) return false;
    if (k > 0 && t.steps[k - 1].to != s.from) return false;
    if (previous && !in_order(kind, *previous, *w)) return false;
    if (std::find(used.begin(), used.end(), s.key()) != used.end()) return false;
    used.push_back(s.key());
    previous = w;
  }
  return true;
}

/// Sorted-walk check: the weight list is sorted for every pair i < j and the
/// steps form a walk from u to v. Edge distinctness is not checked; it
/// follows from strict sorting.
inline bool is_ordered_walk(const WeightedGraph& g, const Trail& t, OrderKind kind, VertexId u,
                            VertexId v) {
  if (t.empty()) return true;
  const auto weights = trail_weights(g, t);
  if (!weights) return false;
  for (std::size_t i = 0; i < weights->size(); ++i) {
    for (std::size_t j = i + 1; j < weights->size(); ++j) {
      if (!in_order(kind, (*weights)[i], (*weights)[j])) return false;
    }
  }
  if (t.steps.front().from != u || t.steps.back().to != v) return false;
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    if (t.steps[k - 1].to != t.steps[k].from) return false;
  }
  return true;
}

/// Reverses step order and flips every step. Involutive.
inline Trail reverse_dual(const Trail& t) {
  Trail out;
  out.steps.reserve(t.length());
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) out.steps.push_back({it->to, it->from});
  return out;
}

inline Trail drop_prefix(const Trail& t, std::size_t k) {
  if (k > t.length()) {
    throw Error(ErrorCode::OutOfRange, "cannot drop " + std::to_string(k) + " of " +
                                           std::to_string(t.length()) + " steps");
  }
  return Trail{std::vector<Step>(t.steps.begin() + static_cast<std::ptrdiff_t>(k), t.steps.end())};
}

inline Trail take_prefix(const Trail& t, std::size_t k) {
  if (k > t.length()) {
    throw Error(ErrorCode::OutOfRange, "cannot take " + std::to_string(k) + " of " +
                                           std::to_string(t.length()) + " steps");
  }
  return Trail{std::vector<Step>(t.steps.begin(), t.steps.begin() + static_cast<std::ptrdiff_t>(k))};
}

/// Figure-style rendering, e.g. "v3-v2-v4-v3".
inline std::string format_trail(const Trail& t) {
  std::string out;
  for (VertexId v : t.vertices()) {
    if (!out.empty()) out += '-';
    out += 'v' + std::to_string(v.label());
  }
  return out;
}

}  // namespace ordtrail
