#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/graph.hpp"
#include "ordtrail/labeling.hpp"
#include "ordtrail/random.hpp"

namespace ordtrail {

/// Edge set of a graph whose weightings are searched. Keys are canonical
/// and sorted; a weighting assigns weights[k] to keys[k].
struct Structure {
  std::size_t n = 1;
  std::vector<EdgeKey> keys;
  bool complete = false;

  static Structure complete_graph(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidStructure, "a graph needs at least one vertex");
    return Structure{n, complete_edge_keys(n), true};
  }

  static Structure from_edges(std::size_t n, std::vector<EdgeKey> keys) {
    if (n == 0) throw Error(ErrorCode::InvalidStructure, "a graph needs at least one vertex");
    for (EdgeKey& k : keys) {
      if (k.a.index >= n || k.b.index >= n) {
        throw Error(ErrorCode::InvalidStructure, "endpoint out of range in " + WeightedGraph::describe(k));
      }
      if (k.a == k.b) throw Error(ErrorCode::InvalidStructure, "self-loop " + WeightedGraph::describe(k));
      k = EdgeKey::of(k.a, k.b);
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      throw Error(ErrorCode::InvalidStructure, "duplicate edge");
    }
    const bool complete = keys.size() == max_edges(n);
    return Structure{n, std::move(keys), complete};
  }

  static Structure of(const WeightedGraph& g) {
    std::vector<EdgeKey> keys;
    for (const Edge& e : g.edges()) keys.push_back(e.key);
    return from_edges(g.n(), std::move(keys));
  }

  std::size_t q() const noexcept { return keys.size(); }

  template <typename Int>
  WeightedGraph with_weights(std::span<const Int> weights) const {
    return graph_from_weighting<Int>(n, keys, weights);
  }
};

enum class SearchMode { Exhaustive, Sampled };

struct ExtremalOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool reduce_symmetry = false;
  unsigned jobs = 1;
};

inline constexpr std::size_t kMaxExhaustiveEdges = 10;

struct ExtremalReport {
  Structure structure;
  ExtremalOptions options;
  std::uint64_t examined = 0;
  std::size_t minimum = 0;
  std::vector<std::uint32_t> witness;
  /// True only when symmetry reduction was requested and applicable.
  bool reduced = false;
  /// q! / examined for reduced exhaustive runs, otherwise 1.
  double reduction_factor = 1.0;
  std::chrono::milliseconds elapsed{0};
};

/// Longest decreasing trail for one weighting, without witnesses.
/// Gives up early once some label reaches cutoff, returning cutoff.
class WeightingEvaluator {
 public:
  explicit WeightingEvaluator(const Structure& s)
      : endpoints_(s.q()), order_(s.q()), labels_(s.n) {
    for (std::size_t k = 0; k < s.q(); ++k) endpoints_[k] = {s.keys[k].a.index, s.keys[k].b.index};
  }

  std::uint32_t evaluate(std::span<const std::uint32_t> weights,
                         std::uint32_t cutoff = std::numeric_limits<std::uint32_t>::max()) {
    for (std::size_t k = 0; k < weights.size(); ++k) order_[weights[k] - 1] = endpoints_[k];
    std::fill(labels_.begin(), labels_.end(), 0u);
    std::uint32_t best = 0;
    for (const auto& [u, v] : order_) {
      relax_edge(labels_[u], labels_[v]);
      best = std::max({best, labels_[u], labels_[v]});
      if (best >= cutoff) return cutoff;
    }
    return best;
  }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_;
  std::vector<std::uint32_t> labels_;
};

namespace detail {

inline std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

/// A block of weightings: `base` with the values at `free_positions`
/// running through all their arrangements in lexicographic order.
struct Chunk {
  std::vector<std::uint32_t> base;
  std::vector<std::size_t> free_positions;
};

struct ChunkResult {
  std::optional<std::uint32_t> value;
  std::vector<std::uint32_t> witness;
  std::uint64_t examined = 0;
};

/// Fixing the first two positions of the weighting gives q(q-1) chunks in
/// lexicographic order.
inline std::vector<Chunk> plain_chunks(std::size_t q) {
  std::vector<Chunk> chunks;
  if (q < 2) {
    Chunk c;
    for (std::size_t k = 0; k < q; ++k) {
      c.base.push_back(static_cast<std::uint32_t>(k + 1));
    }
    chunks.push_back(std::move(c));
    return chunks;
  }
  for (std::uint32_t a = 1; a <= q; ++a) {
    for (std::uint32_t b = 1; b <= q; ++b) {
      if (a == b) continue;
      Chunk c;
      c.base = {a, b};
      for (std::uint32_t w = 1; w <= q; ++w) {
        if (w != a && w != b) c.base.push_back(w);
      }
      for (std::size_t p = 2; p < q; ++p) c.free_positions.push_back(p);
      chunks.push_back(std::move(c));
    }
  }
  return chunks;
}

/// K_n weightings up to vertex relabelling. The weight-1 edge can be moved
/// to {v1,v2}; the weight-2 edge then either shares v1 (moved to {v1,v3})
/// or is disjoint from it (moved to {v3,v4}). Remaining weights are free;
/// chunks split further on the value at the first free position.
inline std::vector<Chunk> reduced_complete_chunks(std::size_t n) {
  const std::size_t q = max_edges(n);
  std::vector<Chunk> chunks;
  if (q <= 1) return plain_chunks(q);

  std::vector<std::size_t> second_edge_choices{complete_edge_index(n, 0, 2)};
  if (n >= 4) second_edge_choices.push_back(complete_edge_index(n, 2, 3));

  for (std::size_t second : second_edge_choices) {
    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < q; ++p) {
      if (p != 0 && p != second) open.push_back(p);
    }
    if (open.empty()) {
      Chunk c;
      c.base.assign(q, 0);
      c.base[0] = 1;
      c.base[second] = 2;
      chunks.push_back(std::move(c));
      continue;
    }
    for (std::uint32_t lead = 3; lead <= q; ++lead) {
      Chunk c;
      c.base.assign(q, 0);
      c.base[0] = 1;
      c.base[second] = 2;
      c.base[open.front()] = lead;
      std::uint32_t next = 3;
      for (std::size_t k = 1; k < open.size(); ++k) {
        if (next == lead) ++next;
        c.base[open[k]] = next++;
      }
      c.free_positions.assign(open.begin() + 1, open.end());
      chunks.push_back(std::move(c));
    }
  }
  return chunks;
}

inline bool better(std::uint32_t value, std::span<const std::uint32_t> perm,
                   const std::optional<std::uint32_t>& best_value,
                   const std::vector<std::uint32_t>& best_perm) {
  if (!best_value || value < *best_value) return true;
  return value == *best_value &&
         std::lexicographical_compare(perm.begin(), perm.end(), best_perm.begin(), best_perm.end());
}

inline void lower_shared(std::atomic<std::uint32_t>& shared, std::uint32_t value) {
  std::uint32_t current = shared.load(std::memory_order_relaxed);
  while (value < current &&
         !shared.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

inline ChunkResult run_chunk(const Chunk& chunk, WeightingEvaluator& evaluator,
                             std::atomic<std::uint32_t>& shared_min) {
  ChunkResult result;
  std::vector<std::uint32_t> perm = chunk.base;
  std::vector<std::uint32_t> values;
  for (std::size_t p : chunk.free_positions) values.push_back(perm[p]);
  std::sort(values.begin(), values.end());
  do {
    for (std::size_t k = 0; k < values.size(); ++k) perm[chunk.free_positions[k]] = values[k];
    ++result.examined;
    // arrangements come in lexicographic order, so only strict improvements matter
    const std::uint32_t global = shared_min.load(std::memory_order_relaxed);
    std::uint32_t cutoff = global == std::numeric_limits<std::uint32_t>::max() ? global : global + 1;
    if (result.value) cutoff = std::min(cutoff, *result.value);
    const std::uint32_t value = evaluator.evaluate(perm, cutoff);
    if (value < cutoff) {
      result.value = value;
      result.witness = perm;
      lower_shared(shared_min, value);
    }
  } while (std::next_permutation(values.begin(), values.end()));
  return result;
}

template <typename Task>
void run_parallel(std::size_t task_count, unsigned jobs, Task&& task) {
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned worker_id) {
    for (std::size_t t = next.fetch_add(1); t < task_count; t = next.fetch_add(1)) task(t, worker_id);
  };
  if (jobs == 1) {
    worker(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
}

}  // namespace detail

/// Minimum longest-decreasing-trail length over weightings of a structure.
///
/// Exhaustive mode visits every permutation of 1..q (q <= 10) in
/// lexicographic order, or with reduce_symmetry on a complete structure one
/// representative per relabelling class. Sampled mode evaluates `samples`
/// uniform permutations; sample i is drawn by Fisher-Yates from
/// Rng(mix_seed(seed, i)). In every mode the witness is the
/// lexicographically smallest examined weighting attaining the minimum, so
/// results do not depend on `jobs`.
inline ExtremalReport min_over_weightings(const Structure& structure, const ExtremalOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t q = structure.q();
  ExtremalReport report;
  report.structure = structure;
  report.options = options;

  std::vector<WeightingEvaluator> evaluators(std::max(1u, options.jobs),
                                             WeightingEvaluator(structure));
  std::atomic<std::uint32_t> shared_min{std::numeric_limits<std::uint32_t>::max()};

  std::vector<detail::ChunkResult> results;
  if (options.mode == SearchMode::Exhaustive) {
    if (q > kMaxExhaustiveEdges) {
      throw Error(ErrorCode::ExhaustiveTooLarge,
                  std::to_string(q) + " edges; exhaustive search allows at most " +
                      std::to_string(kMaxExhaustiveEdges));
    }
    report.reduced = options.reduce_symmetry && structure.complete;
    const auto chunks = report.reduced ? detail::reduced_complete_chunks(structure.n)
                                       : detail::plain_chunks(q);
    results.resize(chunks.size());
    detail::run_parallel(chunks.size(), options.jobs, [&](std::size_t t, unsigned w) {
      results[t] = detail::run_chunk(chunks[t], evaluators[w], shared_min);
    });
  } else {
    if (options.samples == 0) throw Error(ErrorCode::OutOfRange, "sampled mode needs at least one sample");
    constexpr std::uint64_t kBlock = 1024;
    const std::uint64_t blocks = (options.samples + kBlock - 1) / kBlock;
    results.resize(blocks);
    detail::run_parallel(blocks, options.jobs, [&](std::size_t t, unsigned w) {
      detail::ChunkResult& result = results[t];
      const std::uint64_t end = std::min(options.samples, (t + 1) * kBlock);
      for (std::uint64_t i = t * kBlock; i < end; ++i) {
        Rng rng(mix_seed(options.seed, i));
        const auto perm = random_permutation(q, rng);
        ++result.examined;
        const std::uint32_t global = shared_min.load(std::memory_order_relaxed);
        std::uint32_t cutoff = global == std::numeric_limits<std::uint32_t>::max() ? global : global + 1;
        if (result.value) cutoff = std::min(cutoff, *result.value + 1);
        const std::uint32_t value = evaluators[w].evaluate(perm, cutoff);
        if (value < cutoff && detail::better(value, perm, result.value, result.witness)) {
          result.value = value;
          result.witness = perm;
          detail::lower_shared(shared_min, value);
        }
      }
    });
  }

  std::optional<std::uint32_t> best;
  for (const auto& r : results) {
    report.examined += r.examined;
    if (r.value && detail::better(*r.value, r.witness, best, report.witness)) {
      best = r.value;
      report.witness = r.witness;
    }
  }
  report.minimum = best.value_or(0);
  if (report.reduced && report.examined > 0) {
    report.reduction_factor =
        static_cast<double>(detail::factorial(q)) / static_cast<double>(report.examined);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

struct BoundCheck {
  std::size_t longest = 0;
  /// 2 * floor(q / n)
  std::size_t bound_a = 0;
  /// floor(2q / n)
  std::size_t bound_b = 0;
  bool pass_a = false;
  bool pass_b = false;

  bool passed() const noexcept { return pass_a && pass_b; }
};

/// Compares the longest decreasing trail against both lower-bound forms.
inline BoundCheck check_lower_bound(const WeightedGraph& g) {
  const auto report = longest_ordered_trail(g, OrderKind::Decreasing);
  BoundCheck check;
  check.longest = report.optimum;
  check.bound_a = report.bound_a;
  check.bound_b = report.bound_b;
  check.pass_a = check.longest >= check.bound_a;
  check.pass_b = check.longest >= check.bound_b;
  return check;
}

}  // namespace ordtrail
