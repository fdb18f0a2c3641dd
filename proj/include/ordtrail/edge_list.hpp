#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ordtrail/error.hpp"
#include "ordtrail/graph.hpp"

// Edge-list text format:
//   c <text>        comment
//   p <n> <q>       header, once, before any edge
//   e <u> <v> <w>   edge; u, v 1-based; w an integer or decimal

namespace ordtrail {

/// Thrown when a parsed graph breaks a graph condition. code() is the first
/// violation; result() holds all of them.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationResult result)
      : Error(result.violations.front().code, result.violations.front().detail),
        result_(std::move(result)) {}

  const ValidationResult& result() const noexcept { return result_; }

 private:
  ValidationResult result_;
};

enum class ModeSelection { Auto, Strict, Relaxed };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    const std::size_t begin = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > begin) out.push_back(s.substr(begin, k - begin));
  }
  return out;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::size_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace detail

/// Parses and validates an edge list. With ModeSelection::Auto the graph is
/// strict when its weights are exactly the integers 1..q, relaxed otherwise.
inline WeightedGraph parse_edge_list(std::string_view text, ModeSelection selection = ModeSelection::Auto) {
  std::optional<std::size_t> n;
  std::size_t declared_q = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto tokens = detail::split_ws(line);
    const auto kind = tokens.front();
    if (kind == "c") continue;
    if (kind == "p") {
      if (n) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <q>'");
      const auto nv = detail::parse_count(tokens[1]);
      const auto qv = detail::parse_count(tokens[2]);
      if (!nv || !qv) throw ParseError(line_no, "header counts must be non-negative integers");
      if (*nv == 0) throw ParseError(line_no, "vertex count must be at least 1");
      n = *nv;
      declared_q = *qv;
      header_line = line_no;
      continue;
    }
    if (kind == "e") {
      if (!n) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 4) throw ParseError(line_no, "edge must be 'e <u> <v> <w>'");
      const auto u = detail::parse_count(tokens[1]);
      const auto v = detail::parse_count(tokens[2]);
      if (!u || !v) throw ParseError(line_no, "vertex labels must be positive integers");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) {
        throw ParseError(line_no, "vertex label outside 1.." + std::to_string(*n));
      }
      const auto w = Weight::parse(tokens[3]);
      if (!w) throw ParseError(line_no, "malformed weight '" + std::string(tokens[3]) + "'");
      edges.push_back({EdgeKey::of(VertexId::from_label(*u), VertexId::from_label(*v)), *w});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
  }
  if (!n) throw ParseError(line_no, "missing 'p <n> <q>' header");
  if (edges.size() != declared_q) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_q) + " edges, found " +
                                      std::to_string(edges.size()));
  }

  WeightMode mode = selection == ModeSelection::Relaxed ? WeightMode::Relaxed : WeightMode::Strict;
  if (selection == ModeSelection::Auto) {
    const auto strict = WeightedGraph::unchecked(*n, WeightMode::Strict, edges);
    const auto check = validate(strict);
    const bool weights_ok = !check.has(ErrorCode::NotSurjective) &&
                            !check.has(ErrorCode::NonIntegerWeight) &&
                            !check.has(ErrorCode::DuplicateWeight);
    mode = weights_ok ? WeightMode::Strict : WeightMode::Relaxed;
  }
  auto g = WeightedGraph::unchecked(*n, mode, std::move(edges));
  auto result = validate(g);
  if (!result.ok()) throw ValidationError(std::move(result));
  return g;
}

inline std::string render_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.q() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.key.a.label() << ' ' << e.key.b.label() << ' ' << e.weight.to_string() << '\n';
  }
  return out.str();
}

}  // namespace ordtrail
