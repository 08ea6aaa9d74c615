#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tscolor {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::vector<Vertex>;

// Thrown for malformed hypergraph / coloring text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A finite hypergraph on vertices 0..n-1. Edges are non-empty, strictly
// increasing and pairwise distinct. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Canonicalizes each edge (sorts it) and validates all invariants.
  Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.empty()) throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
      if (e.back() >= n_)
        throw std::invalid_argument("edge " + std::to_string(i) + " has vertex " +
                                    std::to_string(e.back()) + " >= n");
      if (!seen.insert(e).second)
        throw std::invalid_argument("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool edgeless() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  // For each vertex, the indices of the edges containing it (ascending).
  std::vector<std::vector<std::size_t>> incidence() const {
    std::vector<std::vector<std::size_t>> inc(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (Vertex v : edges_[i]) inc[v].push_back(i);
    return inc;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// An assignment vertex -> color in 0..t-1.
struct Coloring {
  std::uint32_t t = 2;
  std::vector<Color> assignment;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Violation {
  std::size_t edge;
  Color color;
  std::size_t count;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

namespace detail {

inline bool is_skippable_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && line[pos] == '#';
}

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Parses a whitespace-separated list of non-negative integers.
inline std::vector<std::uint64_t> parse_integers(const std::string& line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "expected a non-negative integer, got '" + tok + "'");
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::out_of_range&) {
      throw ParseError(lineno, "integer out of range: " + tok);
    }
  }
  return out;
}

// Yields (line number, content) of every non-comment line.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (!is_skippable_comment(line)) out.emplace_back(lineno, std::string(line));
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// Reads the text hypergraph format: '#' comment lines, a header "n m", then
// m lines of vertex indices. Blank lines are ignored outside the edge block.
inline Hypergraph parse_hypergraph(std::string_view text) {
  auto lines = detail::content_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && detail::is_blank(lines[idx].second)) ++idx;
  if (idx == lines.size()) throw ParseError(0, "missing header \"n m\"");

  auto [header_line, header] = lines[idx++];
  auto nm = detail::parse_integers(header, header_line);
  if (nm.size() != 2) throw ParseError(header_line, "malformed header, expected \"n m\"");
  const std::size_t n = nm[0];
  const std::size_t m = nm[1];

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t e = 0; e < m; ++e) {
    if (idx == lines.size())
      throw ParseError(lines.empty() ? 0 : lines.back().first,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    auto [lineno, content] = lines[idx++];
    auto ids = detail::parse_integers(content, lineno);
    if (ids.empty()) throw ParseError(lineno, "empty edge");
    Edge edge;
    edge.reserve(ids.size());
    for (auto v : ids) {
      if (v >= n)
        throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range (n = " +
                                     std::to_string(n) + ")");
      edge.push_back(static_cast<Vertex>(v));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw ParseError(lineno, "edge repeats a vertex");
    if (!seen.insert(edge).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(edge));
  }
  for (; idx < lines.size(); ++idx)
    if (!detail::is_blank(lines[idx].second))
      throw ParseError(lines[idx].first, "more edges than the declared " + std::to_string(m));

  return Hypergraph(n, std::move(edges));
}

inline std::string to_string(const Hypergraph& h) {
  std::ostringstream out;
  out << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

// Reads "v c" lines, one per vertex 0..n-1, each exactly once.
inline Coloring parse_coloring(std::string_view text, std::size_t n, std::uint32_t t) {
  Coloring c{t, std::vector<Color>(n, 0)};
  std::vector<bool> assigned(n, false);
  std::size_t count = 0;
  for (const auto& [lineno, content] : detail::content_lines(text)) {
    if (detail::is_blank(content)) continue;
    auto vc = detail::parse_integers(content, lineno);
    if (vc.size() != 2) throw ParseError(lineno, "expected \"vertex color\"");
    if (vc[0] >= n) throw ParseError(lineno, "vertex " + std::to_string(vc[0]) + " out of range");
    if (assigned[vc[0]])
      throw ParseError(lineno, "vertex " + std::to_string(vc[0]) + " colored twice");
    if (vc[1] > UINT32_MAX) throw ParseError(lineno, "color out of range");
    assigned[vc[0]] = true;
    c.assignment[vc[0]] = static_cast<Color>(vc[1]);
    ++count;
  }
  if (count != n)
    throw ParseError(0, "coloring covers " + std::to_string(count) + " of " + std::to_string(n) +
                            " vertices");
  return c;
}

inline std::string to_string(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.assignment.size(); ++v) out << v << ' ' << c.assignment[v] << '\n';
  return out.str();
}

// k in the sufficiency condition. Throws on an edgeless hypergraph.
inline std::size_t min_edge_size(const Hypergraph& h) {
  if (h.edgeless()) throw std::domain_error("min_edge_size of an edgeless hypergraph");
  std::size_t k = h.edges().front().size();
  for (const auto& e : h.edges()) k = std::min(k, e.size());
  return k;
}

// For every edge f, the sorted indices of the other edges g with f ∩ g ≠ ∅.
inline std::vector<std::vector<std::size_t>> edge_overlaps(const Hypergraph& h) {
  const auto inc = h.incidence();
  std::vector<std::vector<std::size_t>> out(h.num_edges());
  for (std::size_t f = 0; f < h.num_edges(); ++f) {
    auto& nb = out[f];
    for (Vertex v : h.edge(f))
      for (std::size_t g : inc[v])
        if (g != f) nb.push_back(g);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return out;
}

// d in the sufficiency condition. Throws on an edgeless hypergraph.
inline std::size_t max_overlap_degree(const Hypergraph& h) {
  if (h.edgeless()) throw std::domain_error("max_overlap_degree of an edgeless hypergraph");
  std::size_t d = 0;
  for (const auto& nb : edge_overlaps(h)) d = std::max(d, nb.size());
  return d;
}

// Checks that every color 0..t-1 appears at least s times on every edge.
inline VerificationReport verify_coloring(const Hypergraph& h, const Coloring& c, std::size_t s) {
  if (c.assignment.size() != h.num_vertices())
    throw std::invalid_argument("coloring has " + std::to_string(c.assignment.size()) +
                                " entries, hypergraph has " + std::to_string(h.num_vertices()) +
                                " vertices");
  if (c.t < 2) throw std::invalid_argument("need at least 2 colors");
  if (s < 1) throw std::invalid_argument("s must be positive");
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    if (c.assignment[v] >= c.t)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(c.assignment[v]) + " >= t");

  VerificationReport report;
  std::vector<std::size_t> counts(c.t);
  for (std::size_t f = 0; f < h.num_edges(); ++f) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex v : h.edge(f)) ++counts[c.assignment[v]];
    for (Color i = 0; i < c.t; ++i)
      if (counts[i] < s) report.violations.push_back({f, i, counts[i]});
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace tscolor
