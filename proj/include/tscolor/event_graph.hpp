#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscolor/hypergraph.hpp"

namespace tscolor {

// Names the bad event "color `color` appears on edge `edge` fewer than s times".
struct EventId {
  std::size_t edge = 0;
  Color color = 0;

  friend auto operator<=>(const EventId&, const EventId&) = default;
};

inline std::string node_name(const EventId& e) {
  return "e" + std::to_string(e.edge) + "_c" + std::to_string(e.color);
}

// The t-partite lopsidependency graph: (f,i) ~ (g,j) iff i != j and f ∩ g ≠ ∅
// (f = g included). Events are indexed edge * t + color.
class EventGraph {
 public:
  EventGraph() = default;

  std::uint32_t colors() const noexcept { return t_; }
  std::size_t size() const noexcept { return adjacency_.size(); }

  EventId event(std::size_t index) const {
    return {index / t_, static_cast<Color>(index % t_)};
  }
  std::size_t index(const EventId& e) const { return e.edge * t_ + e.color; }

  // Ascending indices of the events adjacent to `index`.
  const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_.at(index); }

  std::size_t edge_count() const {
    std::size_t sum = 0;
    for (const auto& nb : adjacency_) sum += nb.size();
    return sum / 2;
  }

  friend EventGraph build_event_graph(const Hypergraph& h, std::uint32_t t);

 private:
  std::uint32_t t_ = 2;
  std::vector<std::vector<std::size_t>> adjacency_;
};

inline EventGraph build_event_graph(const Hypergraph& h, std::uint32_t t) {
  if (t < 2) throw std::invalid_argument("build_event_graph: t must be >= 2");
  const auto overlaps = edge_overlaps(h);
  EventGraph g;
  g.t_ = t;
  g.adjacency_.resize(h.num_edges() * t);
  for (std::size_t f = 0; f < h.num_edges(); ++f) {
    // Closed overlap neighborhood of f, ascending.
    std::vector<std::size_t> closed = overlaps[f];
    closed.insert(std::lower_bound(closed.begin(), closed.end(), f), f);
    for (Color i = 0; i < t; ++i) {
      auto& nb = g.adjacency_[f * t + i];
      nb.reserve(closed.size() * (t - 1));
      for (std::size_t other : closed)
        for (Color j = 0; j < t; ++j)
          if (j != i) nb.push_back(other * t + j);
    }
  }
  return g;
}

// Max degree; 0 for the empty graph.
inline std::size_t event_graph_max_degree(const EventGraph& g) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.size(); ++i) best = std::max(best, g.neighbors(i).size());
  return best;
}

inline std::string export_dot(const EventGraph& g) {
  std::ostringstream out;
  out << "graph events {\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << "  " << node_name(g.event(i)) << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j : g.neighbors(i))
      if (i < j) out << "  " << node_name(g.event(i)) << " -- " << node_name(g.event(j)) << ";\n";
  out << "}\n";
  return out.str();
}

// One "e<f>_c<i> e<g>_c<j>" line per adjacent pair, lower index first.
inline std::string export_edgelist(const EventGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j : g.neighbors(i))
      if (i < j) out << node_name(g.event(i)) << ' ' << node_name(g.event(j)) << '\n';
  return out.str();
}

}  // namespace tscolor
