#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tscolor/bounds.hpp"
#include "tscolor/hypergraph.hpp"
#include "tscolor/rng.hpp"

namespace tscolor {

enum class Family { uniform_random, disjoint, edge_cycle, complete_ksets, fano };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::uniform_random: return "uniform_random";
    case Family::disjoint: return "disjoint";
    case Family::edge_cycle: return "edge_cycle";
    case Family::complete_ksets: return "complete_ksets";
    case Family::fano: return "fano";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::uniform_random, Family::disjoint, Family::edge_cycle,
                   Family::complete_ksets, Family::fano})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

// Parameters per family:
//   uniform_random  n, m, k, seed   m distinct k-subsets of {0..n-1}
//   disjoint        m, k            n = m*k
//   edge_cycle      m >= 3, k >= 2  consecutive edges share one vertex, n = m*(k-1)
//   complete_ksets  n, k            all C(n,k) subsets
//   fano            -               7 points, 7 lines
struct GenSpec {
  Family family = Family::fano;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Floyd's algorithm: a uniform k-subset of {0..n-1}.
inline Edge random_subset(std::size_t n, std::size_t k, Xoshiro256& rng) {
  std::set<Vertex> chosen;
  for (std::size_t j = n - k; j < n; ++j) {
    auto r = static_cast<Vertex>(rng.below(j + 1));
    if (!chosen.insert(r).second) chosen.insert(static_cast<Vertex>(j));
  }
  return Edge(chosen.begin(), chosen.end());
}

}  // namespace detail

inline Hypergraph generate(const GenSpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::uniform_random: {
      if (spec.k < 1 || spec.k > spec.n) throw std::invalid_argument("uniform_random: need 1 <= k <= n");
      if (Integer(spec.m) > binomial(spec.n, spec.k))
        throw std::invalid_argument("uniform_random: m exceeds C(n,k)");
      Xoshiro256 rng(spec.seed);
      std::set<Edge> seen;
      while (edges.size() < spec.m) {
        Edge e = detail::random_subset(spec.n, spec.k, rng);
        if (seen.insert(e).second) edges.push_back(std::move(e));
      }
      return Hypergraph(spec.n, std::move(edges));
    }
    case Family::disjoint: {
      if (spec.k < 1) throw std::invalid_argument("disjoint: need k >= 1");
      for (std::size_t i = 0; i < spec.m; ++i) {
        Edge e(spec.k);
        for (std::size_t j = 0; j < spec.k; ++j) e[j] = static_cast<Vertex>(i * spec.k + j);
        edges.push_back(std::move(e));
      }
      return Hypergraph(spec.m * spec.k, std::move(edges));
    }
    case Family::edge_cycle: {
      if (spec.m < 3 || spec.k < 2) throw std::invalid_argument("edge_cycle: need m >= 3, k >= 2");
      const std::size_t n = spec.m * (spec.k - 1);
      // Edge i covers the k consecutive vertices starting at i*(k-1), wrapping.
      for (std::size_t i = 0; i < spec.m; ++i) {
        Edge e(spec.k);
        for (std::size_t j = 0; j < spec.k; ++j)
          e[j] = static_cast<Vertex>((i * (spec.k - 1) + j) % n);
        edges.push_back(std::move(e));
      }
      return Hypergraph(n, std::move(edges));
    }
    case Family::complete_ksets: {
      if (spec.k < 1 || spec.k > spec.n) throw std::invalid_argument("complete_ksets: need 1 <= k <= n");
      if (binomial(spec.n, spec.k) > 10'000'000)
        throw std::invalid_argument("complete_ksets: more than 10^7 edges");
      Edge e(spec.k);
      for (std::size_t j = 0; j < spec.k; ++j) e[j] = static_cast<Vertex>(j);
      for (;;) {
        edges.push_back(e);
        // Next combination in lexicographic order.
        std::size_t i = spec.k;
        while (i > 0 && e[i - 1] == spec.n - spec.k + i - 1) --i;
        if (i == 0) break;
        ++e[i - 1];
        for (std::size_t j = i; j < spec.k; ++j) e[j] = e[j - 1] + 1;
      }
      return Hypergraph(spec.n, std::move(edges));
    }
    case Family::fano:
      return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace tscolor
