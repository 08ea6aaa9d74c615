#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "tscolor/event_graph.hpp"
#include "tscolor/hypergraph.hpp"
#include "tscolor/rng.hpp"

namespace tscolor {

// Each vertex gets an independent uniform color from 0..t-1, in vertex order.
inline Coloring random_coloring(std::size_t n, std::uint32_t t, Xoshiro256& rng) {
  if (t < 2) throw std::invalid_argument("random_coloring: t must be >= 2");
  Coloring c{t, std::vector<Color>(n)};
  for (auto& x : c.assignment) x = static_cast<Color>(rng.below(t));
  return c;
}

// All (edge, color) pairs whose color occurs fewer than s times, sorted.
inline std::vector<EventId> violated_events(const Hypergraph& h, const Coloring& c, std::size_t s) {
  std::vector<EventId> out;
  for (const auto& v : verify_coloring(h, c, s).violations) out.push_back({v.edge, v.color});
  return out;
}

enum class SelectionRule { lowest_index, random };

struct SolveConfig {
  std::uint64_t seed = 0;
  // 0 selects the default of 1000 * m * t.
  std::uint64_t max_resamples = 0;
  SelectionRule selection_rule = SelectionRule::lowest_index;
  std::uint32_t t = 2;
  std::size_t s = 1;
  // Optional per-step trace: "<step> e<f>_c<i> <violations after step>".
  std::ostream* log = nullptr;
};

enum class SolveOutcome { solved, cap_exhausted, infeasible };

inline const char* to_string(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::solved: return "solved";
    case SolveOutcome::cap_exhausted: return "cap_exhausted";
    case SolveOutcome::infeasible: return "infeasible";
  }
  return "?";
}

struct SolveResult {
  SolveOutcome outcome = SolveOutcome::infeasible;
  std::optional<Coloring> coloring;
  std::uint64_t resample_count = 0;
  std::size_t initial_violations = 0;
};

inline std::uint64_t default_max_resamples(const Hypergraph& h, std::uint32_t t) {
  return std::max<std::uint64_t>(1, 1000ULL * h.num_edges() * t);
}

namespace detail {

// Violated event indices (edge * t + color), supporting O(log n) min and O(1)
// uniform sampling.
class ViolationSet {
 public:
  explicit ViolationSet(std::size_t universe) : pos_(universe, kAbsent) {}

  bool empty() const { return dense_.empty(); }
  std::size_t size() const { return dense_.size(); }

  void insert(std::size_t e) {
    if (pos_[e] != kAbsent) return;
    pos_[e] = dense_.size();
    dense_.push_back(e);
    ordered_.insert(e);
  }

  void erase(std::size_t e) {
    if (pos_[e] == kAbsent) return;
    const std::size_t p = pos_[e];
    dense_[p] = dense_.back();
    pos_[dense_[p]] = p;
    dense_.pop_back();
    pos_[e] = kAbsent;
    ordered_.erase(e);
  }

  std::size_t lowest() const { return *ordered_.begin(); }
  std::size_t at(std::size_t i) const { return dense_[i]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> dense_;
  std::set<std::size_t> ordered_;
};

}  // namespace detail

// Incremental resampling state over one hypergraph: the current coloring,
// per-edge color counts and the set of violated events. Only edges meeting a
// resampled edge are touched by a step.
class Resampler {
 public:
  Resampler(const Hypergraph& h, std::uint32_t t, std::size_t s, std::uint64_t seed)
      : h_(h), t_(t), s_(s), rng_(seed), inc_(h.incidence()), violated_(h.num_edges() * t) {
    if (t < 2) throw std::invalid_argument("Resampler: t must be >= 2");
    if (s < 1) throw std::invalid_argument("Resampler: s must be >= 1");
    coloring_ = random_coloring(h.num_vertices(), t, rng_);
    for (std::size_t v = 0; v < inc_.size(); ++v)
      if (inc_[v].empty()) coloring_.assignment[v] = 0;
    counts_.assign(h.num_edges() * t, 0);
    for (std::size_t f = 0; f < h.num_edges(); ++f)
      for (Vertex v : h.edge(f)) ++counts_[f * t + coloring_.assignment[v]];
    for (std::size_t e = 0; e < counts_.size(); ++e) refresh(e);
  }

  Resampler(Hypergraph&&, std::uint32_t, std::size_t, std::uint64_t) = delete;

  const Coloring& coloring() const noexcept { return coloring_; }
  std::size_t violation_count() const noexcept { return violated_.size(); }
  bool done() const noexcept { return violated_.empty(); }

  // Picks a violated event and recolors its edge. Requires !done().
  EventId step(SelectionRule rule) {
    if (done()) throw std::logic_error("Resampler::step with no violated event");
    const std::size_t event = rule == SelectionRule::lowest_index
                                  ? violated_.lowest()
                                  : violated_.at(rng_.below(violated_.size()));
    const std::size_t f = event / t_;
    for (Vertex v : h_.edge(f)) {
      const Color old_color = coloring_.assignment[v];
      const auto new_color = static_cast<Color>(rng_.below(t_));
      if (new_color == old_color) continue;
      coloring_.assignment[v] = new_color;
      for (std::size_t g : inc_[v]) {
        --counts_[g * t_ + old_color];
        ++counts_[g * t_ + new_color];
        refresh(g * t_ + old_color);
        refresh(g * t_ + new_color);
      }
    }
    return {f, static_cast<Color>(event % t_)};
  }

  Coloring take_coloring() && { return std::move(coloring_); }

 private:
  void refresh(std::size_t event) {
    if (counts_[event] < s_)
      violated_.insert(event);
    else
      violated_.erase(event);
  }

  const Hypergraph& h_;
  std::uint32_t t_;
  std::size_t s_;
  Xoshiro256 rng_;
  std::vector<std::vector<std::size_t>> inc_;
  Coloring coloring_;
  std::vector<std::size_t> counts_;
  detail::ViolationSet violated_;
};

// Random coloring followed by resampling: while some event is violated, pick
// one and recolor every vertex of its edge uniformly at random.
inline SolveResult moser_tardos_solve(const Hypergraph& h, const SolveConfig& config) {
  if (config.t < 2) throw std::invalid_argument("moser_tardos_solve: t must be >= 2");
  if (config.s < 1) throw std::invalid_argument("moser_tardos_solve: s must be >= 1");

  SolveResult result;
  if (!h.edgeless() && min_edge_size(h) < config.s * config.t) {
    result.outcome = SolveOutcome::infeasible;
    return result;
  }
  const std::uint64_t cap =
      config.max_resamples ? config.max_resamples : default_max_resamples(h, config.t);

  Resampler state(h, config.t, config.s, config.seed);
  result.initial_violations = state.violation_count();
  while (!state.done() && result.resample_count < cap) {
    const EventId picked = state.step(config.selection_rule);
    ++result.resample_count;
    if (config.log)
      *config.log << result.resample_count << ' ' << node_name(picked) << ' '
                  << state.violation_count() << '\n';
  }

  if (!state.done()) {
    result.outcome = SolveOutcome::cap_exhausted;
    return result;
  }
  Coloring c = std::move(state).take_coloring();
  if (!verify_coloring(h, c, config.s).valid)
    throw std::logic_error("moser_tardos_solve: incremental counts diverged from verifier");
  result.outcome = SolveOutcome::solved;
  result.coloring = std::move(c);
  return result;
}

}  // namespace tscolor
