#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscolor/bounds.hpp"
#include "tscolor/hypergraph.hpp"

namespace tscolor {

inline constexpr unsigned kDefaultOracleBudgetBits = 24;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool exists = false;
  std::optional<Coloring> witness;
  std::optional<std::uint64_t> count;
};

// True iff t^n <= 2^budget_bits.
inline bool within_budget(std::size_t n, std::uint32_t t, unsigned budget_bits) {
  if (budget_bits >= 64) throw std::invalid_argument("budget_bits must be < 64");
  const std::uint64_t limit = std::uint64_t{1} << budget_bits;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / t) return false;
    total *= t;
  }
  return total <= limit;
}

namespace detail {

// Depth-first enumeration in base-t lexicographic order with vertex 0 least
// significant: the highest vertex is fixed first. A branch is cut once some
// edge has a color whose count plus the edge's unassigned vertices is < s.
class ColoringEnumerator {
 public:
  ColoringEnumerator(const Hypergraph& h, std::uint32_t t, std::size_t s, bool want_count)
      : h_(h), t_(t), s_(s), want_count_(want_count), inc_(h.incidence()),
        counts_(h.num_edges() * t, 0), unassigned_(h.num_edges()), current_{t, std::vector<Color>(h.num_vertices(), 0)} {
    for (std::size_t f = 0; f < h.num_edges(); ++f) unassigned_[f] = h.edge(f).size();
  }

  OracleResult run() {
    // An edge that is too small can never be satisfied.
    for (std::size_t f = 0; f < h_.num_edges(); ++f)
      if (h_.edge(f).size() < s_ * t_) return finish();
    descend(h_.num_vertices());
    return finish();
  }

 private:
  OracleResult finish() {
    OracleResult r;
    r.exists = witness_.has_value();
    r.witness = witness_;
    if (want_count_) r.count = count_;
    return r;
  }

  bool viable(std::size_t f) const {
    for (Color i = 0; i < t_; ++i)
      if (counts_[f * t_ + i] + unassigned_[f] < s_) return false;
    return true;
  }

  // Assigns vertices [0, remaining). Returns true to stop the search.
  bool descend(std::size_t remaining) {
    if (remaining == 0) {
      if (!witness_) witness_ = current_;
      ++count_;
      return !want_count_;
    }
    const std::size_t v = remaining - 1;
    for (Color c = 0; c < t_; ++c) {
      current_.assignment[v] = c;
      bool ok = true;
      for (std::size_t f : inc_[v]) {
        ++counts_[f * t_ + c];
        --unassigned_[f];
      }
      for (std::size_t f : inc_[v]) ok = ok && viable(f);
      const bool stop = ok && descend(v);
      for (std::size_t f : inc_[v]) {
        --counts_[f * t_ + c];
        ++unassigned_[f];
      }
      if (stop) return true;
    }
    current_.assignment[v] = 0;
    return false;
  }

  const Hypergraph& h_;
  std::uint32_t t_;
  std::size_t s_;
  bool want_count_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> unassigned_;
  Coloring current_;
  std::optional<Coloring> witness_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

// Exhaustive ground truth. Throws BudgetExceeded when t^n > 2^budget_bits.
inline OracleResult brute_force(const Hypergraph& h, std::uint32_t t, std::size_t s, bool want_count,
                                unsigned budget_bits = kDefaultOracleBudgetBits) {
  if (t < 2) throw std::invalid_argument("brute_force: t must be >= 2");
  if (s < 1) throw std::invalid_argument("brute_force: s must be >= 1");
  if (!within_budget(h.num_vertices(), t, budget_bits))
    throw BudgetExceeded(std::to_string(t) + "^" + std::to_string(h.num_vertices()) +
                         " colorings exceed the budget of 2^" + std::to_string(budget_bits));
  return detail::ColoringEnumerator(h, t, s, want_count).run();
}

struct ConsistencyEntry {
  std::size_t index = 0;
  // Empty for edgeless instances, which are trivially colorable.
  std::optional<Verdict> verdict;
  bool exists = false;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;
  // Indices of instances with verdict holds but no coloring.
  std::vector<std::size_t> counterexamples;
  std::size_t holds_count = 0;

  bool ok() const { return counterexamples.empty(); }
};

// Compares the sufficiency condition (at each instance's own k and d) with
// exhaustive search.
inline ConsistencyReport consistency_sweep(const std::vector<Hypergraph>& corpus, std::uint32_t t,
                                           std::size_t s,
                                           unsigned budget_bits = kDefaultOracleBudgetBits) {
  ConsistencyReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Hypergraph& h = corpus[i];
    ConsistencyEntry entry;
    entry.index = i;
    entry.exists = brute_force(h, t, s, false, budget_bits).exists;
    if (!h.edgeless()) {
      entry.verdict = lll_verdict(min_edge_size(h), max_overlap_degree(h), t, s);
      if (entry.verdict->status == Status::holds) {
        ++report.holds_count;
        if (!entry.exists) report.counterexamples.push_back(i);
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace tscolor
