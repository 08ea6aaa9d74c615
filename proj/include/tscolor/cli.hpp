#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tscolor/bounds.hpp"
#include "tscolor/event_graph.hpp"
#include "tscolor/generators.hpp"
#include "tscolor/hypergraph.hpp"
#include "tscolor/oracle.hpp"
#include "tscolor/solver.hpp"

namespace tscolor::cli {

enum ExitCode : int {
  kSuccess = 0,      // holds / valid / solved / exists
  kNegative = 1,     // fails / invalid / infeasible / not found
  kMarginal = 2,     // verdict interval straddles 1
  kUsageError = 3,   // bad arguments, unreadable or malformed input
  kExhausted = 4,    // resample cap or oracle budget exhausted
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

inline Hypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_input(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range '" + text + "' is not of the form A..B");
  auto num = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("range '" + text + "' is not of the form A..B");
    return std::stoull(part);
  };
  auto lo = num(text.substr(0, dots));
  auto hi = num(text.substr(dots + 2));
  if (lo > hi) throw InputError("range '" + text + "' is empty");
  return {lo, hi};
}

inline std::string format_interval(const Rational& lo, const Rational& hi, unsigned digits) {
  return "[" + to_decimal(lo, digits, false) + ", " + to_decimal(hi, digits, true) + "]";
}

inline int verdict_exit(Status s) {
  switch (s) {
    case Status::holds: return kSuccess;
    case Status::fails: return kNegative;
    case Status::marginal: return kMarginal;
  }
  return kNegative;
}

// Runs `work(i)` for i in [0, count) on `jobs` threads; results land by index.
template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < count; i += jobs) work(i);
    });
  for (auto& th : pool) th.join();
}

struct Options {
  std::string file;
  std::string coloring_file;
  std::uint32_t t = 2;
  std::size_t s = 1;
  unsigned digits = kDefaultDigits;

  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  std::string rule = "lowest";
  std::string output;
  std::string log;

  bool count = false;
  unsigned budget = kDefaultOracleBudgetBits;

  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;

  std::string format = "dot";

  std::string k_range;
  std::string d_range;
  std::string csv;
  bool max_d = false;
  unsigned jobs = 1;
};

inline int cmd_check(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.file);
  if (h.edgeless()) {
    out << "edgeless hypergraph: every coloring is valid\nverdict=holds\n";
    return kSuccess;
  }
  const std::size_t k = min_edge_size(h);
  const std::size_t d = max_overlap_degree(h);
  const auto& e = euler_interval(o.digits);
  const SpecializationReport r = specialized_bounds(k, d, o.t, o.s, e);
  const Verdict& v = r.main;
  out << "k=" << k << " d=" << d << " t=" << o.t << " s=" << o.s << '\n';
  out << "feasible=" << (v.feasible ? "true" : "false") << " (k >= s*t)\n";
  out << "verdict=" << to_string(v.status) << '\n';
  out << "lhs=" << format_interval(v.lhs_lower, v.lhs_upper, o.digits) << '\n';
  auto line = [&](const char* name, const std::optional<Status>& st, const std::optional<bool>& same) {
    if (!st) return;
    out << "  " << name << '=' << to_string(*st);
    if (same) out << " consistent=" << (*same ? "true" : "false");
    out << '\n';
  };
  out << "specializations:\n";
  line("erdos_lovasz e(d+1)<=2^(k-1)", r.erdos_lovasz, std::nullopt);
  line("mcdiarmid_2col e(d+2)<=2^k", r.mcdiarmid_2col, r.mcdiarmid_2col_consistent);
  line("mcdiarmid_tcol s=1", r.mcdiarmid_tcol, r.mcdiarmid_tcol_consistent);
  line("chen_s2 s=2,k>=2t", r.chen_s2, r.chen_s2_consistent);
  return verdict_exit(v.status);
}

inline int cmd_solve(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.file);
  SolveConfig config;
  config.seed = o.seed;
  config.max_resamples = o.cap;
  config.selection_rule = o.rule == "random" ? SelectionRule::random : SelectionRule::lowest_index;
  config.t = o.t;
  config.s = o.s;
  std::ostringstream trace;
  if (!o.log.empty()) config.log = &trace;

  const SolveResult r = moser_tardos_solve(h, config);
  if (!o.log.empty()) write_file(o.log, trace.str());

  out << "# outcome=" << to_string(r.outcome) << '\n';
  out << "# resamples=" << r.resample_count << '\n';
  out << "# initial_violations=" << r.initial_violations << '\n';
  if (r.coloring) {
    if (o.output.empty())
      out << to_string(*r.coloring);
    else
      write_file(o.output, to_string(*r.coloring));
  }
  switch (r.outcome) {
    case SolveOutcome::solved: return kSuccess;
    case SolveOutcome::cap_exhausted: return kExhausted;
    case SolveOutcome::infeasible: return kNegative;
  }
  return kNegative;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.file);
  Coloring c;
  try {
    c = parse_coloring(read_input(o.coloring_file), h.num_vertices(), o.t);
  } catch (const ParseError& e) {
    throw InputError(o.coloring_file + ": " + e.what());
  }
  VerificationReport r;
  try {
    r = verify_coloring(h, c, o.s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << (r.valid ? "valid" : "invalid") << '\n';
  for (const auto& v : r.violations)
    out << "edge " << v.edge << " color " << v.color << " count " << v.count << '\n';
  return r.valid ? kSuccess : kNegative;
}

inline int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_hypergraph(o.file);
  OracleResult r;
  try {
    r = brute_force(h, o.t, o.s, o.count, o.budget);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExhausted;
  }
  out << "exists=" << (r.exists ? "true" : "false") << '\n';
  if (r.count) out << "count=" << *r.count << '\n';
  if (r.witness) out << "# witness\n" << to_string(*r.witness);
  return r.exists ? kSuccess : kNegative;
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  auto family = parse_family(o.family);
  if (!family) throw InputError("unknown family '" + o.family + "'");
  try {
    out << to_string(generate({*family, o.n, o.m, o.k, o.seed}));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kSuccess;
}

inline int cmd_graph(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.file);
  const EventGraph g = build_event_graph(h, o.t);
  const std::size_t delta = event_graph_max_degree(g);
  const bool dot = o.format == "dot";
  const char* comment = dot ? "// " : "# ";
  out << comment << "max_degree=" << delta;
  if (!h.edgeless())
    out << " bound=" << (max_overlap_degree(h) + 1) * (o.t - 1) << " (d+1)(t-1) with d="
        << max_overlap_degree(h);
  out << '\n';
  out << (dot ? export_dot(g) : export_edgelist(g));
  return kSuccess;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const auto [k_lo, k_hi] = parse_range(o.k_range);
  if (k_lo < 1) throw InputError("k must be >= 1");
  const auto& e = euler_interval(o.digits);
  std::ostringstream csv;

  if (o.max_d) {
    const std::size_t rows = k_hi - k_lo + 1;
    std::vector<std::string> lines(rows);
    parallel_for(rows, o.jobs, [&](std::size_t i) {
      const auto d = max_feasible_d(k_lo + i, o.t, o.s, e);
      lines[i] = std::to_string(k_lo + i) + "," + (d ? std::to_string(*d) : "none") + "\n";
    });
    csv << "k,max_d\n";
    for (const auto& l : lines) csv << l;
  } else {
    if (o.d_range.empty()) throw InputError("--d-range is required without --max-d");
    const auto [d_lo, d_hi] = parse_range(o.d_range);
    const std::size_t d_count = d_hi - d_lo + 1;
    const std::size_t rows = (k_hi - k_lo + 1) * d_count;
    std::vector<std::string> lines(rows);
    parallel_for(rows, o.jobs, [&](std::size_t i) {
      const std::uint64_t k = k_lo + i / d_count;
      const std::uint64_t d = d_lo + i % d_count;
      const Verdict v = lll_verdict(k, d, o.t, o.s, e);
      std::ostringstream row;
      row << k << ',' << d << ',' << o.t << ',' << o.s << ',' << (v.feasible ? "true" : "false") << ','
          << to_string(v.status) << ',' << to_decimal(v.lhs_lower, o.digits, false) << ','
          << to_decimal(v.lhs_upper, o.digits, true) << '\n';
      lines[i] = row.str();
    });
    csv << "k,d,t,s,feasible,status,lhs_lo,lhs_hi\n";
    for (const auto& l : lines) csv << l;
  }

  if (o.csv.empty())
    out << csv.str();
  else
    write_file(o.csv, csv.str());
  return kSuccess;
}

}  // namespace detail

// Entry point shared by the tscolor binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"(t,s)-colorings of hypergraphs: sufficiency bounds, resampling solver, exhaustive oracle",
               "tscolor"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_ts = [&](CLI::App* sub, bool with_s) {
    sub->add_option("--t", o.t, "number of colors")->required()->check(CLI::Range(2u, 1u << 20));
    if (with_s) sub->add_option("--s", o.s, "minimum occurrences per color per edge")->required()->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "evaluate the sufficiency condition for a hypergraph file");
  check->add_option("file", o.file, "hypergraph file, '-' for stdin")->required();
  add_ts(check, true);
  check->add_option("--digits", o.digits, "decimal digits of the e enclosure")->check(CLI::Range(1u, 10000u));

  auto* solve = app.add_subcommand("solve", "find a coloring by random resampling");
  solve->add_option("file", o.file, "hypergraph file, '-' for stdin")->required();
  add_ts(solve, true);
  solve->add_option("--seed", o.seed, "PRNG seed");
  solve->add_option("--cap", o.cap, "maximum resampling steps (default 1000*m*t)")->check(CLI::PositiveNumber);
  solve->add_option("--rule", o.rule, "event selection rule")->check(CLI::IsMember({"lowest", "random"}));
  solve->add_option("-o,--output", o.output, "write the coloring here instead of stdout");
  solve->add_option("--log", o.log, "write a per-step trace to this file");

  auto* verify = app.add_subcommand("verify", "check a coloring file against a hypergraph");
  verify->add_option("file", o.file, "hypergraph file")->required();
  verify->add_option("coloring", o.coloring_file, "coloring file")->required();
  add_ts(verify, true);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search for a coloring");
  oracle->add_option("file", o.file, "hypergraph file, '-' for stdin")->required();
  add_ts(oracle, true);
  oracle->add_flag("--count", o.count, "count all valid colorings");
  oracle->add_option("--budget", o.budget, "enumerate at most 2^B colorings")->check(CLI::Range(0u, 40u));

  auto* gen = app.add_subcommand("gen", "print a generated hypergraph");
  gen->add_option("--family", o.family, "uniform_random|disjoint|edge_cycle|complete_ksets|fano")->required();
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--m", o.m, "edge count");
  gen->add_option("--k", o.k, "edge size");
  gen->add_option("--seed", o.seed, "PRNG seed");

  auto* graph = app.add_subcommand("graph", "export the event dependency graph");
  graph->add_option("file", o.file, "hypergraph file, '-' for stdin")->required();
  add_ts(graph, false);
  graph->add_option("--format", o.format, "dot or edgelist")->check(CLI::IsMember({"dot", "edgelist"}));

  auto* sweep = app.add_subcommand("sweep", "evaluate the condition over a (k, d) grid");
  sweep->add_option("--k-range", o.k_range, "A..B")->required();
  sweep->add_option("--d-range", o.d_range, "A..B");
  add_ts(sweep, true);
  sweep->add_option("--csv", o.csv, "write CSV here instead of stdout");
  sweep->add_flag("--max-d", o.max_d, "emit the largest d satisfying the condition for each k");
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_option("--digits", o.digits, "decimal digits of the e enclosure")->check(CLI::Range(1u, 10000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (check->parsed()) return detail::cmd_check(o, out);
    if (solve->parsed()) return detail::cmd_solve(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, out);
    if (oracle->parsed()) return detail::cmd_oracle(o, out, err);
    if (gen->parsed()) return detail::cmd_gen(o, out);
    if (graph->parsed()) return detail::cmd_graph(o, out);
    if (sweep->parsed()) return detail::cmd_sweep(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace tscolor::cli
