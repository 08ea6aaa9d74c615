#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tscolor {

using Integer = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kDefaultDigits = 60;

enum class Status { holds, fails, marginal };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::marginal: return "marginal";
  }
  return "?";
}

inline Integer pow_int(Integer base, std::uint64_t exp) {
  Integer r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// C(n, j) by the multiplicative formula; zero when j > n.
inline Integer binomial(std::uint64_t n, std::uint64_t j) {
  if (j > n) return 0;
  if (j > n - j) j = n - j;
  Integer r = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;
  }
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

// Probability that a fixed color lands on exactly j of n vertices colored
// uniformly from t colors: C(n,j) t^-j ((t-1)/t)^(n-j).
inline Rational theta(std::uint64_t n, std::uint64_t j, std::uint32_t t) {
  if (t < 2) throw std::invalid_argument("theta: t must be >= 2");
  if (j > n) throw std::invalid_argument("theta: j > n");
  return make_rational(binomial(n, j) * pow_int(t - 1, n - j), pow_int(t, n));
}

// Probability that a fixed color appears at most s-1 times on an edge of
// size k. Terms with j > k vanish, so s > k is allowed.
inline Rational bad_event_prob(std::uint64_t k, std::uint64_t s, std::uint32_t t) {
  if (t < 2) throw std::invalid_argument("bad_event_prob: t must be >= 2");
  if (s < 1) throw std::invalid_argument("bad_event_prob: s must be >= 1");
  Integer num = 0;
  const std::uint64_t top = std::min<std::uint64_t>(s - 1, k);
  for (std::uint64_t j = 0; j <= top; ++j) num += binomial(k, j) * pow_int(t - 1, k - j);
  return make_rational(num, pow_int(t, k));
}

// Rational enclosure [lower, upper] of Euler's number with both ends on the
// grid 10^-digits (lower rounded down, upper rounded up).
struct EulerInterval {
  Rational lower;
  Rational upper;
  unsigned digits = kDefaultDigits;
};

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Integer ceil(const Rational& q) {
  return -floor_div(-boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline EulerInterval compute_euler_interval(unsigned digits) {
  const Integer scale = pow_int(10, digits);
  // Partial sums S_N = sum_{i<=N} 1/i!; the tail is below 1/(N * N!).
  Rational partial = 0;
  Integer factorial = 1;
  std::uint64_t N = 0;
  for (;; ++N) {
    if (N > 0) factorial *= N;
    partial += make_rational(1, factorial);
    // Stop once the tail bound is under a tenth of one grid step.
    if (N >= 2 && factorial * N > scale * 10) break;
  }
  const Rational tail = make_rational(1, factorial * N);
  EulerInterval e;
  e.digits = digits;
  e.lower = make_rational(floor(partial * scale), scale);
  e.upper = make_rational(ceil((partial + tail) * scale), scale);
  return e;
}

// Cached per precision; references stay valid for the program lifetime.
inline const EulerInterval& euler_interval(unsigned digits = kDefaultDigits) {
  if (digits == kDefaultDigits) {
    static const EulerInterval cached = compute_euler_interval(kDefaultDigits);
    return cached;
  }
  static std::mutex mu;
  static std::map<unsigned, EulerInterval> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(digits);
  if (it == cache.end()) it = cache.emplace(digits, compute_euler_interval(digits)).first;
  return it->second;
}

struct Interval {
  Rational lower;
  Rational upper;
};

// Encloses e * factor and classifies it against 1.
inline Interval scale_by_e(const Rational& factor, const EulerInterval& e) {
  return {e.lower * factor, e.upper * factor};
}

inline Status classify(const Interval& lhs) {
  if (lhs.upper <= 1) return Status::holds;
  if (lhs.lower > 1) return Status::fails;
  return Status::marginal;
}

struct Verdict {
  Status status = Status::fails;
  Rational lhs_lower;
  Rational lhs_upper;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint32_t t = 2;
  std::uint64_t s = 1;
  // k >= s*t, the hypothesis under which the condition implies colorability.
  bool feasible = false;
};

// The event-graph degree bound plus one: (d+1)(t-1)+1.
inline Integer closed_neighborhood_size(std::uint64_t d, std::uint32_t t) {
  return Integer(d + 1) * (t - 1) + 1;
}

// Evaluates e * p * ((d+1)(t-1)+1) <= 1 with p the bad-event probability
// for edges of size k. Interval classification is done before the
// feasibility check, so an infeasible "holds" is reported as fails.
inline Verdict lll_verdict(std::uint64_t k, std::uint64_t d, std::uint32_t t, std::uint64_t s,
                           const EulerInterval& e = euler_interval()) {
  if (k < 1 || t < 2 || s < 1) throw std::invalid_argument("lll_verdict: need k >= 1, t >= 2, s >= 1");
  Verdict v;
  v.k = k;
  v.d = d;
  v.t = t;
  v.s = s;
  v.feasible = Integer(k) >= Integer(s) * t;
  const Rational factor = bad_event_prob(k, s, t) * Rational(closed_neighborhood_size(d, t));
  auto lhs = scale_by_e(factor, e);
  v.lhs_lower = lhs.lower;
  v.lhs_upper = lhs.upper;
  v.status = classify(lhs);
  if (!v.feasible && v.status == Status::holds) v.status = Status::fails;
  return v;
}

// The four earlier sufficient conditions, each from its own closed form, next
// to the general condition. Fields are empty where the parameter pattern does
// not apply.
struct SpecializationReport {
  Verdict main;
  std::optional<Status> erdos_lovasz;    // t=2, s=1: e(d+1) <= 2^(k-1)
  std::optional<Status> mcdiarmid_2col;  // t=2, s=1: e(d+2) <= 2^k
  std::optional<Status> mcdiarmid_tcol;  // s=1
  std::optional<Status> chen_s2;         // s=2, k >= 2t
  std::optional<bool> mcdiarmid_2col_consistent;
  std::optional<bool> mcdiarmid_tcol_consistent;
  std::optional<bool> chen_s2_consistent;
};

inline SpecializationReport specialized_bounds(std::uint64_t k, std::uint64_t d, std::uint32_t t,
                                               std::uint64_t s,
                                               const EulerInterval& e = euler_interval()) {
  SpecializationReport r;
  r.main = lll_verdict(k, d, t, s, e);
  const Rational nbhd(closed_neighborhood_size(d, t));
  const Rational q = make_rational(t - 1, t);

  if (t == 2 && s == 1) {
    r.erdos_lovasz = classify(scale_by_e(make_rational(Integer(d) + 1, pow_int(2, k - 1)), e));
    r.mcdiarmid_2col = classify(scale_by_e(make_rational(Integer(d) + 2, pow_int(2, k)), e));
    r.mcdiarmid_2col_consistent = *r.mcdiarmid_2col == r.main.status;
  }
  if (s == 1) {
    Rational pk = make_rational(pow_int(t - 1, k), pow_int(t, k));
    r.mcdiarmid_tcol = classify(scale_by_e(pk * nbhd, e));
    r.mcdiarmid_tcol_consistent = *r.mcdiarmid_tcol == r.main.status;
  }
  if (s == 2 && Integer(k) >= Integer(2) * t) {
    Rational qk1 = make_rational(pow_int(t - 1, k - 1), pow_int(t, k - 1));
    Rational factor = qk1 * (q + make_rational(k, t)) * nbhd;
    r.chen_s2 = classify(scale_by_e(factor, e));
    r.chen_s2_consistent = *r.chen_s2 == r.main.status;
  }
  return r;
}

// Largest d with lll_verdict(k, d, t, s) == holds, or nullopt when none
// exists (including every k < s*t).
inline std::optional<std::uint64_t> max_feasible_d(std::uint64_t k, std::uint32_t t, std::uint64_t s,
                                                   const EulerInterval& e = euler_interval()) {
  if (k < 1 || t < 2 || s < 1) throw std::invalid_argument("max_feasible_d: need k >= 1, t >= 2, s >= 1");
  if (Integer(k) < Integer(s) * t) return std::nullopt;
  // holds <=> e_hi * p * ((d+1)(t-1)+1) <= 1 <=> d+1 <= (1/(e_hi p) - 1)/(t-1).
  const Rational p = bad_event_prob(k, s, t);
  const Rational limit = (Rational(1) / (e.upper * p) - 1) / (t - 1);
  Integer d1 = floor(limit);
  if (d1 < 1) return std::nullopt;
  Integer d = d1 - 1;
  if (d > Integer(UINT64_MAX)) throw std::overflow_error("max_feasible_d exceeds 64 bits");
  return static_cast<std::uint64_t>(d);
}

// Decimal rendering of q with exactly `digits` fractional digits, rounded
// toward -inf (round_up = false) or +inf (round_up = true).
inline std::string to_decimal(const Rational& q, unsigned digits, bool round_up) {
  const Integer scale = pow_int(10, digits);
  Integer scaled = round_up ? ceil(q * scale) : floor(q * scale);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

}  // namespace tscolor
