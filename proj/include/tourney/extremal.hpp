#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tourney/counting.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  /// Largest integer not above the value.
  std::int64_t floor() const noexcept;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Closed forms. Each throws BadOrder for an order outside its domain and
// BadResidue for the wrong residue class mod 4.

/// Upper bound on c5 for odd n >= 5: (n+1)n(n-1)(n-2)(n-3)/160, attained iff doubly regular.
Rational c5_upper_bound(int n);
/// c5 of a nearly-doubly-regular tournament, n = 1 (mod 4), n >= 5: n(n-1)(n^3-4n^2+n-14)/160.
std::int64_t c5_nearly_doubly_regular(int n);
/// s5(RLT_n) = (n+1)n(n-1)(n-3)(11n-47)/1920, odd n.
std::int64_t value_s5_rlt(int n);
/// c5(RLT_n) = (n+1)n(n-1)(n-3)(3n-11)/480, odd n.
std::int64_t value_c5_rlt(int n);
/// s5 of a doubly-regular tournament, n = 3 (mod 4): n(n+1)(n-1)(n-3)(17n-59)/3840.
std::int64_t value_s5_dr(int n);
/// s5 of a nearly-doubly-regular tournament, n = 1 (mod 4): n(n-1)(17n^3-93n^2+127n-243)/3840.
std::int64_t value_s5_ndr(int n);
/// Copies of RLT_5 in RLT_n: (n+3)(n+1)n(n-1)(n-3)/1920, odd n.
std::int64_t value_rlt5_copies_in_rlt(int n);
/// Copies of Delta(o,TT3,o) in RLT_n: (n+1)n(n-1)(n-3)(n-5)/384, odd n >= 5.
std::int64_t value_delta_o_tt3_o_copies_in_rlt(int n);
/// Upper bound on a single Komarov-Mackey arc term when n is odd: (n-3)(n-2)/2.
std::int64_t km_arc_term_bound(int n);

/// Expected number of m-cycles in a uniformly random n-tournament: (n)_m / (m 2^m).
Rational expected_cm(int n, int m);

/// c5 + 2 c4 on a regular tournament, against n(n-1)(n+1)(n-3)(n+3)/160, and the
/// walk-count form 32 tr5 + 80 tr4 = n(n-1)(n+1)(n-3)(n+3).
struct CycleIdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  BigCount trace_lhs = 0;
  BigCount trace_rhs = 0;

  bool holds() const noexcept { return lhs == rhs && trace_lhs == trace_rhs; }
};

/// Throws NotRegular.
CycleIdentityCheck cycle_identity(const Tournament& t);

/// c5 of a regular tournament from its local 3-cycle counts:
/// n(n-1)(n+1)(n-3)(3n-11)/480 + sum c3(N+(i)) + sum c3(N-(i)). Throws NotRegular.
std::int64_t c5_regular_from_local_cycles(const Tournament& t);

struct BalancedSum {
  std::int64_t value = 0;
  /// False when n < 2p - 1, where uniqueness of the balanced minimiser is not claimed.
  bool in_range = true;
};

/// Sum of C(d, p) over the balanced in-degree sequence of order n. Throws BadM for p < 2.
BalancedSum balanced_binomial_sum(int n, int p);

/// One verified claim inside a report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BoundReport {
  std::string bound_name;
  int n = 0;
  Rational bound_value;
  std::int64_t observed = 0;
  /// observed equals bound_value (which must then be an integer).
  bool tight = false;
  /// Canonical keys of tournaments attaining `observed`; for sequence sweeps,
  /// comma-separated minimising sequences.
  std::vector<std::string> witnesses;
  std::vector<Check> checks;

  bool holds() const;
};

/// Sweeps all non-decreasing non-negative sequences of length n with sum C(n,2),
/// confirming the minimum of sum C(d_i, p) and, for n >= 2p-1, that the balanced
/// sequence is the unique minimiser. Throws TooLarge for n > 12.
BoundReport verify_balanced_minimum(int n, int p);

/// Maxima of c5 and s5 over every labeled tournament of order n (n <= 7).
struct ExhaustiveMaxima {
  int n = 0;
  std::int64_t max_c5 = 0;
  std::vector<std::uint64_t> c5_maximizers;  // upper-triangle codes
  std::int64_t max_s5 = 0;
  std::vector<std::uint64_t> s5_maximizers;
  std::uint64_t regular_count = 0;
  std::uint64_t total = 0;
};

ExhaustiveMaxima sweep_c5_s5(int n, int threads = 1);

/// c5 <= c5_upper_bound(n) with the equality clause; n in {5, 7}. Throws TooLarge otherwise.
BoundReport c5_max_report(const ExhaustiveMaxima& sweep);
/// max s5 = s5(RLT_n) and the maximiser classes; n in {5, 7}.
BoundReport s5_max_report(const ExhaustiveMaxima& sweep);

BoundReport verify_c5_max_exhaustive(int n, int threads = 1);

/// Audit of the 15 regular order-9 classes: the lower bound on s5, its five
/// minimiser classes, and the maximum of c5. Throws CorpusMissing unless the corpus
/// holds regular order-9 classes.
BoundReport audit_regular_nine(const EnumCorpus& corpus);

/// cycle_identity wrapped as a report (exit-code friendly).
BoundReport verify_cycle_identity(const Tournament& t);

}  // namespace tourney
