#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Exact counts; 128 bits covers closed walks of length <= 12 at n = 64.
using BigCount = __int128;

std::string to_string(BigCount v);

/// Largest order accepted by the brute-force oracles.
inline constexpr int kMaxOracleOrder = 12;

struct ScoreLists {
  std::vector<int> out;  // indexed by vertex
  std::vector<int> in;
};

ScoreLists scores(const Tournament& t);

/// Sizes of the four out/in-neighbourhood intersections of the endpoints of an arc i -> j.
struct ArcIntersection {
  int dpp = 0;  // |N+(i) & N+(j)|
  int dmm = 0;  // |N-(i) & N-(j)|
  int dpm = 0;  // |N+(i) & N-(j)|
  int dmp = 0;  // |N-(i) & N+(j)|

  int sum() const noexcept { return dpp + dmm + dpm + dmp; }
  bool operator==(const ArcIntersection&) const = default;
};

/// Throws NotAnArc unless i -> j in t.
ArcIntersection arc_intersections(const Tournament& t, int i, int j);

/// Per-arc term of the Komarov-Mackey 5-cycle identity (may be negative).
std::int64_t km_arc_term(const ArcIntersection& a);

/// 3-cycles: C(n,3) - sum C(out_i, 2).
std::int64_t c3_formula(const Tournament& t);
/// 3-cycles of the subtournament induced by S.
std::int64_t c3_within(const Tournament& t, VertexSet s);

/// 4-cycles: C(n,4) - sum C(in_i, 3) - sum c3(N+(i)).
std::int64_t c4_formula(const Tournament& t);
/// Same count through the converse identity: C(n,4) - sum C(out_i, 3) - sum c3(N-(i)).
std::int64_t c4_formula_converse(const Tournament& t);

/// 5-cycles from 8 c5 = 6 C(n,5) + sum over arcs of km_arc_term. The right-hand
/// side is accumulated in 128 bits; a total not divisible by 8 throws InternalParity.
std::int64_t c5_km(const Tournament& t);

/// Strong 5-subtournaments: C(n,5) - sum C(in_i,4) - sum C(out_i,4) + sum over arcs C(dpm,3).
std::int64_t s5_formula(const Tournament& t);

/// Strong m-subtournaments for m in {3, 4}, from the sink/source inclusion-exclusion
/// whose last term counts copies of T_{m-2} => o inside each out-set. Throws BadM.
std::int64_t s_formula(const Tournament& t, int m);

/// m-subtournaments with neither sink nor source (m >= 3, 0 when m > n). Throws BadM.
std::int64_t w_m(const Tournament& t, int m);

/// Trace of A^m (closed m-walks). Throws BadM for m < 1, Overflow past 128 bits.
BigCount trace_m(const Tournament& t, int m);

// Brute-force oracles, independent of the formulas above. All require n <= 12
// and throw TooLarge otherwise.

/// Directed m-cycles (m >= 3), per vertex subset by Hamiltonian-cycle DFS rooted at
/// the smallest vertex.
std::int64_t oracle_cycles(const Tournament& t, int m);
/// m-subsets (m >= 1) inducing a strong subtournament.
std::int64_t oracle_strong_subs(const Tournament& t, int m);
/// m-subsets whose induced subtournament has neither a sink nor a source (m >= 1).
std::int64_t oracle_no_sink_source(const Tournament& t, int m);
/// m-subsets whose induced subtournament is isomorphic to `pattern` (m = its order).
std::int64_t count_copies(const Tournament& t, const Tournament& pattern);

enum class CountMethod { Formula, Oracle, Trace };

std::string_view method_name(CountMethod m);

/// One computed value of a named quantity: c3..c5, s3..s5, w<m>, tr<m>, copies.
struct CountEntry {
  std::string name;
  CountMethod method;
  BigCount value;
};

struct CountReport {
  int n = 0;
  std::vector<CountEntry> quantities;

  /// True when every quantity computed by two or more methods agrees across
  /// them, and at least one such comparison was made.
  bool cross_checked() const;
  /// True when no two methods disagree on any quantity.
  bool consistent() const;
};

struct CountRequest {
  /// Quantity names in output order: "c3", "c4", "c5", "s3", "s4", "s5", "w<m>", "tr<m>".
  std::vector<std::string> quantities;
  std::vector<CountMethod> methods;
  /// When set, also reports "copies" of this pattern (oracle method).
  const Tournament* pattern = nullptr;
};

/// Computes every requested quantity with every applicable requested method.
/// Combinations without a route (e.g. s5 by trace) are skipped; a quantity left
/// with no route at all is computed by its native method (trace for tr<m>,
/// formula otherwise).
CountReport count_report(const Tournament& t, const CountRequest& request);

}  // namespace tourney
