#include "tourney/counting.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <optional>

#include "tourney/canonical.hpp"

namespace tourney {

namespace {

BigCount binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t narrow(BigCount v, std::string_view what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::Overflow, std::string(what) + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

void require_oracle_range(const Tournament& t) {
  if (t.order() > kMaxOracleOrder)
    throw Error(Errc::TooLarge,
                "oracles are limited to n <= 12, got " + std::to_string(t.order()));
}

// Visits every m-subset of {0..n-1} as a bitmask (Gosper's hack).
template <class F>
void for_each_subset(int n, int m, F&& f) {
  if (m < 1 || m > n) return;
  const Row limit = Row{1} << n;
  for (Row s = (Row{1} << m) - 1; s < limit;) {
    f(VertexSet{s});
    const Row c = s & (~s + 1);
    const Row r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

template <class F>
void for_each_arc(const Tournament& t, F&& f) {
  for (int i = 0; i < t.order(); ++i)
    for (Row o = t.out_row(i); o != 0; o &= o - 1) f(i, std::countr_zero(o));
}

ArcIntersection intersections_unchecked(const Tournament& t, int i, int j) {
  return ArcIntersection{
      std::popcount(t.out_row(i) & t.out_row(j)),
      std::popcount(t.in_row(i) & t.in_row(j)),
      std::popcount(t.out_row(i) & t.in_row(j)),
      std::popcount(t.in_row(i) & t.out_row(j)),
  };
}

std::int64_t hamiltonian_cycles(const Tournament& t, VertexSet s) {
  const int root = std::countr_zero(s.mask);
  std::int64_t count = 0;
  auto dfs = [&](auto&& self, int v, Row unvisited) -> void {
    if (unvisited == 0) {
      if (t.arc(v, root)) ++count;
      return;
    }
    for (Row next = t.out_row(v) & unvisited; next != 0; next &= next - 1) {
      const int w = std::countr_zero(next);
      self(self, w, unvisited & ~(Row{1} << w));
    }
  };
  dfs(dfs, root, s.mask & ~(Row{1} << root));
  return count;
}

}  // namespace

std::string to_string(BigCount v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

ScoreLists scores(const Tournament& t) {
  ScoreLists s;
  for (int v = 0; v < t.order(); ++v) {
    s.out.push_back(t.out_degree(v));
    s.in.push_back(t.in_degree(v));
  }
  return s;
}

ArcIntersection arc_intersections(const Tournament& t, int i, int j) {
  if (i < 0 || j < 0 || i >= t.order() || j >= t.order() || !t.arc(i, j))
    throw Error(Errc::NotAnArc, "(" + std::to_string(i) + "," + std::to_string(j) + ") is not an arc");
  return intersections_unchecked(t, i, j);
}

std::int64_t km_arc_term(const ArcIntersection& a) {
  const std::int64_t same = a.dpp + a.dmm;
  const std::int64_t mixed = a.dpm + a.dmp;
  const std::int64_t same_diff = a.dpp - a.dmm;
  const std::int64_t mixed_diff = a.dpm - a.dmp;
  return -mixed * same_diff * same_diff - same * mixed_diff * mixed_diff + 2 * same * mixed;
}

std::int64_t c3_within(const Tournament& t, VertexSet s) {
  BigCount total = binom(s.size(), 3);
  for (Row m = s.mask; m != 0; m &= m - 1)
    total -= binom(std::popcount(t.out_row(std::countr_zero(m)) & s.mask), 2);
  return narrow(total, "c3");
}

std::int64_t c3_formula(const Tournament& t) {
  BigCount total = binom(t.order(), 3);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.out_degree(v), 2);
  return narrow(total, "c3");
}

std::int64_t c4_formula(const Tournament& t) {
  BigCount total = binom(t.order(), 4);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.in_degree(v), 3) + c3_within(t, t.out_set(v));
  return narrow(total, "c4");
}

std::int64_t c4_formula_converse(const Tournament& t) {
  BigCount total = binom(t.order(), 4);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.out_degree(v), 3) + c3_within(t, t.in_set(v));
  return narrow(total, "c4");
}

std::int64_t c5_km(const Tournament& t) {
  BigCount rhs = 6 * binom(t.order(), 5);
  for_each_arc(t, [&](int i, int j) { rhs += km_arc_term(intersections_unchecked(t, i, j)); });
  if (rhs % 8 != 0)
    throw Error(Errc::InternalParity, "5-cycle identity total " + to_string(rhs) + " is not divisible by 8");
  return narrow(rhs / 8, "c5");
}

std::int64_t s5_formula(const Tournament& t) {
  BigCount total = binom(t.order(), 5);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.in_degree(v), 4) + binom(t.out_degree(v), 4);
  for_each_arc(t, [&](int i, int j) { total += binom(std::popcount(t.out_row(i) & t.in_row(j)), 3); });
  return narrow(total, "s5");
}

std::int64_t s_formula(const Tournament& t, int m) {
  if (m != 3 && m != 4) throw Error(Errc::BadM, "s_formula supports m = 3, 4");
  BigCount total = binom(t.order(), m);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.in_degree(v), m - 1) + binom(t.out_degree(v), m - 1);
  // Copies of T_{m-2} => o inside N+(v): a sink w of the copy plus m-2 of its
  // in-neighbours within N+(v).
  for (int v = 0; v < t.order(); ++v) {
    const Row out = t.out_row(v);
    for (Row o = out; o != 0; o &= o - 1) {
      const int w = std::countr_zero(o);
      total += binom(std::popcount(t.in_row(w) & out), m - 2);
    }
  }
  return narrow(total, "s_m");
}

std::int64_t w_m(const Tournament& t, int m) {
  if (m < 3) throw Error(Errc::BadM, "w_m needs m >= 3");
  if (m > t.order()) return 0;
  BigCount total = binom(t.order(), m);
  for (int v = 0; v < t.order(); ++v) total -= binom(t.in_degree(v), m - 1) + binom(t.out_degree(v), m - 1);
  for_each_arc(t, [&](int i, int j) { total += binom(std::popcount(t.out_row(i) & t.in_row(j)), m - 2); });
  return narrow(total, "w_m");
}

BigCount trace_m(const Tournament& t, int m) {
  if (m < 1) throw Error(Errc::BadM, "trace needs m >= 1");
  const int n = t.order();
  BigCount trace = 0;
  std::vector<BigCount> walks(static_cast<std::size_t>(n));
  std::vector<BigCount> next(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    // walks[v] = number of walks start -> v of the current length.
    std::fill(walks.begin(), walks.end(), 0);
    walks[start] = 1;
    for (int step = 0; step < m; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (int u = 0; u < n; ++u) {
        if (walks[u] == 0) continue;
        for (Row o = t.out_row(u); o != 0; o &= o - 1) {
          BigCount& target = next[std::countr_zero(o)];
          if (__builtin_add_overflow(target, walks[u], &target))
            throw Error(Errc::Overflow, "walk count exceeds 128 bits");
        }
      }
      walks.swap(next);
    }
    if (__builtin_add_overflow(trace, walks[start], &trace))
      throw Error(Errc::Overflow, "trace exceeds 128 bits");
  }
  return trace;
}

std::int64_t oracle_cycles(const Tournament& t, int m) {
  require_oracle_range(t);
  if (m < 3) throw Error(Errc::BadM, "cycles need length >= 3");
  std::int64_t total = 0;
  for_each_subset(t.order(), m, [&](VertexSet s) { total += hamiltonian_cycles(t, s); });
  return total;
}

std::int64_t oracle_strong_subs(const Tournament& t, int m) {
  require_oracle_range(t);
  if (m < 1) throw Error(Errc::BadM, "subset size must be >= 1");
  std::int64_t total = 0;
  for_each_subset(t.order(), m, [&](VertexSet s) {
    if (strong_decomposition(induced(t, s)).strong()) ++total;
  });
  return total;
}

std::int64_t oracle_no_sink_source(const Tournament& t, int m) {
  require_oracle_range(t);
  if (m < 1) throw Error(Errc::BadM, "subset size must be >= 1");
  std::int64_t total = 0;
  for_each_subset(t.order(), m, [&](VertexSet s) {
    for (Row r = s.mask; r != 0; r &= r - 1) {
      const int d = std::popcount(t.out_row(std::countr_zero(r)) & s.mask);
      if (d == 0 || d == m - 1) return;
    }
    ++total;
  });
  return total;
}

std::int64_t count_copies(const Tournament& t, const Tournament& pattern) {
  require_oracle_range(t);
  const int m = pattern.order();
  const CanonicalForm target = canonical_form(pattern);
  std::vector<int> target_scores = scores(pattern).out;
  std::sort(target_scores.begin(), target_scores.end());
  std::int64_t total = 0;
  std::vector<int> sub_scores(static_cast<std::size_t>(m));
  for_each_subset(t.order(), m, [&](VertexSet s) {
    int k = 0;
    for (Row r = s.mask; r != 0; r &= r - 1) sub_scores[k++] = std::popcount(t.out_row(std::countr_zero(r)) & s.mask);
    std::sort(sub_scores.begin(), sub_scores.end());
    if (sub_scores != target_scores) return;
    if (canonical_form(induced(t, s)) == target) ++total;
  });
  return total;
}

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Oracle: return "oracle";
    case CountMethod::Trace: return "trace";
  }
  return "unknown";
}

bool CountReport::consistent() const {
  std::map<std::string, BigCount> seen;
  for (const auto& q : quantities) {
    const auto [it, fresh] = seen.emplace(q.name, q.value);
    if (!fresh && it->second != q.value) return false;
  }
  return true;
}

bool CountReport::cross_checked() const {
  std::map<std::string, int> methods;
  for (const auto& q : quantities) ++methods[q.name];
  const bool compared = std::any_of(methods.begin(), methods.end(), [](const auto& kv) { return kv.second > 1; });
  return compared && consistent();
}

namespace {

std::optional<BigCount> compute(const Tournament& t, const std::string& name, CountMethod method) {
  const auto suffix = [&](std::size_t from) {
    int m = 0;
    const auto [end, ec] = std::from_chars(name.data() + from, name.data() + name.size(), m);
    if (ec != std::errc{} || end != name.data() + name.size())
      throw Error(Errc::UnknownName, "unknown quantity '" + name + "'");
    return m;
  };
  if (name.size() == 2 && (name[0] == 'c' || name[0] == 's') && name[1] >= '3' && name[1] <= '5') {
    const int m = name[1] - '0';
    const bool cycles = name[0] == 'c';
    switch (method) {
      case CountMethod::Formula:
        if (cycles) return m == 3 ? c3_formula(t) : m == 4 ? c4_formula(t) : c5_km(t);
        return m == 5 ? s5_formula(t) : s_formula(t, m);
      case CountMethod::Oracle:
        return cycles ? oracle_cycles(t, m) : oracle_strong_subs(t, m);
      case CountMethod::Trace:
        if (!cycles) return std::nullopt;
        return trace_m(t, m) / m;
    }
  }
  if (name.size() > 1 && name[0] == 'w') {
    const int m = suffix(1);
    if (method == CountMethod::Formula) return w_m(t, m);
    if (method == CountMethod::Oracle) {
      if (m < 3) throw Error(Errc::BadM, "w_m needs m >= 3");
      return oracle_no_sink_source(t, m);
    }
    return std::nullopt;
  }
  if (name.size() > 2 && name.rfind("tr", 0) == 0) {
    if (method != CountMethod::Trace) return std::nullopt;
    return trace_m(t, suffix(2));
  }
  throw Error(Errc::UnknownName, "unknown quantity '" + name + "'");
}

}  // namespace

CountReport count_report(const Tournament& t, const CountRequest& request) {
  CountReport report;
  report.n = t.order();
  for (const auto& name : request.quantities) {
    bool routed = false;
    for (const CountMethod method : request.methods)
      if (const auto v = compute(t, name, method)) {
        report.quantities.push_back({name, method, *v});
        routed = true;
      }
    if (!routed) {
      const CountMethod native = name.rfind("tr", 0) == 0 ? CountMethod::Trace : CountMethod::Formula;
      if (const auto v = compute(t, name, native)) report.quantities.push_back({name, native, *v});
    }
  }
  if (request.pattern != nullptr)
    report.quantities.push_back({"copies", CountMethod::Oracle, count_copies(t, *request.pattern)});
  return report;
}

}  // namespace tourney
