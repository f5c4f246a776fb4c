#include "tourney/classify.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tourney {

namespace {

int out_within(const Tournament& t, int v, VertexSet s) { return std::popcount(t.out_row(v) & s.mask); }

VertexSet side_set(const Tournament& t, int v, Side side) {
  return side == Side::Plus ? t.out_set(v) : t.in_set(v);
}

template <class Pred>
bool every_neighbourhood(const Tournament& t, Side side, Pred&& pred) {
  if (side == Side::Both)
    return every_neighbourhood(t, Side::Plus, pred) && every_neighbourhood(t, Side::Minus, pred);
  for (int v = 0; v < t.order(); ++v)
    if (!pred(side_set(t, v, side))) return false;
  return true;
}

}  // namespace

bool subset_is_transitive(const Tournament& t, VertexSet s) {
  // Zero 3-cycles: C(k,3) = sum C(d,2) over the in-subset scores.
  const long long k = s.size();
  long long transitive_triples = 0;
  for (Row m = s.mask; m != 0; m &= m - 1) {
    const long long d = out_within(t, std::countr_zero(m), s);
    transitive_triples += d * (d - 1) / 2;
  }
  return transitive_triples == k * (k - 1) * (k - 2) / 6;
}

bool subset_is_regular(const Tournament& t, VertexSet s) {
  const int k = s.size();
  if (k % 2 == 0) return k == 0;
  for (Row m = s.mask; m != 0; m &= m - 1)
    if (out_within(t, std::countr_zero(m), s) != (k - 1) / 2) return false;
  return true;
}

bool subset_is_near_regular(const Tournament& t, VertexSet s) {
  const int k = s.size();
  if (k % 2 != 0) return false;
  int high = 0;  // vertices with in-degree k/2
  for (Row m = s.mask; m != 0; m &= m - 1) {
    const int in = k - 1 - out_within(t, std::countr_zero(m), s);
    if (in == k / 2)
      ++high;
    else if (in != k / 2 - 1)
      return false;
  }
  return high == k / 2;
}

bool subset_is_doubly_regular(const Tournament& t, VertexSet s) {
  const int k = s.size();
  if (k % 4 != 3 || !subset_is_regular(t, s)) return false;
  for (Row m = s.mask; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    const Row out_i = t.out_row(i) & s.mask;
    for (Row o = out_i; o != 0; o &= o - 1)
      if (std::popcount(out_i & t.out_row(std::countr_zero(o))) != (k - 3) / 4) return false;
  }
  return true;
}

bool subset_is_nearly_doubly_regular(const Tournament& t, VertexSet s) {
  const int k = s.size();
  if (k % 4 != 1 || !subset_is_regular(t, s)) return false;
  for (Row m = s.mask; m != 0; m &= m - 1)
    if (!subset_is_near_regular(t, t.out_set(std::countr_zero(m)) & s)) return false;
  return true;
}

bool is_transitive(const Tournament& t) { return subset_is_transitive(t, t.vertices()); }
bool is_regular(const Tournament& t) { return subset_is_regular(t, t.vertices()); }
bool is_near_regular(const Tournament& t) { return subset_is_near_regular(t, t.vertices()); }

bool is_locally_transitive(const Tournament& t, Side side) {
  return every_neighbourhood(t, side, [&](VertexSet s) { return subset_is_transitive(t, s); });
}

bool is_locally_regular(const Tournament& t, Side side) {
  return every_neighbourhood(t, side, [&](VertexSet s) {
    return s.size() % 2 == 1 ? subset_is_regular(t, s) : subset_is_near_regular(t, s);
  });
}

bool is_doubly_regular(const Tournament& t) { return subset_is_doubly_regular(t, t.vertices()); }

bool is_nearly_doubly_regular(const Tournament& t) {
  return subset_is_nearly_doubly_regular(t, t.vertices());
}

bool is_rldr(const Tournament& t) {
  return is_regular(t) &&
         every_neighbourhood(t, Side::Plus, [&](VertexSet s) { return subset_is_doubly_regular(t, s); });
}

bool is_rlndr(const Tournament& t) {
  return is_regular(t) && every_neighbourhood(t, Side::Plus, [&](VertexSet s) {
           return subset_is_nearly_doubly_regular(t, s);
         });
}

bool aat_positive(const Tournament& t) {
  for (int i = 0; i < t.order(); ++i)
    for (int j = i + 1; j < t.order(); ++j)
      if ((t.out_row(i) & t.out_row(j)) == 0) return false;
  return true;
}

bool landau_feasible(std::span<const int> scores) {
  if (!std::is_sorted(scores.begin(), scores.end()))
    throw Error(Errc::NotSorted, "score sequence must be non-decreasing");
  if (!scores.empty() && scores.front() < 0) throw Error(Errc::NotSorted, "scores must be non-negative");
  long long prefix = 0;
  const long long n = static_cast<long long>(scores.size());
  for (long long k = 1; k <= n; ++k) {
    prefix += scores[k - 1];
    if (k < n && prefix < k * (k - 1) / 2) return false;
  }
  return prefix == n * (n - 1) / 2;
}

bool ClassificationReport::flag(std::string_view name) const {
  const auto it = std::find(kFlagNames.begin(), kFlagNames.end(), name);
  if (it == kFlagNames.end()) throw Error(Errc::UnknownName, "no flag " + std::string(name));
  return flags[static_cast<std::size_t>(it - kFlagNames.begin())];
}

ClassificationReport classify(const Tournament& t) {
  ClassificationReport r;
  r.n = t.order();
  const bool regular = is_regular(t);
  const bool lt_plus = is_locally_transitive(t, Side::Plus);
  const bool lt_minus = is_locally_transitive(t, Side::Minus);
  const bool lr_plus = is_locally_regular(t, Side::Plus);
  const bool lr_minus = is_locally_regular(t, Side::Minus);
  r.flags = {
      strong_decomposition(t).strong(),
      is_transitive(t),
      regular,
      is_near_regular(t),
      is_doubly_regular(t),
      is_nearly_doubly_regular(t),
      lt_plus,
      lt_minus,
      lt_plus && lt_minus,
      lr_plus,
      lr_minus,
      lr_plus && lr_minus,
      is_rldr(t),
      is_rlndr(t),
      aat_positive(t),
  };
  if (regular) r.semi_degree = (t.order() - 1) / 2;
  return r;
}

}  // namespace tourney
