#include "tourney/tournament.hpp"

#include <algorithm>
#include <string>

namespace tourney {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LoopArc: return "LoopArc";
    case Errc::MissingOrDoubleArc: return "MissingOrDoubleArc";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::BadSymbol: return "BadSymbol";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadResidueClass: return "BadResidueClass";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::InternalParity: return "InternalParity";
    case Errc::BadM: return "BadM";
    case Errc::Overflow: return "Overflow";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSorted: return "NotSorted";
    case Errc::BadOrder: return "BadOrder";
    case Errc::BadResidue: return "BadResidue";
    case Errc::NotRegular: return "NotRegular";
    case Errc::CorpusMissing: return "CorpusMissing";
    case Errc::TimeBudgetExceeded: return "TimeBudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Row m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Tournament::Tournament(int n) : n_(n) {}

Tournament Tournament::from_rows(int n, std::span<const Row> rows) {
  if (n < 1) throw Error(Errc::SizeMismatch, "order must be at least 1");
  if (n > kMaxOrder) throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds 64");
  if (rows.size() != static_cast<std::size_t>(n))
    throw Error(Errc::SizeMismatch,
                "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  const Row width = VertexSet::all(n).mask;
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~width) throw Error(Errc::SizeMismatch, "row " + std::to_string(i) + " wider than n");
    if ((rows[i] >> i) & 1U) throw Error(Errc::LoopArc, "loop at vertex " + std::to_string(i));
    t.out_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.arc(i, j) == t.arc(j, i))
        throw Error(Errc::MissingOrDoubleArc,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                        (t.arc(i, j) ? "has both arcs" : "has no arc"));
  return t;
}

Tournament Tournament::from_upper_code(int n, std::uint64_t code) {
  if (n < 1 || upper_pair_count(n) > 64)
    throw Error(Errc::TooLarge, "upper-triangle code needs n(n-1)/2 <= 64");
  Tournament t(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((code >> k) & 1U)
        t.out_[i] |= Row{1} << j;
      else
        t.out_[j] |= Row{1} << i;
    }
  return t;
}

Tournament Tournament::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw Error(Errc::SizeMismatch, "permutation length differs from order");
  return from_pair_rule(n_, [&](int a, int b) { return arc(perm[a], perm[b]); });
}

bool Tournament::operator==(const Tournament& o) const noexcept {
  return n_ == o.n_ && std::equal(out_.begin(), out_.begin() + n_, o.out_.begin());
}

Tournament induced(const Tournament& t, VertexSet s) {
  if (s.mask & ~t.vertices().mask) throw Error(Errc::OutOfRange, "vertex set exceeds host order");
  if (s.empty()) throw Error(Errc::OutOfRange, "induced subtournament needs at least one vertex");
  const auto vs = s.members();
  return Tournament::from_pair_rule(static_cast<int>(vs.size()), [&](int a, int b) { return t.arc(vs[a], vs[b]); });
}

Tournament converse(const Tournament& t) {
  return Tournament::from_pair_rule(t.order(), [&](int i, int j) { return t.arc(j, i); });
}

Tournament compose(const Tournament& outer, std::span<const Tournament> replacements) {
  if (replacements.size() != static_cast<std::size_t>(outer.order()))
    throw Error(Errc::ArityMismatch, "need one replacement per vertex of the outer tournament");
  std::vector<int> block;
  std::vector<int> local;
  for (std::size_t b = 0; b < replacements.size(); ++b)
    for (int v = 0; v < replacements[b].order(); ++v) {
      block.push_back(static_cast<int>(b));
      local.push_back(v);
    }
  const int n = static_cast<int>(block.size());
  if (n > kMaxOrder) throw Error(Errc::OrderTooLarge, "composition exceeds order 64");
  return Tournament::from_pair_rule(n, [&](int i, int j) {
    if (block[i] == block[j]) return replacements[block[i]].arc(local[i], local[j]);
    return outer.arc(block[i], block[j]);
  });
}

namespace {

Row reach_within(const Tournament& t, int start, Row within) {
  Row seen = Row{1} << start;
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= t.out_row(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

StrongDecomposition strong_decomposition(const Tournament& t) {
  // Two vertices share a component iff they reach the same set; in a tournament
  // an earlier component reaches strictly more vertices than any later one.
  std::vector<std::pair<Row, Row>> comps;  // (reach, members)
  const Row all = t.vertices().mask;
  Row assigned = 0;
  for (int v = 0; v < t.order(); ++v) {
    if ((assigned >> v) & 1U) continue;
    const Row r = reach_within(t, v, all);
    Row members = 0;
    for (Row c = r; c != 0; c &= c - 1) {
      const int w = std::countr_zero(c);
      if (w == v || ((reach_within(t, w, all) >> v) & 1U)) members |= Row{1} << w;
    }
    assigned |= members;
    comps.emplace_back(r, members);
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return std::popcount(a.first) > std::popcount(b.first);
  });
  StrongDecomposition d;
  for (const auto& c : comps) d.components.push_back(VertexSet{c.second});
  return d;
}

bool is_strong_subset(const Tournament& t, VertexSet s) {
  if (s.empty()) return false;
  const int v = std::countr_zero(s.mask);
  if (reach_within(t, v, s.mask) != s.mask) return false;
  // Every vertex must also reach v: check on the reversed arcs.
  Row seen = Row{1} << v;
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= t.in_row(std::countr_zero(f));
    next &= s.mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s.mask;
}

}  // namespace tourney
