#include "tourney/canonical.hpp"

#include <bit>
#include <string>

namespace tourney {

namespace {

// Positions depth..n-1 are grouped into ordered cells; the rows already fixed
// force which vertices may occupy each cell but not their order inside it.
// Choosing the vertex for position `depth` from the first cell and listing its
// in-neighbours before its out-neighbours inside every cell gives the smallest
// possible row for that choice. Only choices that tie on that row can lead to
// the global minimum, so those are the only branches explored.
class LexMinSearch {
 public:
  explicit LexMinSearch(const Tournament& t) : t_(t), n_(t.order()) {
    cur_rows_.assign(n_, 0);
    cur_perm_.assign(n_, 0);
  }

  std::vector<int> run() {
    std::vector<Row> cells{t_.vertices().mask};
    descend(0, cells);
    return best_perm_;
  }

 private:
  // Bits of row `depth` for columns depth+1..n-1, most significant first, so
  // that integer order matches string order.
  Row row_pattern(int v, const std::vector<Row>& cells) const {
    Row pattern = 0;
    int col = 0;
    const Row out = t_.out_row(v);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const Row cell = c == 0 ? cells[0] & ~(Row{1} << v) : cells[c];
      const int ones = std::popcount(cell & out);
      col += std::popcount(cell) - ones;
      for (int k = 0; k < ones; ++k, ++col) pattern |= Row{1} << (62 - col);
    }
    return pattern;
  }

  // -1, 0, 1 comparing cur_rows_[0..depth] with best_rows_[0..depth].
  int compare_prefix(int depth) const {
    for (int d = 0; d <= depth; ++d) {
      if (cur_rows_[d] < best_rows_[d]) return -1;
      if (cur_rows_[d] > best_rows_[d]) return 1;
    }
    return 0;
  }

  void descend(int depth, const std::vector<Row>& cells) {
    if (depth == n_) {
      if (best_rows_.empty() || compare_prefix(n_ - 1) < 0) {
        best_rows_ = cur_rows_;
        best_perm_ = cur_perm_;
      }
      return;
    }
    Row min_pattern = ~Row{0};
    Row tied = 0;
    for (Row m = cells[0]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Row p = row_pattern(v, cells);
      if (p < min_pattern) {
        min_pattern = p;
        tied = 0;
      }
      if (p == min_pattern) tied |= Row{1} << v;
    }
    cur_rows_[depth] = min_pattern;
    if (!best_rows_.empty() && compare_prefix(depth) > 0) return;

    std::vector<Row> next;
    next.reserve(cells.size() + n_);
    for (Row m = tied; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Row out = t_.out_row(v);
      next.clear();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const Row cell = c == 0 ? cells[0] & ~(Row{1} << v) : cells[c];
        if (const Row in_part = cell & ~out; in_part != 0) next.push_back(in_part);
        if (const Row out_part = cell & out; out_part != 0) next.push_back(out_part);
      }
      cur_perm_[depth] = v;
      cur_rows_[depth] = min_pattern;
      // A sibling branch may have lowered best_rows_ since the check above.
      if (!best_rows_.empty() && compare_prefix(depth) > 0) return;
      descend(depth + 1, next);
    }
  }

  const Tournament& t_;
  int n_;
  std::vector<Row> cur_rows_;
  std::vector<int> cur_perm_;
  std::vector<Row> best_rows_;
  std::vector<int> best_perm_;
};

void require_canonical_range(const Tournament& t) {
  if (t.order() > kMaxCanonicalOrder)
    throw Error(Errc::OrderTooLarge,
                "canonicalization supports n <= 16, got " + std::to_string(t.order()));
}

}  // namespace

std::string adjacency_string(const Tournament& t) {
  std::string s;
  s.reserve(static_cast<std::size_t>(t.order()) * t.order());
  for (int i = 0; i < t.order(); ++i)
    for (int j = 0; j < t.order(); ++j) s.push_back(t.arc(i, j) ? '1' : '0');
  return s;
}

std::vector<int> canonical_labeling(const Tournament& t) {
  require_canonical_range(t);
  return LexMinSearch(t).run();
}

Tournament canonical_tournament(const Tournament& t) {
  const auto perm = canonical_labeling(t);
  return t.relabeled(perm);
}

CanonicalForm canonical_form(const Tournament& t) {
  return CanonicalForm{t.order(), adjacency_string(canonical_tournament(t))};
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  require_canonical_range(a);
  require_canonical_range(b);
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tourney
