#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "tourney/canonical.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

inline constexpr int kMaxSweepOrder = 7;

/// Folds `visit(acc, tournament, code)` over every labeled tournament of order n
/// (all 2^(n(n-1)/2) upper-triangle codes). Code ranges are split into
/// contiguous chunks, one accumulator per worker, merged in chunk order, so the
/// result does not depend on the worker count as long as `merge` is associative.
template <class Acc, class Visit, class Merge>
Acc sweep_all(int n, Acc init, Visit visit, Merge merge, int threads = 1) {
  if (n < 1 || n > kMaxSweepOrder)
    throw Error(Errc::TooLarge, "sweep_all supports 1 <= n <= 7, got " + std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << upper_pair_count(n);
  const int workers = static_cast<int>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, total));
  std::vector<Acc> partial(static_cast<std::size_t>(workers), init);
  auto run = [&](int w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t code = lo; code < hi; ++code)
      visit(partial[w], Tournament::from_upper_code(n, code), code);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Acc acc = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) acc = merge(std::move(acc), std::move(partial[w]));
  return acc;
}

struct CorpusClass {
  CanonicalForm form;
  Tournament representative;
};

/// Isomorphism classes of regular tournaments of one order, sorted by key.
struct EnumCorpus {
  int n = 0;
  std::string constraint = "regular";
  std::vector<CorpusClass> classes;
  std::uint64_t labeled_count = 0;
};

struct EnumerateOptions {
  /// Fix N+(0) = {1, ..., (n-1)/2}; labeled_count is then scaled by C(n-1, (n-1)/2).
  bool fix_first_out_set = true;
  int threads = 1;
  std::chrono::seconds time_budget{1800};
  /// Orders above 9 are refused unless set.
  bool allow_long_run = false;
};

/// Backtracking over arc orientations in upper-triangle order with out/in-degree
/// pruning, deduplicated by canonical form. Throws BadOrder, TimeBudgetExceeded.
EnumCorpus enumerate_regular(int n, const EnumerateOptions& opts = {});

/// Number of labeled regular tournaments reached by the backtracking (before
/// scaling), without canonicalising. Exposed for cross-checks.
std::uint64_t count_regular_labeled(int n, bool fix_first_out_set);

// ".corpus" text format:
//   tourney-corpus 1
//   n <n>
//   constraint regular
//   labeled_count <count>
//   classes <k>
//   then per class: "class <index> <key>" followed by the representative in ".tour" format.
std::string write_corpus(const EnumCorpus& corpus);
EnumCorpus parse_corpus(const std::string& text);
EnumCorpus read_corpus_file(const std::string& path);
void write_corpus_file(const std::string& path, const EnumCorpus& corpus);

/// Problems found re-checking a corpus: distinct keys, representatives regular,
/// re-canonicalisation reproduces keys, classes sorted. Empty means valid.
std::vector<std::string> verify_corpus(const EnumCorpus& corpus);

}  // namespace tourney
