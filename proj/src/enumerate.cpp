#include "tourney/enumerate.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "tourney/classify.hpp"
#include "tourney/tour_io.hpp"

namespace tourney {

namespace {

constexpr int kMaxEnumOrder = 9;
constexpr int kMaxLongRunOrder = 11;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Partial orientation of the first `next` pairs of the upper triangle.
struct PartialState {
  std::array<Row, kMaxOrder> out{};
  std::array<std::uint8_t, kMaxOrder> out_count{};
  std::array<std::uint8_t, kMaxOrder> in_count{};
  int next = 0;
};

class RegularBacktracker {
 public:
  RegularBacktracker(int n, bool fix_first_out_set) : n_(n), half_((n - 1) / 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
    if (fix_first_out_set) {
      for (int j = 1; j < n; ++j) {
        if (j <= half_)
          orient(root_, 0, j);
        else
          orient(root_, j, 0);
      }
      root_.next = n - 1;
    }
  }

  const PartialState& root() const { return root_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  /// Calls `emit(state)` for every consistent state with `depth` decided pairs
  /// (or complete tournaments if depth >= pair_count()).
  template <class Emit>
  void expand(const PartialState& s, int depth, Emit&& emit) const {
    PartialState cur = s;
    expand_rec(cur, std::min(depth, pair_count()), emit);
  }

  Tournament to_tournament(const PartialState& s) const {
    return Tournament::from_pair_rule(n_, [&](int i, int j) { return (s.out[i] >> j) & 1U; });
  }

 private:
  static void orient(PartialState& s, int from, int to) {
    s.out[from] |= Row{1} << to;
    ++s.out_count[from];
    ++s.in_count[to];
  }
  static void unorient(PartialState& s, int from, int to) {
    s.out[from] &= ~(Row{1} << to);
    --s.out_count[from];
    --s.in_count[to];
  }

  template <class Emit>
  void expand_rec(PartialState& s, int depth, Emit& emit) const {
    if (s.next >= depth) {
      emit(static_cast<const PartialState&>(s));
      return;
    }
    const auto [i, j] = pairs_[s.next];
    ++s.next;
    if (s.out_count[i] < half_ && s.in_count[j] < half_) {
      orient(s, i, j);
      expand_rec(s, depth, emit);
      unorient(s, i, j);
    }
    if (s.out_count[j] < half_ && s.in_count[i] < half_) {
      orient(s, j, i);
      expand_rec(s, depth, emit);
      unorient(s, j, i);
    }
    --s.next;
  }

  int n_;
  int half_;
  std::vector<std::pair<int, int>> pairs_;
  PartialState root_;
};

void check_order(int n, bool allow_long_run) {
  if (n < 1 || n % 2 == 0) throw Error(Errc::BadOrder, "regular tournaments need odd n >= 1");
  const int cap = allow_long_run ? kMaxLongRunOrder : kMaxEnumOrder;
  if (n > cap)
    throw Error(Errc::BadOrder, "order " + std::to_string(n) + " exceeds the enumeration guard (" +
                                    std::to_string(cap) + ")");
}

}  // namespace

std::uint64_t count_regular_labeled(int n, bool fix_first_out_set) {
  check_order(n, true);
  RegularBacktracker bt(n, fix_first_out_set);
  std::uint64_t leaves = 0;
  bt.expand(bt.root(), bt.pair_count(), [&](const PartialState&) { ++leaves; });
  return leaves;
}

EnumCorpus enumerate_regular(int n, const EnumerateOptions& opts) {
  check_order(n, opts.allow_long_run);
  RegularBacktracker bt(n, opts.fix_first_out_set);
  const auto deadline = std::chrono::steady_clock::now() + opts.time_budget;

  // Subtree jobs: every consistent state after a fixed number of further pairs.
  std::vector<PartialState> jobs;
  const int split_depth = std::min(bt.pair_count(), bt.root().next + 8);
  bt.expand(bt.root(), split_depth, [&](const PartialState& s) { jobs.push_back(s); });

  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> expired{false};
  std::mutex merge_mutex;
  std::map<std::string, Tournament> classes;
  std::uint64_t leaves = 0;

  auto worker = [&] {
    std::map<std::string, Tournament> local;
    std::uint64_t local_leaves = 0;
    struct Abort {};
    try {
      for (std::size_t job = next_job++; job < jobs.size(); job = next_job++) {
        bt.expand(jobs[job], bt.pair_count(), [&](const PartialState& s) {
          if ((++local_leaves & 1023U) == 0) {
            if (std::chrono::steady_clock::now() > deadline) expired = true;
            if (expired) throw Abort{};
          }
          const Tournament canon = canonical_tournament(bt.to_tournament(s));
          local.try_emplace(adjacency_string(canon), canon);
        });
      }
    } catch (const Abort&) {
    }
    std::lock_guard lock(merge_mutex);
    leaves += local_leaves;
    classes.merge(local);
  };

  const int workers = std::max(1, opts.threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (expired)
    throw Error(Errc::TimeBudgetExceeded,
                "enumeration of order " + std::to_string(n) + " exceeded " +
                    std::to_string(opts.time_budget.count()) + " s");

  EnumCorpus corpus;
  corpus.n = n;
  corpus.labeled_count = opts.fix_first_out_set ? leaves * binomial(n - 1, (n - 1) / 2) : leaves;
  for (auto& [key, rep] : classes) corpus.classes.push_back({CanonicalForm{n, key}, rep});
  return corpus;
}

std::string write_corpus(const EnumCorpus& corpus) {
  std::ostringstream out;
  out << "tourney-corpus 1\n"
      << "n " << corpus.n << "\n"
      << "constraint " << corpus.constraint << "\n"
      << "labeled_count " << corpus.labeled_count << "\n"
      << "classes " << corpus.classes.size() << "\n";
  for (std::size_t c = 0; c < corpus.classes.size(); ++c) {
    out << "class " << c << " " << corpus.classes[c].form.key << "\n";
    out << write_tour(corpus.classes[c].representative);
  }
  return out.str();
}

EnumCorpus parse_corpus(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw Error(Errc::ParseError, "corpus truncated after line " + std::to_string(line_no));
    ++line_no;
    return line;
  };
  auto field = [&](const std::string& name) {
    std::istringstream ls(next_line());
    std::string label, value;
    ls >> label >> value;
    if (label != name || value.empty())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected '" + name + "'");
    return value;
  };

  if (field("tourney-corpus") != "1") throw Error(Errc::ParseError, "unsupported corpus version");
  EnumCorpus corpus;
  try {
    corpus.n = std::stoi(field("n"));
    corpus.constraint = field("constraint");
    corpus.labeled_count = std::stoull(field("labeled_count"));
    const std::size_t count = std::stoul(field("classes"));
    for (std::size_t c = 0; c < count; ++c) {
      std::istringstream ls(next_line());
      std::string label, key;
      std::size_t index = 0;
      ls >> label >> index >> key;
      if (label != "class" || index != c)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'class " + std::to_string(c) + "'");
      std::string block = next_line() + "\n";
      const int rows = std::stoi(line);
      for (int r = 0; r < rows; ++r) block += next_line() + "\n";
      corpus.classes.push_back({CanonicalForm{corpus.n, key}, parse_tour(block)});
    }
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": malformed number");
  } catch (const std::out_of_range&) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": number out of range");
  }
  return corpus;
}

EnumCorpus read_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::CorpusMissing, "cannot open corpus " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

void write_corpus_file(const std::string& path, const EnumCorpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::CorpusMissing, "cannot write corpus " + path);
  out << write_corpus(corpus);
}

std::vector<std::string> verify_corpus(const EnumCorpus& corpus) {
  std::vector<std::string> problems;
  if (corpus.constraint != "regular") problems.push_back("unsupported constraint " + corpus.constraint);
  std::set<std::string> keys;
  for (std::size_t c = 0; c < corpus.classes.size(); ++c) {
    const auto& cls = corpus.classes[c];
    const std::string tag = "class " + std::to_string(c) + ": ";
    if (cls.representative.order() != corpus.n) {
      problems.push_back(tag + "representative has the wrong order");
      continue;
    }
    if (!keys.insert(cls.form.key).second) problems.push_back(tag + "duplicate key");
    if (c > 0 && !(corpus.classes[c - 1].form.key < cls.form.key)) problems.push_back(tag + "keys not sorted");
    if (!is_regular(cls.representative)) problems.push_back(tag + "representative is not regular");
    if (canonical_form(cls.representative).key != cls.form.key)
      problems.push_back(tag + "re-canonicalisation does not reproduce the key");
  }
  return problems;
}

}  // namespace tourney
