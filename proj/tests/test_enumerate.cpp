#include <filesystem>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/counting.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/generators.hpp"

using namespace tourney;

TEST(SweepAll, OrderThree) {
  struct Acc {
    int total = 0, cyclic = 0;
  };
  const Acc acc = sweep_all(
      3, Acc{},
      [](Acc& a, const Tournament& t, std::uint64_t) {
        ++a.total;
        a.cyclic += c3_formula(t) == 1;
      },
      [](Acc a, Acc b) { return Acc{a.total + b.total, a.cyclic + b.cyclic}; });
  EXPECT_EQ(acc.total, 8);
  EXPECT_EQ(acc.cyclic, 2);
}

TEST(SweepAll, ThreadCountDoesNotChangeResult) {
  auto visit = [](std::int64_t& a, const Tournament& t, std::uint64_t) { a += c5_km(t); };
  auto merge = [](std::int64_t a, std::int64_t b) { return a + b; };
  const std::int64_t one = sweep_all(6, std::int64_t{0}, visit, merge, 1);
  EXPECT_EQ(sweep_all(6, std::int64_t{0}, visit, merge, 3), one);
  EXPECT_ERRC(sweep_all(8, 0, [](int&, const Tournament&, std::uint64_t) {}, [](int a, int) { return a; }),
              Errc::TooLarge);
}

TEST(SweepAll, RegularCountMatchesEnumerator) {
  const auto sweep = sweep_all(
      7, std::uint64_t{0}, [](std::uint64_t& a, const Tournament& t, std::uint64_t) { a += is_regular(t); },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  EXPECT_EQ(sweep, enumerate_regular(7).labeled_count);
  EXPECT_EQ(sweep, 2640u);
}

TEST(Enumerate, ClassCounts) {
  EXPECT_EQ(enumerate_regular(1).classes.size(), 1u);
  EXPECT_EQ(enumerate_regular(3).classes.size(), 1u);
  EXPECT_EQ(enumerate_regular(5).classes.size(), 1u);
  const EnumCorpus r7 = enumerate_regular(7);
  ASSERT_EQ(r7.classes.size(), 3u);
  std::set<std::string> keys;
  for (const auto& c : r7.classes) keys.insert(c.form.key);
  for (const auto& name : {"dr7", "kz7"}) EXPECT_TRUE(keys.count(canonical_form(gen_named(name)).key)) << name;
  EXPECT_TRUE(keys.count(canonical_form(gen_rlt(7)).key));
}

TEST(Enumerate, OrderNine) {
  const EnumCorpus r9 = enumerate_regular(9);
  ASSERT_EQ(r9.classes.size(), 15u);
  int ndr = 0, aat = 0;
  for (const auto& c : r9.classes) {
    ndr += is_nearly_doubly_regular(c.representative);
    aat += aat_positive(c.representative);
  }
  EXPECT_EQ(ndr, 2);
  EXPECT_EQ(aat, 5);
  EXPECT_TRUE(verify_corpus(r9).empty());
}

TEST(Enumerate, LabeledCountsAgreeWithOrbitCounting) {
  for (int n : {5, 7, 9}) {
    const EnumCorpus corpus = enumerate_regular(n);
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    std::uint64_t total = 0;
    for (const auto& c : corpus.classes) total += factorial / oracle::automorphisms(c.representative);
    EXPECT_EQ(total, corpus.labeled_count) << n;
  }
  EXPECT_EQ(count_regular_labeled(5, false), 24u);
  EXPECT_EQ(count_regular_labeled(7, true) * 20, 2640u);
}

TEST(Enumerate, IndependentOfThreadsAndSymmetryBreaking) {
  EnumerateOptions opts;
  opts.threads = 3;
  const EnumCorpus threaded = enumerate_regular(9, opts);
  const EnumCorpus serial = enumerate_regular(9);
  EXPECT_EQ(write_corpus(threaded), write_corpus(serial));
  opts.threads = 1;
  opts.fix_first_out_set = false;
  const EnumCorpus open = enumerate_regular(7, opts);
  EXPECT_EQ(write_corpus(open), write_corpus(enumerate_regular(7)));
}

TEST(Enumerate, Guards) {
  EXPECT_ERRC(enumerate_regular(8), Errc::BadOrder);
  EXPECT_ERRC(enumerate_regular(11), Errc::BadOrder);
  EnumerateOptions tight;
  tight.time_budget = std::chrono::seconds(0);
  EXPECT_ERRC(enumerate_regular(9, tight), Errc::TimeBudgetExceeded);
}

TEST(Corpus, RoundTripAndVerify) {
  const EnumCorpus r7 = enumerate_regular(7);
  const std::string text = write_corpus(r7);
  EXPECT_EQ(write_corpus(parse_corpus(text)), text);
  const auto path = std::filesystem::temp_directory_path() / "tourney_test_r7.corpus";
  write_corpus_file(path.string(), r7);
  EXPECT_EQ(write_corpus(read_corpus_file(path.string())), text);
  std::filesystem::remove(path);
  EXPECT_ERRC(read_corpus_file("/nonexistent/r.corpus"), Errc::CorpusMissing);
  EXPECT_ERRC(parse_corpus("garbage"), Errc::ParseError);
}

TEST(Corpus, VerifyFlagsTampering) {
  EnumCorpus r7 = enumerate_regular(7);
  r7.classes[1].representative = r7.classes[0].representative;
  EXPECT_FALSE(verify_corpus(r7).empty());
  EnumCorpus swapped = enumerate_regular(7);
  std::swap(swapped.classes[0], swapped.classes[1]);
  EXPECT_FALSE(verify_corpus(swapped).empty());
}
