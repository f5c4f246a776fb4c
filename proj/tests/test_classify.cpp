#include "test_util.hpp"
#include "tourney/classify.hpp"
#include "tourney/generators.hpp"

using namespace tourney;

TEST(Classify, Regularity) {
  EXPECT_TRUE(is_near_regular(gen_named("delta_tt2")));
  EXPECT_FALSE(is_regular(gen_transitive(5)));
  EXPECT_TRUE(is_regular(gen_qr(11)));
  EXPECT_FALSE(is_near_regular(gen_transitive(4)));
  EXPECT_FALSE(is_near_regular(gen_rlt(5)));
}

TEST(Classify, LocallyTransitive) {
  EXPECT_TRUE(is_locally_transitive(gen_rlt(9), Side::Both));
  EXPECT_FALSE(is_locally_transitive(gen_qr(7), Side::Plus));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_locally_transitive(gen_transitive(n), Side::Both));
}

TEST(Classify, LocallyRegular) {
  EXPECT_TRUE(is_locally_regular(gen_qr(7), Side::Both));
  EXPECT_FALSE(is_locally_regular(gen_named("delta_delta"), Side::Plus));
  EXPECT_FALSE(is_locally_regular(gen_rlt(9), Side::Plus));
}

TEST(Classify, DoublyRegular) {
  EXPECT_TRUE(is_doubly_regular(gen_qr(7)));
  EXPECT_TRUE(is_doubly_regular(gen_rlt(3)));
  EXPECT_TRUE(is_nearly_doubly_regular(gen_rlt(5)));
  EXPECT_FALSE(is_doubly_regular(gen_rlt(7)));
  EXPECT_FALSE(is_nearly_doubly_regular(gen_rlt(9)));
  for (int p : {3, 7, 11, 19, 23})
    EXPECT_EQ(is_doubly_regular(gen_qr(p)),
              is_regular(gen_qr(p)) && is_locally_regular(gen_qr(p), Side::Both) && p % 4 == 3);
}

TEST(Classify, LocalDoubleRegularity) {
  EXPECT_TRUE(is_rldr(gen_qr(7)));
  EXPECT_TRUE(is_rlndr(gen_qr(11)));
  EXPECT_TRUE(is_rlndr(gen_qr(19)));
  EXPECT_FALSE(is_rlndr(gen_qr(43)));
  for (int p : {23, 31, 47}) EXPECT_FALSE(is_rldr(gen_qr(p))) << p;
  EXPECT_TRUE(is_rlndr(gen_qr_field(27)));
}

TEST(Classify, CommonOutNeighbour) {
  EXPECT_TRUE(aat_positive(gen_named("mixed9_a")));
  EXPECT_TRUE(aat_positive(gen_named("mixed9_b")));
  EXPECT_TRUE(aat_positive(gen_named("delta_delta")));
  EXPECT_FALSE(aat_positive(gen_transitive(3)));
  EXPECT_FALSE(aat_positive(gen_rlt(9)));
}

TEST(Classify, Landau) {
  const std::vector<int> d{1, 1, 1}, tt{0, 1, 2, 3}, bad{0, 0, 2, 4}, unsorted{2, 1, 0};
  EXPECT_TRUE(landau_feasible(d));
  EXPECT_TRUE(landau_feasible(tt));
  EXPECT_FALSE(landau_feasible(bad));
  EXPECT_ERRC(landau_feasible(unsorted), Errc::NotSorted);
}

TEST(Classify, LandauAcceptsEveryRealScoreList) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Tournament t = gen_random(11, seed);
    std::vector<int> s;
    for (int v = 0; v < 11; ++v) s.push_back(t.out_degree(v));
    std::sort(s.begin(), s.end());
    EXPECT_TRUE(landau_feasible(s));
  }
}

TEST(Classify, ReportFlags) {
  const ClassificationReport r = classify(gen_qr(7));
  EXPECT_EQ(r.n, 7);
  EXPECT_EQ(r.semi_degree, 3);
  EXPECT_TRUE(r.flag("doubly_regular"));
  EXPECT_TRUE(r.flag("rldr"));
  EXPECT_FALSE(r.flag("transitive"));
  EXPECT_TRUE(r.flag("strong"));
  const ClassificationReport t = classify(gen_transitive(4));
  EXPECT_FALSE(t.semi_degree.has_value());
  EXPECT_TRUE(t.flag("transitive"));
  EXPECT_FALSE(t.flag("strong"));
  EXPECT_ERRC(r.flag("bogus"), Errc::UnknownName);
}
