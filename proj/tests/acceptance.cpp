// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/counting.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/extremal.hpp"
#include "tourney/generators.hpp"

using namespace tourney;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures; a criterion passes when none were recorded and it met its time limit.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Outcome {
  int passed = 0;
  int failed = 0;
};

void run(Outcome& o, int id, const char* title, double limit_s, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_s) c.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  const bool ok = c.failures().empty();
  std::printf("%s  %2d  %-64s %8.2f s\n", ok ? "PASS" : "FAIL", id, title, secs);
  for (const auto& f : c.failures()) std::printf("        %s\n", f.c_str());
  std::fflush(stdout);
  (ok ? o.passed : o.failed)++;
}

const EnumCorpus& r9() {
  static const EnumCorpus corpus = enumerate_regular(9);
  return corpus;
}

const ExhaustiveMaxima& sweep7() {
  static const ExhaustiveMaxima sweep = sweep_c5_s5(7);
  return sweep;
}

std::string failed_checks(const BoundReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += " " + c.name + (c.detail.empty() ? "" : "(" + c.detail + ")");
  return s;
}

}  // namespace

int main() {
  Outcome o;

  run(o, 1, "formula/oracle equivalence on all 1024 5-tournaments", 5.0, [](Criterion& c) {
    int bad = 0;
    for (std::uint64_t code = 0; code < 1024; ++code) {
      const Tournament t = Tournament::from_upper_code(5, code);
      const bool ok = c5_km(t) == oracle_cycles(t, 5) && s5_formula(t) == oracle_strong_subs(t, 5) &&
                      c4_formula(t) == oracle_cycles(t, 4) && trace_m(t, 3) == 3 * oracle_cycles(t, 3) &&
                      trace_m(t, 4) == 4 * oracle_cycles(t, 4) && trace_m(t, 5) == 5 * oracle_cycles(t, 5);
      bad += !ok;
    }
    c.expect_eq(bad, 0, "tournaments with a mismatch");
  });

  run(o, 2, "max c5 over all 7-tournaments is 42, only at QR7", 600.0, [](Criterion& c) {
    const ExhaustiveMaxima& s = sweep7();
    c.expect_eq(s.total, std::uint64_t{2097152}, "tournaments swept");
    c.expect_eq(s.max_c5, 42, "max c5");
    c.expect(c5_upper_bound(7) == Rational(42), "bound at n=7 is 42");
    const std::string qr7 = canonical_form(gen_qr(7)).key;
    bool all_qr7 = !s.c5_maximizers.empty();
    for (auto code : s.c5_maximizers) all_qr7 &= canonical_form(Tournament::from_upper_code(7, code)).key == qr7;
    c.expect(all_qr7, "every maximizer isomorphic to QR7");
    const BoundReport r = c5_max_report(s);
    c.expect(r.holds(), "report checks:" + failed_checks(r));
  });

  run(o, 3, "max s5 over all 7-tournaments is 21, at the 3 regular classes", 600.0, [](Criterion& c) {
    const ExhaustiveMaxima& s = sweep7();
    c.expect_eq(s.max_s5, 21, "max s5");
    std::set<std::string> keys;
    for (auto code : s.s5_maximizers) keys.insert(canonical_form(Tournament::from_upper_code(7, code)).key);
    const std::set<std::string> expected{canonical_form(gen_rlt(7)).key, canonical_form(gen_qr(7)).key,
                                         canonical_form(gen_named("kz7")).key};
    c.expect_eq(keys.size(), std::size_t{3}, "maximizer classes");
    c.expect(keys == expected, "maximizer classes are RLT7, QR7, Kz7");
    const BoundReport r = s5_max_report(s);
    c.expect(r.holds(), "report checks:" + failed_checks(r));
  });

  run(o, 4, "regular class counts 1, 1, 3, 15 for n = 3, 5, 7, 9", 1800.0, [](Criterion& c) {
    c.expect_eq(enumerate_regular(3).classes.size(), std::size_t{1}, "n=3");
    c.expect_eq(enumerate_regular(5).classes.size(), std::size_t{1}, "n=5");
    c.expect_eq(enumerate_regular(7).classes.size(), std::size_t{3}, "n=7");
    c.expect_eq(r9().classes.size(), std::size_t{15}, "n=9");
  });

  run(o, 5, "order-9 regular audit: s5 minimum 108, c5 maximum 180", 600.0, [](Criterion& c) {
    const BoundReport r = audit_regular_nine(r9());
    c.expect_eq(r.observed, 108, "min s5");
    c.expect_eq(r.witnesses.size(), std::size_t{5}, "minimizer classes");
    c.expect_eq(c5_nearly_doubly_regular(9), 180, "NDR c5 value");
    c.expect(r.holds(), "report checks:" + failed_checks(r));
  });

  run(o, 6, "c5 + 2 c4 identity and trace form on regular tournaments", 60.0, [](Criterion& c) {
    std::vector<std::pair<std::string, Tournament>> cases{{"delta", gen_rlt(3)}, {"rlt5", gen_rlt(5)},
                                                          {"qr11", gen_qr(11)},  {"rlt11", gen_rlt(11)}};
    for (const auto& cls : enumerate_regular(7).classes) cases.emplace_back("r7:" + cls.form.key, cls.representative);
    for (const auto& cls : r9().classes) cases.emplace_back("r9:" + cls.form.key, cls.representative);
    c.expect_eq(cases.size(), std::size_t{22}, "tournaments checked");
    for (const auto& [name, t] : cases) {
      const CycleIdentityCheck e = cycle_identity(t);
      c.expect(e.lhs == e.rhs, name + ": c5 + 2 c4 = " + std::to_string(e.lhs) + " vs " + std::to_string(e.rhs));
      c.expect(e.trace_lhs == e.trace_rhs, name + ": trace form");
      c.expect(2 * trace_m(t, 5) + 5 * trace_m(t, 4) == e.trace_rhs / 16, name + ": tr5 + (5/2) tr4");
    }
  });

  run(o, 7, "RLT closed forms against brute force, n = 5..11", 60.0, [](Criterion& c) {
    const std::vector<std::int64_t> s5{1, 21, 117, 407}, c5{2, 28, 144, 484};
    const Tournament dtt = gen_named("delta_o_tt3_o");
    const Tournament dt2 = gen_named("delta_tt2_o_tt2");
    const Tournament r5 = gen_rlt(5);
    for (int k = 0; k < 4; ++k) {
      const int n = 5 + 2 * k;
      const Tournament t = gen_rlt(n);
      const std::string at = " at n=" + std::to_string(n);
      c.expect_eq(value_s5_rlt(n), s5[k], "s5 closed form" + at);
      c.expect_eq(value_c5_rlt(n), c5[k], "c5 closed form" + at);
      c.expect_eq(oracle_strong_subs(t, 5), s5[k], "s5 oracle" + at);
      c.expect_eq(oracle::cycles(t, 5), c5[k], "c5 oracle" + at);
      c.expect_eq(s5_formula(t), s5[k], "s5 formula" + at);
      c.expect_eq(c5_km(t), c5[k], "c5 formula" + at);
      const std::int64_t a = count_copies(t, dtt), b = count_copies(t, dt2), r = count_copies(t, r5);
      c.expect_eq(a + b + 2 * r, c5[k], "c5 copy decomposition" + at);
      c.expect_eq(a + b + r, s5[k], "s5 copy decomposition" + at);
      c.expect_eq(r, value_rlt5_copies_in_rlt(n), "RLT5 copies" + at);
      c.expect_eq(a, value_delta_o_tt3_o_copies_in_rlt(n), "delta(o,TT3,o) copies" + at);
    }
    c.expect_eq(count_copies(gen_rlt(7), r5), 7, "RLT5 in RLT7");
    c.expect_eq(count_copies(gen_rlt(7), dtt), 7, "delta(o,TT3,o) in RLT7");
  });

  run(o, 8, "small five-cycle facts", 5.0, [](Criterion& c) {
    c.expect_eq(c5_km(gen_named("delta_o_delta_o")), 3, "c5(delta(o,delta,o))");
    c.expect_eq(oracle::cycles(gen_named("delta_o_delta_o"), 5), 3, "oracle c5(delta(o,delta,o))");
    c.expect_eq(c5_km(gen_named("delta_tt2")), 6, "c5(delta.TT2)");
    c.expect_eq(oracle::cycles(gen_named("delta_tt2"), 5), 6, "oracle c5(delta.TT2)");
    const Tournament r7 = gen_rlt(7);
    const Tournament minus = induced(r7, VertexSet{r7.vertices().mask & ~Row{1}});
    const std::vector<Tournament> reps{gen_transitive(2), gen_transitive(1), gen_transitive(1), gen_transitive(1),
                                       gen_transitive(1)};
    const Tournament replaced = compose(gen_rlt(5), reps);
    c.expect(is_isomorphic(minus, replaced), "RLT7 minus a vertex is RLT5 with a vertex replaced by TT2");
    c.expect_eq(c5_km(minus), 8, "c5(RLT7 minus a vertex)");
    c.expect_eq(oracle::cycles(replaced, 5), 8, "oracle c5(RLT5 with TT2)");
  });

  run(o, 9, "balanced degree sequences minimise sum C(d, p)", 10.0, [](Criterion& c) {
    const std::vector<std::pair<int, int>> cases{{5, 2}, {6, 2}, {7, 2}, {7, 3}, {7, 4}, {9, 4}, {8, 3}};
    for (const auto& [n, p] : cases) {
      const BoundReport r = verify_balanced_minimum(n, p);
      const std::string at = "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
      c.expect_eq(r.observed, balanced_binomial_sum(n, p).value, "minimum " + at);
      c.expect(r.holds(), "checks " + at + ":" + failed_checks(r));
      if (n >= 2 * p - 1) c.expect_eq(r.witnesses.size(), std::size_t{1}, "unique minimizer " + at);
    }
  });

  run(o, 10, "local structure of quadratic residue tournaments", 10.0, [](Criterion& c) {
    c.expect(is_rldr(gen_qr(7)), "QR7 in RLDR");
    c.expect(is_rlndr(gen_qr(11)), "QR11 in RLNDR");
    c.expect(is_rlndr(gen_qr(19)), "QR19 in RLNDR");
    for (int p : {23, 31, 47}) c.expect(!is_rldr(gen_qr(p)), "QR" + std::to_string(p) + " not in RLDR");
    c.expect(!is_rlndr(gen_qr(43)), "QR43 not in RLNDR");
  });

  run(o, 11, "Kz7 has delta.TT2 as a one-vertex-deleted subtournament", 10.0, [](Criterion& c) {
    const Tournament kz = gen_named("kz7");
    c.expect(is_regular(kz) && !is_locally_transitive(kz, Side::Both) && !is_doubly_regular(kz),
             "kz7 is the regular class outside RLT and DR");
    int hits = 0;
    for (int v = 0; v < 7; ++v)
      hits += is_isomorphic(induced(kz, VertexSet{kz.vertices().mask & ~(Row{1} << v)}), gen_named("delta_tt2"));
    c.expect(hits > 0, "some vertex deletion is isomorphic to delta.TT2");
  });

  std::printf("%d passed, %d failed\n", o.passed, o.failed);
  return o.failed == 0 ? 0 : 1;
}
