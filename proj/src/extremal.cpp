#include "tourney/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/generators.hpp"

namespace tourney {

namespace {

using Wide = __int128;

std::int64_t to_int64(Wide v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::Overflow, std::string(what) + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Integer-valued closed forms: the division must be exact.
std::int64_t exact_div(Wide num, Wide den, const char* what) {
  if (num % den != 0) throw Error(Errc::InternalParity, std::string(what) + " is not an integer here");
  return to_int64(num / den, what);
}

void require_odd(int n, int min, const char* what) {
  if (n < min || n % 2 == 0)
    throw Error(Errc::BadOrder, std::string(what) + " needs odd n >= " + std::to_string(min) + ", got " +
                                    std::to_string(n));
}

void require_residue(int n, int residue, int min, const char* what) {
  require_odd(n, min, what);
  if (n % 4 != residue)
    throw Error(Errc::BadResidue, std::string(what) + " needs n = " + std::to_string(residue) + " (mod 4)");
}

Wide binom_wide(int n, int k) {
  if (k < 0 || n < k) return 0;
  Wide r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

Check check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

std::vector<std::string> class_keys(int n, const std::vector<std::uint64_t>& codes) {
  std::set<std::string> keys;
  for (auto code : codes) keys.insert(canonical_form(Tournament::from_upper_code(n, code)).key);
  return {keys.begin(), keys.end()};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::Overflow, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

std::int64_t Rational::floor() const noexcept {
  const std::int64_t q = num_ / den_;
  return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ <=> static_cast<Wide>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational c5_upper_bound(int n) {
  require_odd(n, 5, "c5_upper_bound");
  const Wide num = static_cast<Wide>(n + 1) * n * (n - 1) * (n - 2) * (n - 3);
  const Wide g = std::gcd(static_cast<std::int64_t>(num % 160), std::int64_t{160});
  return Rational(to_int64(num / g, "c5_upper_bound"), static_cast<std::int64_t>(160 / g));
}

std::int64_t c5_nearly_doubly_regular(int n) {
  require_residue(n, 1, 5, "c5_nearly_doubly_regular");
  const Wide nn = n;
  return exact_div(nn * (nn - 1) * (nn * nn * nn - 4 * nn * nn + nn - 14), 160, "c5_nearly_doubly_regular");
}

std::int64_t value_s5_rlt(int n) {
  require_odd(n, 1, "value_s5_rlt");
  const Wide nn = n;
  return exact_div((nn + 1) * nn * (nn - 1) * (nn - 3) * (11 * nn - 47), 1920, "value_s5_rlt");
}

std::int64_t value_c5_rlt(int n) {
  require_odd(n, 1, "value_c5_rlt");
  const Wide nn = n;
  return exact_div((nn + 1) * nn * (nn - 1) * (nn - 3) * (3 * nn - 11), 480, "value_c5_rlt");
}

std::int64_t value_s5_dr(int n) {
  require_residue(n, 3, 3, "value_s5_dr");
  const Wide nn = n;
  return exact_div(nn * (nn + 1) * (nn - 1) * (nn - 3) * (17 * nn - 59), 3840, "value_s5_dr");
}

std::int64_t value_s5_ndr(int n) {
  require_residue(n, 1, 5, "value_s5_ndr");
  const Wide nn = n;
  return exact_div(nn * (nn - 1) * (17 * nn * nn * nn - 93 * nn * nn + 127 * nn - 243), 3840, "value_s5_ndr");
}

std::int64_t value_rlt5_copies_in_rlt(int n) {
  require_odd(n, 1, "value_rlt5_copies_in_rlt");
  const Wide nn = n;
  return exact_div((nn + 3) * (nn + 1) * nn * (nn - 1) * (nn - 3), 1920, "value_rlt5_copies_in_rlt");
}

std::int64_t value_delta_o_tt3_o_copies_in_rlt(int n) {
  require_odd(n, 5, "value_delta_o_tt3_o_copies_in_rlt");
  const Wide nn = n;
  return exact_div((nn + 1) * nn * (nn - 1) * (nn - 3) * (nn - 5), 384, "value_delta_o_tt3_o_copies_in_rlt");
}

std::int64_t km_arc_term_bound(int n) {
  require_odd(n, 3, "km_arc_term_bound");
  return static_cast<std::int64_t>(n - 3) * (n - 2) / 2;
}

Rational expected_cm(int n, int m) {
  if (m < 3) throw Error(Errc::BadM, "expected_cm needs m >= 3");
  if (n < 0 || m > 60) throw Error(Errc::BadOrder, "expected_cm out of range");
  Wide falling = 1;
  for (int k = 0; k < m; ++k) falling *= (n - k);
  Wide den = static_cast<Wide>(m) << m;
  Wide g = falling;
  Wide d = den;
  while (d != 0) {
    const Wide r = g % d;
    g = d;
    d = r;
  }
  if (g < 0) g = -g;
  if (g == 0) return Rational(0, 1);
  return Rational(to_int64(falling / g, "expected_cm"), to_int64(den / g, "expected_cm"));
}

CycleIdentityCheck cycle_identity(const Tournament& t) {
  if (!is_regular(t)) throw Error(Errc::NotRegular, "identity holds for regular tournaments only");
  const Wide n = t.order();
  const Wide product = n * (n - 1) * (n + 1) * (n - 3) * (n + 3);
  CycleIdentityCheck r;
  r.lhs = c5_km(t) + 2 * c4_formula(t);
  r.rhs = exact_div(product, 160, "c5 + 2 c4");
  r.trace_lhs = 32 * trace_m(t, 5) + 80 * trace_m(t, 4);
  r.trace_rhs = product;
  return r;
}

std::int64_t c5_regular_from_local_cycles(const Tournament& t) {
  if (!is_regular(t)) throw Error(Errc::NotRegular, "local-cycle form needs a regular tournament");
  const Wide n = t.order();
  Wide total = n * (n - 1) * (n + 1) * (n - 3) * (3 * n - 11);
  if (total % 480 != 0) throw Error(Errc::InternalParity, "regular c5 base term is not an integer");
  total /= 480;
  for (int v = 0; v < t.order(); ++v) total += c3_within(t, t.out_set(v)) + c3_within(t, t.in_set(v));
  return to_int64(total, "c5");
}

BalancedSum balanced_binomial_sum(int n, int p) {
  if (p < 2) throw Error(Errc::BadM, "balanced_binomial_sum needs p >= 2");
  if (n < 1) throw Error(Errc::BadOrder, "balanced_binomial_sum needs n >= 1");
  Wide sum = 0;
  if (n % 2 == 1) {
    sum = n * binom_wide((n - 1) / 2, p);
  } else {
    sum = (n / 2) * (binom_wide(n / 2, p) + binom_wide(n / 2 - 1, p));
  }
  return BalancedSum{to_int64(sum, "balanced_binomial_sum"), n >= 2 * p - 1};
}

bool BoundReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

BoundReport verify_balanced_minimum(int n, int p) {
  if (n > kMaxOracleOrder) throw Error(Errc::TooLarge, "verify_balanced_minimum is limited to n <= 12");
  const BalancedSum expected = balanced_binomial_sum(n, p);
  const int total = n * (n - 1) / 2;

  Wide best = -1;
  Wide best_feasible = -1;
  std::vector<std::vector<int>> minimizers;
  std::uint64_t sequences = 0;
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::vector<Wide> term(static_cast<std::size_t>(total) + 1);
  for (int d = 0; d <= total; ++d) term[d] = binom_wide(d, p);

  auto rec = [&](auto&& self, int idx, int min_value, int remaining, Wide acc) -> void {
    if (idx == n) {
      if (remaining != 0) return;
      ++sequences;
      if (best < 0 || acc < best) {
        best = acc;
        minimizers.clear();
      }
      if (acc == best) minimizers.push_back(seq);
      if (landau_feasible(seq) && (best_feasible < 0 || acc < best_feasible)) best_feasible = acc;
      return;
    }
    const int slots = n - idx;
    for (int v = min_value; v * slots <= remaining; ++v) {
      seq[idx] = v;
      self(self, idx + 1, v, remaining - v, acc + term[v]);
    }
  };
  rec(rec, 0, 0, total, 0);

  std::vector<int> balanced(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) balanced[i] = n % 2 ? (n - 1) / 2 : (i < n / 2 ? n / 2 - 1 : n / 2);

  BoundReport r;
  r.bound_name = "balanced_minimum";
  r.n = n;
  r.bound_value = Rational(expected.value);
  r.observed = to_int64(best, "balanced minimum");
  r.tight = r.observed == expected.value;
  for (const auto& m : minimizers) r.witnesses.push_back(join(m));
  r.checks.push_back(check("minimum_equals_balanced_sum", r.tight,
                           "min " + std::to_string(r.observed) + " over " + std::to_string(sequences) +
                               " sequences, balanced sum " + std::to_string(expected.value)));
  r.checks.push_back(check("feasible_minimum_equals_balanced_sum", best_feasible == best));
  if (expected.in_range)
    r.checks.push_back(check("balanced_sequence_unique_minimizer",
                             minimizers.size() == 1 && minimizers.front() == balanced,
                             std::to_string(minimizers.size()) + " minimizer(s)"));
  return r;
}

ExhaustiveMaxima sweep_c5_s5(int n, int threads) {
  ExhaustiveMaxima init;
  init.n = n;
  init.max_c5 = -1;
  init.max_s5 = -1;
  auto visit = [](ExhaustiveMaxima& acc, const Tournament& t, std::uint64_t code) {
    ++acc.total;
    if (is_regular(t)) ++acc.regular_count;
    const std::int64_t c5 = c5_km(t);
    if (c5 > acc.max_c5) {
      acc.max_c5 = c5;
      acc.c5_maximizers.clear();
    }
    if (c5 == acc.max_c5) acc.c5_maximizers.push_back(code);
    const std::int64_t s5 = s5_formula(t);
    if (s5 > acc.max_s5) {
      acc.max_s5 = s5;
      acc.s5_maximizers.clear();
    }
    if (s5 == acc.max_s5) acc.s5_maximizers.push_back(code);
  };
  auto merge_list = [](std::int64_t& best, std::vector<std::uint64_t>& codes, std::int64_t other_best,
                       std::vector<std::uint64_t>& other_codes) {
    if (other_best > best) {
      best = other_best;
      codes = std::move(other_codes);
    } else if (other_best == best) {
      codes.insert(codes.end(), other_codes.begin(), other_codes.end());
    }
  };
  auto merge = [&](ExhaustiveMaxima a, ExhaustiveMaxima b) {
    a.total += b.total;
    a.regular_count += b.regular_count;
    merge_list(a.max_c5, a.c5_maximizers, b.max_c5, b.c5_maximizers);
    merge_list(a.max_s5, a.s5_maximizers, b.max_s5, b.s5_maximizers);
    return a;
  };
  return sweep_all(n, init, visit, merge, threads);
}

BoundReport c5_max_report(const ExhaustiveMaxima& sweep) {
  const int n = sweep.n;
  if (n != 5 && n != 7) throw Error(Errc::TooLarge, "exhaustive check is defined for n = 5 and n = 7");
  BoundReport r;
  r.bound_name = "c5_max";
  r.n = n;
  r.bound_value = c5_upper_bound(n);
  r.observed = sweep.max_c5;
  r.tight = r.bound_value.is_integer() && r.bound_value.num() == r.observed;
  r.witnesses = class_keys(n, sweep.c5_maximizers);
  r.checks.push_back(check("max_c5_within_bound", Rational(r.observed) <= r.bound_value,
                           "max c5 " + std::to_string(r.observed) + ", bound " + r.bound_value.to_string()));
  r.checks.push_back(check("swept_all_labeled", sweep.total == (std::uint64_t{1} << upper_pair_count(n))));
  if (n == 7) {
    r.checks.push_back(check("bound_attained", r.tight));
    const std::string dr_key = canonical_form(gen_qr(7)).key;
    const bool all_dr = std::all_of(sweep.c5_maximizers.begin(), sweep.c5_maximizers.end(), [&](auto code) {
      return is_doubly_regular(Tournament::from_upper_code(n, code));
    });
    r.checks.push_back(check("every_maximizer_doubly_regular", all_dr));
    r.checks.push_back(check("every_maximizer_isomorphic_to_qr7",
                             r.witnesses.size() == 1 && r.witnesses.front() == dr_key,
                             std::to_string(sweep.c5_maximizers.size()) + " labeled maximizers, " +
                                 std::to_string(r.witnesses.size()) + " class(es)"));
  } else {
    // No doubly-regular tournament of order 5, so the bound is strict here.
    r.checks.push_back(check("bound_not_attained", Rational(r.observed) < r.bound_value));
    r.checks.push_back(check("max_c5_is_3", r.observed == 3));
    const std::string key = canonical_form(gen_named("delta_o_delta_o")).key;
    r.checks.push_back(check("maximizers_include_delta_o_delta_o",
                             std::find(r.witnesses.begin(), r.witnesses.end(), key) != r.witnesses.end()));
  }
  return r;
}

BoundReport s5_max_report(const ExhaustiveMaxima& sweep) {
  const int n = sweep.n;
  if (n != 5 && n != 7) throw Error(Errc::TooLarge, "exhaustive check is defined for n = 5 and n = 7");
  BoundReport r;
  r.bound_name = "s5_max";
  r.n = n;
  r.bound_value = Rational(value_s5_rlt(n));
  r.observed = sweep.max_s5;
  r.tight = r.bound_value.num() == r.observed;
  r.witnesses = class_keys(n, sweep.s5_maximizers);
  r.checks.push_back(check("max_s5_equals_s5_rlt", r.tight,
                           "max s5 " + std::to_string(r.observed) + ", s5(RLT) " + r.bound_value.to_string()));
  if (n == 7) {
    std::vector<std::string> regular;
    for (const auto& cls : enumerate_regular(7).classes) regular.push_back(cls.form.key);
    r.checks.push_back(check("maximizer_classes_are_the_regular_classes", r.witnesses == regular,
                             std::to_string(r.witnesses.size()) + " maximizer class(es)"));
    r.checks.push_back(check("maximizers_are_all_labeled_regular",
                             sweep.s5_maximizers.size() == sweep.regular_count));
  } else {
    // Every strong 5-tournament has s5 = 1.
    const bool all_strong = std::all_of(sweep.s5_maximizers.begin(), sweep.s5_maximizers.end(), [&](auto code) {
      return strong_decomposition(Tournament::from_upper_code(n, code)).strong();
    });
    r.checks.push_back(check("maximizers_are_strong", all_strong));
    r.checks.push_back(check("six_strong_classes", r.witnesses.size() == 6,
                             std::to_string(r.witnesses.size()) + " class(es)"));
  }
  return r;
}

BoundReport verify_c5_max_exhaustive(int n, int threads) {
  if (n != 5 && n != 7) throw Error(Errc::TooLarge, "exhaustive check is defined for n = 5 and n = 7");
  return c5_max_report(sweep_c5_s5(n, threads));
}

BoundReport audit_regular_nine(const EnumCorpus& corpus) {
  if (corpus.n != 9 || corpus.constraint != "regular" || corpus.classes.empty())
    throw Error(Errc::CorpusMissing, "need the corpus of regular order-9 classes");
  const int n = 9;

  struct ClassData {
    const Tournament* t;
    std::string key;
    std::int64_t s5, c5;
    bool aat, ndr;
  };
  std::vector<ClassData> data;
  for (const auto& cls : corpus.classes) {
    const Tournament& t = cls.representative;
    data.push_back({&t, cls.form.key, s5_formula(t), c5_km(t), aat_positive(t), is_nearly_doubly_regular(t)});
  }

  const std::string delta_delta = canonical_form(gen_named("delta_delta")).key;
  const Tournament fixture_a = gen_named("mixed9_a");
  const Tournament fixture_b = gen_named("mixed9_b");
  const std::string key_a = canonical_form(fixture_a).key;
  const std::string key_b = canonical_form(fixture_b).key;
  const std::string rlt9 = canonical_form(gen_rlt(9)).key;

  std::int64_t min_s5 = INT64_MAX;
  std::int64_t max_c5 = INT64_MIN;
  for (const auto& d : data) {
    min_s5 = std::min(min_s5, d.s5);
    max_c5 = std::max(max_c5, d.c5);
  }
  std::set<std::string> minimizers, aat, ndr, c5_max;
  for (const auto& d : data) {
    if (d.s5 == min_s5) minimizers.insert(d.key);
    if (d.aat) aat.insert(d.key);
    if (d.ndr) ndr.insert(d.key);
    if (d.c5 == max_c5) c5_max.insert(d.key);
  }

  BoundReport r;
  r.bound_name = "regular_nine";
  r.n = n;
  r.bound_value = Rational(value_s5_ndr(n));
  r.observed = min_s5;
  r.tight = r.observed == r.bound_value.num();
  r.witnesses.assign(minimizers.begin(), minimizers.end());

  r.checks.push_back(check("fifteen_classes", data.size() == 15, std::to_string(data.size()) + " classes"));
  r.checks.push_back(check("min_s5_equals_ndr_value", r.tight,
                           "min s5 " + std::to_string(min_s5) + ", NDR value " + r.bound_value.to_string()));
  r.checks.push_back(check("five_minimizer_classes", minimizers.size() == 5,
                           std::to_string(minimizers.size()) + " minimizer class(es)"));
  r.checks.push_back(check("minimizers_are_aat_positive_classes", minimizers == aat,
                           std::to_string(aat.size()) + " aat-positive class(es)"));
  std::size_t ndr_in_min = 0;
  for (const auto& k : ndr) ndr_in_min += minimizers.count(k);
  r.checks.push_back(check("two_ndr_minimizers", ndr.size() == 2 && ndr_in_min == 2,
                           std::to_string(ndr.size()) + " NDR class(es)"));
  r.checks.push_back(check("delta_delta_minimizer", minimizers.count(delta_delta) == 1));
  std::set<std::string> expected{key_a, key_b, delta_delta};
  expected.insert(ndr.begin(), ndr.end());
  r.checks.push_back(check("fixtures_minimizers", key_a != key_b && minimizers.count(key_a) && minimizers.count(key_b)));
  r.checks.push_back(check("minimizers_are_ndr_delta_delta_and_fixtures", expected == minimizers,
                           std::to_string(expected.size()) + " expected class(es)"));

  const Tournament st4 = gen_named("st4");
  const Tournament o_delta = gen_chain(std::vector<Tournament>{gen_transitive(1), gen_rlt(3)});
  auto has_out_set = [](const Tournament& t, const Tournament& pattern) {
    for (int v = 0; v < t.order(); ++v)
      if (t.out_degree(v) == pattern.order() && is_isomorphic(induced(t, t.out_set(v)), pattern)) return true;
    return false;
  };
  r.checks.push_back(check("fixtures_have_st4_and_o_delta_out_sets",
                           has_out_set(fixture_a, st4) && has_out_set(fixture_a, o_delta) &&
                               has_out_set(fixture_b, st4) && has_out_set(fixture_b, o_delta)));

  const std::int64_t ndr_c5 = c5_nearly_doubly_regular(n);
  r.checks.push_back(check("max_c5_equals_ndr_value", max_c5 == ndr_c5,
                           "max c5 " + std::to_string(max_c5) + ", NDR value " + std::to_string(ndr_c5)));
  r.checks.push_back(check("max_c5_only_at_ndr", c5_max == ndr));

  const std::int64_t s5_rlt = value_s5_rlt(n);
  const std::int64_t c5_rlt = value_c5_rlt(n);
  bool s5_upper = true;
  bool c5_lower = true;
  bool identity = true;
  for (const auto& d : data) {
    s5_upper &= d.s5 < s5_rlt || (d.s5 == s5_rlt && d.key == rlt9);
    c5_lower &= d.c5 >= c5_rlt;
    identity &= cycle_identity(*d.t).holds();
  }
  r.checks.push_back(check("s5_at_most_rlt_with_equality_only_at_rlt", s5_upper));
  r.checks.push_back(check("c5_at_least_rlt", c5_lower));
  r.checks.push_back(check("cycle_identity_on_every_class", identity));
  return r;
}

BoundReport verify_cycle_identity(const Tournament& t) {
  const CycleIdentityCheck e = cycle_identity(t);
  BoundReport r;
  r.bound_name = "cycle_identity";
  r.n = t.order();
  r.bound_value = Rational(e.rhs);
  r.observed = e.lhs;
  r.tight = e.lhs == e.rhs;
  r.checks.push_back(check("c5_plus_2c4", e.lhs == e.rhs,
                           std::to_string(e.lhs) + " vs " + std::to_string(e.rhs)));
  r.checks.push_back(check("trace_form", e.trace_lhs == e.trace_rhs,
                           to_string(e.trace_lhs) + " vs " + to_string(e.trace_rhs)));
  return r;
}

}  // namespace tourney
