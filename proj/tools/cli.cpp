#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/counting.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/extremal.hpp"
#include "tourney/generators.hpp"
#include "tourney/tour_io.hpp"

namespace tourney::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int threads = 1;
  int time_budget_s = 1800;
  bool plain = false;

  std::string gen_kind;
  int n = 0;
  int p = 0;
  std::vector<int> residues;
  std::string name;
  std::uint64_t seed = 0;
  std::string input = "-";
  std::string output;

  std::vector<std::string> quantities;
  std::vector<int> walk_lengths;
  std::vector<int> trace_lengths;
  std::string method = "formula";
  std::string copies;

  std::string corpus;
  std::string constraint = "regular";
  std::string verify_corpus_path;
  bool long_run = false;
};

int default_threads() {
  if (const char* env = std::getenv("TOURNEY_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Tournament load_input(const std::string& path) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_tour(text);
  }
  return read_tour_file(path);
}

Json big_json(BigCount v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

Json rational_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json report_json(const BoundReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"bound_name", r.bound_name}, {"n", r.n},          {"bound_value", rational_json(r.bound_value)},
              {"observed", r.observed},     {"tight", r.tight},  {"witnesses", r.witnesses},
              {"checks", checks},           {"holds", r.holds()}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_plain(std::ostream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Tournament t = gen_transitive(1);
  const std::string& k = cfg.gen_kind;
  if (k == "transitive") t = gen_transitive(cfg.n);
  else if (k == "rotational") t = gen_rotational(RotationalSymbol{cfg.n, cfg.residues});
  else if (k == "rlt") t = gen_rlt(cfg.n);
  else if (k == "qr") t = gen_qr_field(cfg.n);
  else if (k == "named") t = gen_named(cfg.name);
  else if (k == "random") t = gen_random(cfg.n, cfg.seed);
  else throw UsageError("unknown generator '" + k + "'");
  if (cfg.output.empty())
    out << write_tour(t);
  else
    write_tour_file(cfg.output, t);
  return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const Tournament t = load_input(cfg.input);
  CountRequest req;
  req.quantities = cfg.quantities;
  for (int m : cfg.walk_lengths) req.quantities.push_back("w" + std::to_string(m));
  for (int m : cfg.trace_lengths) req.quantities.push_back("tr" + std::to_string(m));
  if (req.quantities.empty() && cfg.copies.empty()) req.quantities = {"c3", "c4", "c5", "s3", "s4", "s5"};

  if (cfg.method == "formula") req.methods = {CountMethod::Formula};
  else if (cfg.method == "oracle") req.methods = {CountMethod::Oracle};
  else if (cfg.method == "trace") req.methods = {CountMethod::Trace};
  else req.methods = {CountMethod::Formula, CountMethod::Oracle, CountMethod::Trace};

  const bool wants_oracle = cfg.method == "oracle" || cfg.method == "all" || !cfg.copies.empty();
  if (wants_oracle && t.order() > kMaxOracleOrder)
    throw UsageError("oracle methods are limited to n <= " + std::to_string(kMaxOracleOrder) + ", input has n = " +
                     std::to_string(t.order()));

  std::optional<Tournament> pattern;
  if (!cfg.copies.empty()) {
    pattern = read_tour_file(cfg.copies);
    req.pattern = &*pattern;
  }
  const CountReport report = count_report(t, req);

  Json j;
  j["n"] = report.n;
  j["quantities"] = Json::array();
  for (const auto& e : report.quantities)
    j["quantities"].push_back(Json{{"name", e.name}, {"method", std::string(method_name(e.method))}, {"value", big_json(e.value)}});
  j["cross_checked"] = report.cross_checked();
  if (cfg.plain) {
    for (const auto& e : report.quantities) out << e.name << ' ' << method_name(e.method) << ' ' << to_string(e.value) << '\n';
  } else {
    emit(out, j);
  }
  return report.consistent() ? kExitOk : kExitViolated;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Tournament t = load_input(cfg.input);
  const ClassificationReport r = classify(t);
  Json j;
  j["n"] = r.n;
  j["semi_degree"] = r.semi_degree ? Json(*r.semi_degree) : Json(nullptr);
  for (std::size_t i = 0; i < r.flags.size(); ++i) j[std::string(ClassificationReport::kFlagNames[i])] = r.flags[i];
  if (cfg.plain)
    emit_plain(out, j);
  else
    emit(out, j);
  return kExitOk;
}

EnumCorpus load_or_enumerate_r9(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.corpus.empty()) return read_corpus_file(cfg.corpus);
  err << "no --corpus given; enumerating regular 9-tournaments\n";
  EnumerateOptions opts;
  opts.threads = cfg.threads;
  opts.time_budget = std::chrono::seconds(cfg.time_budget_s);
  return enumerate_regular(9, opts);
}

int finish_report(const BoundReport& r, std::ostream& out, std::ostream& err) {
  emit(out, report_json(r));
  for (const auto& c : r.checks)
    if (!c.passed) err << "violated: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  return r.holds() ? kExitOk : kExitViolated;
}

int cmd_verify(const std::string& which, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (which == "c5-max") return finish_report(c5_max_report(sweep_c5_s5(cfg.n, cfg.threads)), out, err);
  if (which == "s5-max") return finish_report(s5_max_report(sweep_c5_s5(cfg.n, cfg.threads)), out, err);
  if (which == "regular-nine") return finish_report(audit_regular_nine(load_or_enumerate_r9(cfg, err)), out, err);
  if (which == "balanced-minimum") return finish_report(verify_balanced_minimum(cfg.n, cfg.p), out, err);
  if (which == "cycle-identity") return finish_report(verify_cycle_identity(load_input(cfg.input)), out, err);
  throw UsageError("unknown claim '" + which + "'");
}

Json corpus_summary(const EnumCorpus& c) {
  Json keys = Json::array();
  for (const auto& cls : c.classes) keys.push_back(cls.form.key);
  return Json{{"n", c.n},
              {"constraint", c.constraint},
              {"classes", c.classes.size()},
              {"labeled_count", c.labeled_count},
              {"keys", keys}};
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.verify_corpus_path.empty()) {
    const EnumCorpus corpus = read_corpus_file(cfg.verify_corpus_path);
    const auto problems = verify_corpus(corpus);
    Json j = corpus_summary(corpus);
    j["problems"] = problems;
    j["valid"] = problems.empty();
    emit(out, j);
    for (const auto& p : problems) err << "corpus problem: " << p << '\n';
    return problems.empty() ? kExitOk : kExitViolated;
  }
  if (cfg.n == 0) throw UsageError("enumerate needs --n or --verify");
  if (cfg.constraint != "regular") throw UsageError("only --constraint regular is supported");
  EnumerateOptions opts;
  opts.threads = cfg.threads;
  opts.time_budget = std::chrono::seconds(cfg.time_budget_s);
  opts.allow_long_run = cfg.long_run;
  const EnumCorpus corpus = enumerate_regular(cfg.n, opts);
  if (!cfg.output.empty()) write_corpus_file(cfg.output, corpus);
  emit(out, corpus_summary(corpus));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Construct, count, classify and verify tournaments", "tourney"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "worker threads (fallback: TOURNEY_THREADS)")->check(CLI::Range(1, 1024));
  app.add_option("--time-budget", cfg.time_budget_s, "seconds before long runs abort")->check(CLI::PositiveNumber);
  app.add_flag("--plain", cfg.plain, "plain key/value output instead of JSON where supported");

  auto* gen = app.add_subcommand("gen", "emit a tournament in .tour format");
  gen->add_option("kind", cfg.gen_kind, "generator")
      ->required()
      ->check(CLI::IsMember({"transitive", "rotational", "rlt", "qr", "named", "random"}));
  gen->add_option("--n", cfg.n, "order (prime power for qr)");
  gen->add_option("--residues", cfg.residues, "rotational symbol")->delimiter(',');
  gen->add_option("--name", cfg.name, "named tournament")->check(CLI::IsMember(named_tournaments()));
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--out", cfg.output, "output file (default stdout)");

  auto* count = app.add_subcommand("count", "count cycles and subtournaments");
  for (const char* q : {"c3", "c4", "c5", "s3", "s4", "s5"}) {
    const std::string name = q;
    count->add_flag_callback("--" + name, [&cfg, name] { cfg.quantities.push_back(name); }, "count " + name);
  }
  count->add_option("--w", cfg.walk_lengths, "m-subtournaments without sink or source")->check(CLI::Range(3, 64));
  count->add_option("--tr", cfg.trace_lengths, "trace of A^m")->check(CLI::Range(1, 64));
  count->add_option("--copies", cfg.copies, "pattern .tour file to count copies of");
  count->add_option("--method", cfg.method, "formula|oracle|trace|all")
      ->check(CLI::IsMember({"formula", "oracle", "trace", "all"}));
  count->add_option("--input", cfg.input, "input .tour file (- for stdin)");

  auto* cls = app.add_subcommand("classify", "report structural flags");
  cls->add_option("--input", cfg.input, "input .tour file (- for stdin)");

  auto* verify = app.add_subcommand("verify", "check an extremal claim; exit 1 if violated");
  verify->require_subcommand(1);
  auto* v_c5max = verify->add_subcommand("c5-max", "exhaustive maximum of c5 (n = 5 or 7)");
  v_c5max->add_option("--n", cfg.n)->check(CLI::IsMember({5, 7}))->default_val(7);
  auto* v_s5max = verify->add_subcommand("s5-max", "exhaustive maximum of s5 (n = 5 or 7)");
  v_s5max->add_option("--n", cfg.n)->check(CLI::IsMember({5, 7}))->default_val(7);
  auto* v_nine = verify->add_subcommand("regular-nine", "s5 and c5 extremes over the regular 9-tournaments");
  v_nine->add_option("--corpus", cfg.corpus, "order-9 corpus (enumerated when absent)");
  auto* v_balanced = verify->add_subcommand("balanced-minimum", "minimum of sum C(d_i, p) over degree sequences");
  v_balanced->add_option("--n", cfg.n)->required()->check(CLI::Range(1, kMaxOracleOrder));
  v_balanced->add_option("--p", cfg.p)->required()->check(CLI::Range(2, 64));
  auto* v_identity = verify->add_subcommand("cycle-identity", "c5 + 2 c4 identity on a regular tournament");
  v_identity->add_option("--input", cfg.input, "input .tour file (- for stdin)");

  auto* en = app.add_subcommand("enumerate", "isomorphism classes of regular tournaments");
  en->add_option("--n", cfg.n, "odd order");
  en->add_option("--constraint", cfg.constraint, "only 'regular'");
  en->add_option("--out", cfg.output, "write the corpus file");
  en->add_option("--verify", cfg.verify_corpus_path, "re-check an existing corpus file");
  en->add_flag("--long-run", cfg.long_run, "permit n = 11");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*count) return cmd_count(cfg, out);
    if (*cls) return cmd_classify(cfg, out);
    if (*en) return cmd_enumerate(cfg, out, err);
    for (auto* sub : verify->get_subcommands())
      if (*sub) return cmd_verify(sub->get_name(), cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalParity ? kExitViolated : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace tourney::cli
