#pragma once

// Command-line front end: `kkg <command> [options]`. See `kkg --help`.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kkg/cache.hpp"
#include "kkg/report.hpp"
#include "kkg/verify.hpp"

namespace kkg::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::string family = "GL";
  unsigned n = 2;
  std::string ring = "witt";
  u64 p = 0;
  unsigned f = 1;
  unsigned r = 1;
  std::string matrix;
  bool sampled = false;
  u64 trials = 10'000;
  u64 seed = 1;
  unsigned threads = 1;
  u64 cap = kEnumerationCap;
  u64 sylow_cap = kSylowCap;
  std::string cache_dir;
  std::string format = "json";
  bool no_timings = false;
  std::optional<u64> prime;  // kuelshammer: coefficient characteristic, defaults to p
  unsigned samples = 200;
  // verify
  std::string check = "all";
  u64 pmax = 23;
  std::vector<std::string> groups;
  unsigned instances = 100;
  u64 ring_max = 10'000;
  std::size_t oracle_cap = kOracleCap;
  bool family_set = false, n_set = false, p_set = false, f_set = false, r_set = false;
};

/// Raised for inconsistent parameters after parsing; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class Stopwatch {
 public:
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  json to_json(bool disabled) const { return disabled ? json::object() : laps_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  json laps_ = json::object();
};

inline Family parse_family(const std::string& s) {
  if (s == "GL" || s == "gl") return Family::GL;
  if (s == "SL" || s == "sl") return Family::SL;
  throw UsageError("--group must be GL or SL");
}

inline RingKind parse_kind(const std::string& s) {
  if (s == "witt") return RingKind::Witt;
  if (s == "poly") return RingKind::Poly;
  throw UsageError("--ring must be witt or poly");
}

inline void require_prime(u64 p) {
  if (p == 0) throw UsageError("--p is required");
  if (!is_prime(p)) throw UsageError("--p must be prime (got " + std::to_string(p) + ")");
}

inline GroupDesc group_from(const RunConfig& c, RingKind kind) {
  require_prime(c.p);
  if (c.n < 1) throw UsageError("--n must be >= 1");
  if (c.r < 1) throw UsageError("--r must be >= 1");
  if (c.f < 1) throw UsageError("--f must be >= 1");
  return make_group(parse_family(c.family), c.n, kind, c.p, c.f, c.r);
}

inline json group_params(const RunConfig& c, bool with_ring = true) {
  json j{{"group", c.family}, {"n", c.n}};
  if (with_ring) j["ring"] = c.ring;
  j["p"] = c.p;
  j["f"] = c.f;
  j["r"] = c.r;
  return j;
}

inline ExponentStrategy strategy_from(const RunConfig& c) {
  ExponentStrategy s = c.sampled ? ExponentStrategy::sampled(c.trials, c.seed) : ExponentStrategy::exhaustive(c.threads);
  s.cap = c.sylow_cap;
  return s;
}

inline std::filesystem::path cache_dir_from(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  return resolve_cache_dir({});
}

/// Plain indented "key: value" rendering of a JSON value.
inline void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const json& v = it.value();
    const bool scalar_array =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
    if (v.is_structured() && !scalar_array && !v.empty()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 1);
    } else if (v.is_string()) {
      out << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << v.dump() << "\n";
    }
  }
}

inline void emit(const json& doc, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json: out << doc.dump(2) << "\n"; break;
    case Format::Csv: out << to_csv(doc); break;
    case Format::Text: render_text(doc, out, 0); break;
  }
}

// ---- commands -----------------------------------------------------------

struct Outcome {
  json parameters;
  json results;
  bool check_failed = false;
};

inline Outcome cmd_ring_selftest(const RunConfig& c, Stopwatch& sw) {
  require_prime(c.p);
  const RingPtr R = Ring::make(parse_kind(c.ring), c.p, c.f, c.r);
  const auto rep = ring_selftest(*R, c.samples, c.seed);
  sw.lap("selftest_ms");
  return {json{{"ring", c.ring}, {"p", c.p}, {"f", c.f}, {"r", c.r}, {"samples", c.samples}, {"seed", c.seed}},
          selftest_json(rep), !rep.passed()};
}

inline Outcome cmd_order(const RunConfig& c, Stopwatch& sw) {
  if (c.matrix.empty()) throw UsageError("order needs --matrix");
  const GroupDesc g = group_from(c, parse_kind(c.ring));
  const Mat m = parse_matrix(g.ring, c.matrix);
  if (!is_member(m, g)) throw UsageError("matrix is not in " + g.name());
  const u64 order = element_order(m, g);
  sw.lap("order_ms");
  json params = group_params(c);
  params["matrix"] = c.matrix;
  return {params,
          json{{"group", group_json(g)},
               {"matrix", render_matrix(m)},
               {"det", g.ring->render(mat_det(m))},
               {"order", order},
               {"p_part", p_part(order, g.p())}}};
}

inline Outcome cmd_exponent(const RunConfig& c, Stopwatch& sw) {
  const GroupDesc g = group_from(c, parse_kind(c.ring));
  const auto res = p_exponent(g, strategy_from(c));
  sw.lap("exponent_ms");
  json params = group_params(c);
  params["method"] = c.sampled ? "sampled" : "exhaustive";
  if (c.sampled) params["trials"] = c.trials;
  params["seed"] = c.seed;
  json results{{"group", group_json(g)}, {"p_exponent", exponent_json(res)}};
  if (auto sz = SylowStream::expected_size(g)) results["sylow_order"] = *sz;
  return {params, results};
}

inline CachedGroup load_group(const RunConfig& c, const GroupDesc& g, std::ostream& err) {
  return load_or_compute(g, cache_dir_from(c), c.cap, &err);
}

inline Outcome cmd_classes(const RunConfig& c, Stopwatch& sw, std::ostream& err) {
  const GroupDesc g = group_from(c, parse_kind(c.ring));
  const CachedGroup cg = load_group(c, g, err);
  sw.lap("classes_ms");
  const auto& part = cg.classes;
  json classes = json::array();
  for (std::size_t i = 0; i < part.count(); ++i) {
    classes.push_back({{"representative", render_matrix(cg.table.element(part.reps[i]))},
                       {"size", part.sizes[i]},
                       {"order", element_order(cg.table.element(part.reps[i]), g)}});
  }
  json results{{"group", group_json(g)}, {"order", cg.table.size()}, {"num_classes", part.count()},
               {"classes", std::move(classes)}};
  json params = group_params(c);
  params["cap"] = c.cap;
  return {params, results};
}

inline GroupSummary summarize(const RunConfig& c, const GroupDesc& g, std::ostream& err, Stopwatch& sw) {
  const CachedGroup cg = load_group(c, g, err);
  sw.lap(g.name() + ".classes_ms");
  GroupSummary s = summarize_group(cg.table, cg.classes, strategy_from(c));
  sw.lap(g.name() + ".invariants_ms");
  return s;
}

inline Outcome cmd_kuelshammer(const RunConfig& c, Stopwatch& sw, std::ostream& err) {
  const GroupDesc g = group_from(c, parse_kind(c.ring));
  const CachedGroup cg = load_group(c, g, err);
  sw.lap("classes_ms");
  const u64 prime = c.prime.value_or(g.p());
  require_prime(prime);
  json params = group_params(c);
  params["prime"] = prime;
  if (prime == g.p()) {
    const GroupSummary s = summarize_group(cg.table, cg.classes, strategy_from(c));
    sw.lap("invariants_ms");
    json results = summary_json(s);
    results["profile_matches_sylow"] = s.profile_exponent == s.sylow.value;
    return {params, results, s.profile_exponent != s.sylow.value && s.sylow.method == ExponentMethod::Exhaustive};
  }
  const auto prof = kuelshammer_profile(cg.table, cg.classes, prime);
  sw.lap("invariants_ms");
  json results{{"group", group_json(g)}, {"order", cg.table.size()}, {"num_classes", cg.classes.count()}};
  results.update(profile_json(prof));
  results["p_power_stab"] = p_exponent_from_profile(prof);
  return {params, results};
}

inline Outcome cmd_compare(const RunConfig& c, Stopwatch& sw, std::ostream& err) {
  const GroupDesc witt = group_from(c, RingKind::Witt);
  const GroupDesc poly = group_from(c, RingKind::Poly);
  GroupSummary a = summarize(c, witt, err, sw);
  GroupSummary b = summarize(c, poly, err, sw);
  // Sampled estimates alongside the exhaustive values.
  const auto sa = p_exponent(witt, ExponentStrategy::sampled(c.trials, c.seed));
  const auto sb = p_exponent(poly, ExponentStrategy::sampled(c.trials, c.seed));
  sw.lap("sampled_ms");
  const ComparisonReport rep = compare_summaries(std::move(a), std::move(b));
  json results = comparison_json(rep);
  results["a"]["p_exponent_sampled"] = exponent_json(sa);
  results["b"]["p_exponent_sampled"] = exponent_json(sb);
  json params = group_params(c, false);
  params["seed"] = c.seed;
  params["trials"] = c.trials;
  return {params, results};
}

inline Outcome cmd_verify(const RunConfig& c, Stopwatch& sw) {
  VerifyConfig v;
  v.pmax = c.pmax;
  if (c.family_set) v.family = parse_family(c.family);
  if (c.n_set) v.n = c.n;
  if (c.p_set) {
    require_prime(c.p);
    v.p = c.p;
  }
  if (c.f_set) v.f = c.f;
  if (c.r_set) v.r = c.r;
  v.groups = c.groups;
  v.seed = c.seed;
  v.instances = c.instances;
  v.ring_max = c.ring_max;
  v.enum_cap = c.cap;
  v.sylow_cap = c.sylow_cap;
  v.oracle_cap = c.oracle_cap;
  v.threads = c.threads;
  v.cache_dir = cache_dir_from(c);
  const VerifyResult res = verify_suite(c.check, v);
  sw.lap("verify_ms");
  json params{{"check", c.check}, {"seed", c.seed}, {"pmax", c.pmax}, {"instances", c.instances}};
  if (c.family_set) params["group"] = c.family;
  if (c.n_set) params["n"] = c.n;
  if (c.p_set) params["p"] = c.p;
  if (c.f_set) params["f"] = c.f;
  if (c.r_set) params["r"] = c.r;
  if (!c.groups.empty()) params["groups"] = c.groups;
  return {params, verify_json(res), res.failed()};
}

inline void add_group_options(CLI::App* sub, RunConfig& c, bool with_ring = true) {
  sub->add_option("--group", c.family, "GL or SL")->check(CLI::IsMember({"GL", "SL", "gl", "sl"}));
  sub->add_option("--n", c.n, "matrix size")->check(CLI::PositiveNumber);
  if (with_ring) sub->add_option("--ring", c.ring, "witt or poly")->check(CLI::IsMember({"witt", "poly"}));
  sub->add_option("--p", c.p, "prime")->required();
  sub->add_option("--f", c.f, "residue field degree (q = p^f)")->check(CLI::PositiveNumber);
  sub->add_option("--r", c.r, "length of the truncated ring")->required()->check(CLI::PositiveNumber);
}

inline void add_exponent_options(CLI::App* sub, RunConfig& c) {
  sub->add_flag("--sampled", c.sampled, "sample the Sylow stream instead of scanning it");
  sub->add_option("--trials", c.trials, "samples for --sampled");
  sub->add_option("--threads", c.threads, "worker threads for exhaustive scans")->check(CLI::PositiveNumber);
  sub->add_option("--sylow-cap", c.sylow_cap, "largest Sylow stream scanned exhaustively");
}

inline void add_enum_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--cap", c.cap, "largest group enumerated");
  sub->add_option("--cache-dir", c.cache_dir, "class-partition cache directory (also $KKG_CACHE_DIR)");
}

}  // namespace detail

/// Parses argv, runs the command, writes the report to `out` and diagnostics
/// to `err`. Returns 0 on success, 1 when a check fails or a computation
/// cannot complete, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"kkg: invariants of F_p[G(W_r(F_q))] and F_p[G(F_q[t]/t^r)] for G = GL_n, SL_n", "kkg"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", c.seed, "seed for every random choice");
  app.add_flag("--no-timings", c.no_timings, "omit timing values so output is byte-reproducible");
  app.fallthrough();

  auto* ring = app.add_subcommand("ring", "ring operations");
  ring->require_subcommand(1);
  auto* selftest = ring->add_subcommand("selftest", "check the ring axioms and structure maps");
  selftest->add_option("--ring", c.ring, "witt or poly")->required()->check(CLI::IsMember({"witt", "poly"}));
  selftest->add_option("--p", c.p, "prime")->required();
  selftest->add_option("--f", c.f, "residue field degree")->check(CLI::PositiveNumber);
  selftest->add_option("--r", c.r, "length")->required()->check(CLI::PositiveNumber);
  selftest->add_option("--samples", c.samples, "random triples for large rings");

  auto* order = app.add_subcommand("order", "order of one matrix");
  detail::add_group_options(order, c);
  order->add_option("--matrix", c.matrix, "rows separated by ';', entries by ',', e.g. \"1,1,0;t,1,1;t,0,1\"")
      ->required();

  auto* exponent = app.add_subcommand("exponent", "p-exponent via the Sylow subgroup");
  detail::add_group_options(exponent, c);
  detail::add_exponent_options(exponent, c);

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  detail::add_group_options(classes, c);
  detail::add_enum_options(classes, c);

  auto* kuel = app.add_subcommand("kuelshammer", "Kuelshammer ideal dimensions");
  detail::add_group_options(kuel, c);
  detail::add_enum_options(kuel, c);
  detail::add_exponent_options(kuel, c);
  kuel->add_option("--prime", c.prime, "characteristic of the coefficient field (default: p)");

  auto* compare = app.add_subcommand("compare", "compare the Witt and polynomial groups");
  detail::add_group_options(compare, c, false);
  detail::add_enum_options(compare, c);
  detail::add_exponent_options(compare, c);

  auto* verify = app.add_subcommand("verify", "run named checks");
  verify->add_option("check", c.check, "check name")->check(CLI::IsMember(verify_check_names()));
  verify->add_option("--pmax", c.pmax, "lemma-chu: largest prime");
  verify->add_option("--groups", c.groups, "oracle: comma-separated group names")->delimiter(',');
  verify->add_option("--instances", c.instances, "lemma-power, lemma-b: random instances per ring");
  verify->add_option("--ring-max", c.ring_max, "ring: largest ring size");
  verify->add_option("--oracle-cap", c.oracle_cap, "oracle: largest group");
  auto* o_group = verify->add_option("--group", c.family, "GL or SL")->check(CLI::IsMember({"GL", "SL", "gl", "sl"}));
  auto* o_n = verify->add_option("--n", c.n, "matrix size")->check(CLI::PositiveNumber);
  auto* o_p = verify->add_option("--p", c.p, "prime");
  auto* o_f = verify->add_option("--f", c.f, "residue field degree")->check(CLI::PositiveNumber);
  auto* o_r = verify->add_option("--r", c.r, "length")->check(CLI::PositiveNumber);
  verify->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--sylow-cap", c.sylow_cap, "largest Sylow stream scanned");
  detail::add_enum_options(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << "\n" << app.help();
    return 2;
  }
  c.family_set = o_group->count() > 0;
  c.n_set = o_n->count() > 0;
  c.p_set = o_p->count() > 0;
  c.f_set = o_f->count() > 0;
  c.r_set = o_r->count() > 0;

  const Format fmt = c.format == "csv" ? Format::Csv : c.format == "text" ? Format::Text : Format::Json;
  detail::Stopwatch sw;
  detail::Outcome res;
  try {
    if (*selftest) {
      c.command = "ring selftest";
      res = detail::cmd_ring_selftest(c, sw);
    } else if (*order) {
      c.command = "order";
      res = detail::cmd_order(c, sw);
    } else if (*exponent) {
      c.command = "exponent";
      res = detail::cmd_exponent(c, sw);
    } else if (*classes) {
      c.command = "classes";
      res = detail::cmd_classes(c, sw, err);
    } else if (*kuel) {
      c.command = "kuelshammer";
      res = detail::cmd_kuelshammer(c, sw, err);
    } else if (*compare) {
      c.command = "compare";
      res = detail::cmd_compare(c, sw, err);
    } else if (*verify) {
      c.command = "verify";
      res = detail::cmd_verify(c, sw);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap / --sylow-cap or use --sampled)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  detail::emit(envelope(c.command, res.parameters, res.results, sw.to_json(c.no_timings)), fmt, out);
  return res.check_failed ? 1 : 0;
}

}  // namespace kkg::cli
