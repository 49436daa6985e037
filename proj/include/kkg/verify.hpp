#pragma once

// Named verification checks. Each check reports pass / fail / skipped-cap with
// per-case records, and the set of library operations it actually invoked.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kkg/cache.hpp"
#include "kkg/identities.hpp"
#include "kkg/oracle.hpp"
#include "kkg/report.hpp"
#include "kkg/ring_selftest.hpp"

namespace kkg {

enum class CheckStatus { Pass, Fail, SkippedCap };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedCap: return "skipped-cap";
  }
  return "?";
}

/// Operations that every `verify all` run must reach.
inline const std::vector<std::string>& coverage_manifest() {
  static const std::vector<std::string> ops = {
      "uniformizer",       "valuation",         "is_unit",           "is_member",
      "element_order",     "unitriangular_power", "chu_sum",         "b_matrix",
      "sylow_stream",      "p_exponent",        "generators",        "enumerate_group",
      "conjugacy_classes", "class_power_map",   "kuelshammer_profile", "p_exponent_from_profile",
      "compare_groups",    "algebra_table",     "commutator_space",  "kuelshammer_space",
      "perp",              "oracle_profile",    "ring_selftest",     "teichmuller",
      "witt_digits",       "reduce"};
  return ops;
}

struct VerifyConfig {
  u64 pmax = 23;
  // Overrides for the single-group checks; unset means the built-in cases.
  std::optional<Family> family;
  std::optional<unsigned> n;
  std::optional<u64> p;
  std::optional<unsigned> f;
  std::optional<unsigned> r;
  std::vector<std::string> groups;  // oracle group names
  u64 seed = 1;
  unsigned instances = 100;
  u64 ring_max = 10'000;
  u64 enum_cap = kEnumerationCap;
  u64 sylow_cap = kSylowCap;
  std::size_t oracle_cap = kOracleCap;
  unsigned threads = 1;
  std::filesystem::path cache_dir;  // empty: no cache
};

struct CheckOutcome {
  explicit CheckOutcome(std::string n) : name(std::move(n)) {}

  std::string name;
  CheckStatus status = CheckStatus::Pass;
  json records = json::array();
  std::set<std::string> exercised;

  void use(const std::string& op) { exercised.insert(op); }
  /// Appends a record and folds its `passed` flag into the status.
  void record(json rec, bool passed) {
    rec["passed"] = passed;
    records.push_back(std::move(rec));
    if (!passed) status = CheckStatus::Fail;
  }
  void skip(json rec) {
    rec["status"] = to_string(CheckStatus::SkippedCap);
    records.push_back(std::move(rec));
    if (status == CheckStatus::Pass) status = CheckStatus::SkippedCap;
  }
};

namespace detail {

inline std::optional<ExponentResult> exhaustive_exponent(const GroupDesc& g, const VerifyConfig& cfg, CheckOutcome& out) {
  out.use("sylow_stream");
  out.use("p_exponent");
  const auto size = SylowStream::expected_size(g);
  if (!size || *size > cfg.sylow_cap) {
    out.skip({{"group", g.name()}, {"reason", "Sylow stream exceeds cap"}, {"cap", cfg.sylow_cap}});
    return std::nullopt;
  }
  ExponentStrategy s = ExponentStrategy::exhaustive(cfg.threads);
  s.cap = cfg.sylow_cap;
  return p_exponent(g, s);
}

inline std::optional<CachedGroup> enumerate_checked(const GroupDesc& g, const VerifyConfig& cfg, CheckOutcome& out) {
  const auto order = group_order(g);
  if (!order || *order > cfg.enum_cap) {
    out.skip({{"group", g.name()}, {"reason", "group order exceeds enumeration cap"}, {"cap", cfg.enum_cap}});
    return std::nullopt;
  }
  out.use("generators");
  out.use("enumerate_group");
  out.use("conjugacy_classes");
  return load_or_compute(g, cfg.cache_dir, cfg.enum_cap);
}

inline std::vector<u64> primes_up_to(u64 pmax) {
  std::vector<u64> ps;
  for (u64 p = 2; p <= pmax; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

inline Mat remark_matrix() {
  RingPtr R = Ring::make(RingKind::Poly, 5, 1, 2);
  return parse_matrix(R, "1,1,0;t,1,1;t,0,1");
}

}  // namespace detail

inline CheckOutcome check_ring(const VerifyConfig& cfg) {
  CheckOutcome out{"ring"};
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    for (u64 p : detail::primes_up_to(cfg.ring_max)) {
      for (unsigned f = 1; f <= kMaxCoeffs; ++f) {
        for (unsigned r = 1; r * f <= 64; ++r) {
          const auto size = checked_pow(p, static_cast<u64>(r) * f);
          if (!size || *size > cfg.ring_max) break;
          if (kind == RingKind::Poly && r * f > kMaxCoeffs) break;
          RingPtr R = Ring::make(kind, p, f, r);
          out.use("ring_selftest");
          out.use("uniformizer");
          out.use("valuation");
          out.use("is_unit");
          out.use("teichmuller");
          out.use("witt_digits");
          out.use("reduce");
          const auto rep = ring_selftest(*R, 200, cfg.seed);
          json rec{{"kind", to_string(kind)}, {"p", p}, {"f", f}, {"r", r},
                   {"characteristic", rep.characteristic}, {"cardinality", rep.cardinality}};
          for (const auto& c : rep.checks)
            if (!c.passed) rec["failed_checks"].push_back({{"name", c.name}, {"witness", c.witness}});
          // Characteristic is p^r for the Witt kind and p for the polynomial kind.
          const u64 want_char = kind == RingKind::Witt ? pow_or_throw(p, r) : p;
          rec["expected_characteristic"] = want_char;
          out.record(std::move(rec), rep.passed() && rep.characteristic == want_char);
        }
      }
    }
  }
  return out;
}

inline CheckOutcome check_lemma_chu(const VerifyConfig& cfg) {
  CheckOutcome out{"lemma-chu"};
  for (u64 p : detail::primes_up_to(cfg.pmax)) {
    const u64 n = p / 2;  // largest n with p >= 2n; smaller n are covered by k, l < n
    u64 pairs = 0;
    json bad = json::array();
    for (u64 k = 0; k < n; ++k) {
      for (u64 l = 0; l < n; ++l) {
        out.use("chu_sum");
        ++pairs;
        if (chu_sum(p, k, l) != 0) bad.push_back({{"k", k}, {"l", l}, {"residue", chu_sum(p, k, l)}});
      }
    }
    const bool ok = bad.empty();
    json rec{{"p", p}, {"n", n}, {"pairs", pairs}};
    if (!ok) rec["witnesses"] = std::move(bad);
    out.record(std::move(rec), ok);
  }
  return out;
}

namespace detail {

/// Seeded (A, X) pairs: A upper unitriangular, X arbitrary, n = 2, p = 5.
template <typename Fn>
void for_each_instance(const VerifyConfig& cfg, Fn&& fn) {
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    RingPtr R = Ring::make(kind, 5, 1, 2);
    std::mt19937_64 rng(cfg.seed);
    for (unsigned i = 0; i < cfg.instances; ++i) {
      Mat A = random_unitriangular(R, 2, rng);
      Mat X = random_matrix(R, 2, rng);
      fn(R, A, X, i, rng);
    }
  }
}

}  // namespace detail

inline CheckOutcome check_lemma_power(const VerifyConfig& cfg) {
  CheckOutcome out{"lemma-power"};
  detail::for_each_instance(cfg, [&](const RingPtr& R, const Mat& A, const Mat& X, unsigned i, std::mt19937_64& rng) {
    const Mat g = mat_mul(A, mat_add(Mat::identity(R, 2), mat_scale(R->uniformizer(), X)));
    const u64 m_random = rng() % 60;
    bool ok = true;
    json fails = json::array();
    for (u64 m : {u64{0}, u64{1}, R->p(), m_random}) {
      out.use("unitriangular_power");
      if (mat_pow(g, m) != unitriangular_power(A, X, m)) {
        ok = false;
        fails.push_back(m);
      }
    }
    json rec{{"ring", GroupDesc{Family::GL, 2, R}.ring_name()}, {"instance", i}};
    if (!ok) {
      rec["A"] = render_matrix(A);
      rec["X"] = render_matrix(X);
      rec["failing_m"] = std::move(fails);
    }
    out.record(std::move(rec), ok);
  });
  return out;
}

inline CheckOutcome check_lemma_b(const VerifyConfig& cfg) {
  CheckOutcome out{"lemma-b"};
  detail::for_each_instance(cfg, [&](const RingPtr& R, const Mat& A, const Mat& X, unsigned i, std::mt19937_64&) {
    out.use("b_matrix");
    out.use("reduce");
    const Mat B = b_matrix(A, X, R->p());
    bool ok = true;
    const Mat Bbar = mat_reduce(B, 1);
    for (const auto& e : Bbar.entries()) ok = ok && Bbar.ring().is_zero(e);
    // Consequence used afterwards: g^p = A^p.
    const Mat g = mat_mul(A, mat_add(Mat::identity(R, 2), mat_scale(R->uniformizer(), X)));
    const bool gp = mat_pow(g, R->p()) == mat_pow(A, R->p());
    json rec{{"ring", GroupDesc{Family::GL, 2, R}.ring_name()}, {"instance", i}, {"g_p_equals_A_p", gp}};
    if (!ok || !gp) {
      rec["A"] = render_matrix(A);
      rec["X"] = render_matrix(X);
      rec["B"] = render_matrix(B);
    }
    out.record(std::move(rec), ok && gp);
  });
  // Below the hypothesis (n = 3, p = 5 < 2n) B mod pi can be nonzero: the
  // coefficient of J^2 X J^2 is C(6, 5) = 6, a unit mod 5.
  RingPtr R = Ring::make(RingKind::Poly, 5, 1, 2);
  std::mt19937_64 rng(cfg.seed);
  json rec{{"ring", "F_5[t]/t^2"}, {"n", 3}, {"p", 5}, {"expect", "B nonzero mod pi for some (A, X)"}};
  bool found = false;
  for (unsigned trial = 0; trial < 1000 && !found; ++trial) {
    Mat A = random_unitriangular(R, 3, rng);
    Mat X = random_matrix(R, 3, rng);
    const Mat Bbar = mat_reduce(b_matrix(A, X, 5), 1);
    for (const auto& e : Bbar.entries()) found = found || !Bbar.ring().is_zero(e);
    if (found) {
      rec["A"] = render_matrix(A);
      rec["X"] = render_matrix(X);
      rec["B_mod_pi"] = render_matrix(Bbar);
      rec["trials"] = trial + 1;
    }
  }
  out.record(std::move(rec), found);
  return out;
}

inline CheckOutcome check_lemma_bound(const VerifyConfig& cfg) {
  CheckOutcome out{"lemma-bound"};
  const std::vector<u64> ps = cfg.p ? std::vector<u64>{*cfg.p} : std::vector<u64>{2, 3};
  const std::vector<unsigned> rs = cfg.r ? std::vector<unsigned>{*cfg.r} : std::vector<unsigned>{2, 3};
  const Family fam = cfg.family.value_or(Family::GL);
  const unsigned n = cfg.n.value_or(2);
  const unsigned f = cfg.f.value_or(1);
  for (auto kind : {RingKind::Poly, RingKind::Witt}) {
    for (u64 p : ps) {
      for (unsigned r : rs) {
        if (r < 2) throw std::invalid_argument("lemma-bound needs r >= 2");
        const GroupDesc hi = make_group(fam, n, kind, p, f, r);
        const GroupDesc lo = make_group(fam, n, kind, p, f, r - 1);
        const auto e_hi = detail::exhaustive_exponent(hi, cfg, out);
        const auto e_lo = detail::exhaustive_exponent(lo, cfg, out);
        if (!e_hi || !e_lo) continue;
        const bool ok = e_hi->value <= p * e_lo->value;
        out.record({{"group", hi.name()},
                    {"exp_r", e_hi->value},
                    {"exp_r_minus_1", e_lo->value},
                    {"bound", p * e_lo->value},
                    {"witness", render_matrix(e_hi->lower_witness)}},
                   ok);
      }
    }
  }
  return out;
}

namespace detail {

inline void pexp_case(const GroupDesc& witt, const GroupDesc& poly, const VerifyConfig& cfg, CheckOutcome& out) {
  const u64 p = witt.p();
  const unsigned r = witt.r();
  if (p < witt.n) throw std::invalid_argument("prop-pexp needs p >= n");
  const u64 pr = pow_or_throw(p, r);
  const u64 poly_bound = pow_or_throw(p, ceil_log(r, p) + 1);
  const auto ew = exhaustive_exponent(witt, cfg, out);
  const auto ep = exhaustive_exponent(poly, cfg, out);
  json rec{{"witt_group", witt.name()}, {"poly_group", poly.name()}, {"p_r", pr}, {"poly_bound", poly_bound}};
  bool ok = true;
  if (witt.n >= 2) {
    // I + E_12 has order p^r over the Witt ring.
    const Mat e12 = Mat::elementary(witt.ring, witt.n, 0, 1, witt.ring->one());
    out.use("is_member");
    out.use("element_order");
    const u64 order = element_order(e12, witt);
    rec["I_plus_E12_order"] = order;
    ok = is_member(e12, witt) && order == pr;
  }
  if (ew) {
    rec["witt_exponent"] = ew->value;
    rec["witt_witness"] = render_matrix(ew->lower_witness);
    ok = ok && ew->value == pr;
  }
  if (ep) {
    rec["poly_exponent"] = ep->value;
    rec["poly_witness"] = render_matrix(ep->lower_witness);
    ok = ok && ep->value <= poly_bound;
  }
  const bool gap_regime = (r == 3 && p >= 3) || (r >= 4 && p >= 2);
  rec["gap_regime"] = gap_regime;
  if (gap_regime && ew && ep) {
    rec["strict_gap"] = ew->value > ep->value;
    ok = ok && ew->value > ep->value;
  }
  out.record(std::move(rec), ok);
}

}  // namespace detail

inline CheckOutcome check_prop_pexp(const VerifyConfig& cfg) {
  CheckOutcome out{"prop-pexp"};
  struct Case { Family fam; unsigned n; u64 p; unsigned f; unsigned r; };
  std::vector<Case> cases;
  if (cfg.p || cfg.r || cfg.n || cfg.family || cfg.f) {
    cases.push_back({cfg.family.value_or(Family::GL), cfg.n.value_or(2), cfg.p.value_or(3), cfg.f.value_or(1),
                     cfg.r.value_or(3)});
  } else {
    cases = {{Family::GL, 2, 3, 1, 3}, {Family::SL, 2, 2, 1, 4}, {Family::GL, 2, 2, 1, 3}};
  }
  for (const auto& c : cases) {
    detail::pexp_case(make_group(c.fam, c.n, RingKind::Witt, c.p, c.f, c.r),
                      make_group(c.fam, c.n, RingKind::Poly, c.p, c.f, c.r), cfg, out);
  }
  return out;
}

inline CheckOutcome check_prop_gap(const VerifyConfig& cfg) {
  CheckOutcome out{"prop-gap"};
  const Family fam = cfg.family.value_or(Family::GL);
  const unsigned n = cfg.n.value_or(2);
  const u64 p = cfg.p.value_or(5);
  const unsigned f = cfg.f.value_or(1);
  if (p < 2ull * n) throw std::invalid_argument("prop-gap needs p >= 2n");
  const auto ew = detail::exhaustive_exponent(make_group(fam, n, RingKind::Witt, p, f, 2), cfg, out);
  const auto ep = detail::exhaustive_exponent(make_group(fam, n, RingKind::Poly, p, f, 2), cfg, out);
  if (ew && ep) {
    out.record({{"n", n},
                {"p", p},
                {"f", f},
                {"witt_exponent", ew->value},
                {"poly_exponent", ep->value},
                {"witt_examined", ew->examined},
                {"poly_examined", ep->examined},
                {"witt_witness", render_matrix(ew->lower_witness)}},
               ew->value == p * p && ep->value == p);
  }
  return out;
}

inline CheckOutcome check_remark_order(const VerifyConfig&) {
  CheckOutcome out{"remark-order"};
  const Mat m = detail::remark_matrix();
  const GroupDesc g{Family::GL, 3, m.ring_ptr()};
  out.use("is_member");
  out.use("element_order");
  const bool member = is_member(m, g);
  const u64 order = element_order(m, g);
  out.record({{"matrix", render_matrix(m)}, {"ring", g.ring_name()}, {"det", m.ring().render(mat_det(m))},
              {"member", member}, {"order", order}},
             member && order == 25);
  return out;
}

inline CheckOutcome check_prop_kuel(const VerifyConfig& cfg) {
  CheckOutcome out{"prop-kuel"};
  const Family fam = cfg.family.value_or(Family::GL);
  const unsigned n = cfg.n.value_or(2);
  const u64 p = cfg.p.value_or(3);
  const unsigned f = cfg.f.value_or(1);
  const unsigned r = cfg.r.value_or(3);
  std::vector<GroupSummary> sums;
  for (auto kind : {RingKind::Witt, RingKind::Poly}) {
    const GroupDesc g = make_group(fam, n, kind, p, f, r);
    auto cg = detail::enumerate_checked(g, cfg, out);
    if (!cg) continue;
    const auto ex = detail::exhaustive_exponent(g, cfg, out);
    if (!ex) continue;
    out.use("class_power_map");
    out.use("kuelshammer_profile");
    out.use("p_exponent_from_profile");
    GroupSummary s{g, cg->table.size(), cg->classes.count(), *ex, kuelshammer_profile(cg->table, cg->classes, p), 0};
    s.profile_exponent = p_exponent_from_profile(s.profile);
    json rec = summary_json(s);
    rec["profile_matches_sylow"] = s.profile_exponent == ex->value;
    out.record(std::move(rec), s.profile_exponent == ex->value);
    sums.push_back(std::move(s));
  }
  if (sums.size() == 2) {
    out.use("compare_groups");
    const auto rep = compare_summaries(sums[0], sums[1]);
    const bool expect_gap = theorem_regime(n, p, r).applies;
    json rec{{"verdict", to_string(rep.verdict)}, {"reasons", rep.reasons}, {"regime", regime_json(rep.regime)}};
    out.record(std::move(rec), !expect_gap || rep.verdict == Verdict::Distinguished);
  }
  return out;
}

namespace detail {

struct OracleGroup {
  std::string name;
  GroupDesc group;
  u64 p;
};

inline OracleGroup oracle_group(const std::string& name) {
  auto make = [&](Family fam, unsigned n, RingKind k, u64 p, unsigned r, u64 prime) {
    return OracleGroup{name, make_group(fam, n, k, p, 1, r), prime};
  };
  if (name == "C4") return make(Family::GL, 1, RingKind::Witt, 5, 1, 2);
  if (name == "S3") return make(Family::SL, 2, RingKind::Witt, 2, 1, 2);
  if (name == "S3p3") return make(Family::SL, 2, RingKind::Witt, 2, 1, 3);
  if (name == "SL2Z4") return make(Family::SL, 2, RingKind::Witt, 2, 2, 2);
  if (name == "SL2F2T2") return make(Family::SL, 2, RingKind::Poly, 2, 2, 2);
  if (name == "GL2F3") return make(Family::GL, 2, RingKind::Witt, 3, 1, 3);
  if (name == "GL2Z4") return make(Family::GL, 2, RingKind::Witt, 2, 2, 2);
  if (name == "GL2F2T2") return make(Family::GL, 2, RingKind::Poly, 2, 2, 2);
  if (name == "GL1Z27") return make(Family::GL, 1, RingKind::Witt, 3, 3, 3);
  if (name == "GL1F3T3") return make(Family::GL, 1, RingKind::Poly, 3, 3, 3);
  throw std::invalid_argument("unknown oracle group '" + name +
                              "' (known: C4, S3, S3p3, SL2Z4, SL2F2T2, GL2F3, GL2Z4, GL2F2T2, GL1Z27, GL1F3T3)");
}

}  // namespace detail

inline CheckOutcome check_oracle(const VerifyConfig& cfg) {
  CheckOutcome out{"oracle"};
  const std::vector<std::string> names =
      cfg.groups.empty() ? std::vector<std::string>{"C4", "S3", "S3p3", "SL2Z4", "SL2F2T2"} : cfg.groups;
  for (const auto& name : names) {
    const auto og = detail::oracle_group(name);
    const auto order = group_order(og.group);
    if (!order || *order > cfg.oracle_cap) {
      out.skip({{"group", name}, {"reason", "group order exceeds oracle cap"}, {"cap", cfg.oracle_cap}});
      continue;
    }
    auto cg = detail::enumerate_checked(og.group, cfg, out);
    if (!cg) continue;
    for (const char* op : {"algebra_table", "commutator_space", "kuelshammer_space", "perp", "oracle_profile",
                           "class_power_map", "kuelshammer_profile"})
      out.use(op);
    const AlgebraTable A = algebra_table(cg->table, og.p, cfg.oracle_cap);
    const OracleProfile prof = oracle_profile(A, cg->table, cg->classes);
    json rec{{"group", name},
             {"description", og.group.name()},
             {"p", og.p},
             {"order", A.dim},
             {"num_classes", prof.num_classes},
             {"commutator_dim", prof.commutator_dim},
             {"perp_dims", prof.perp_dims},
             {"class_count_dims", prof.class_count_dims},
             {"p_regular_classes", prof.p_regular_classes},
             {"table_ok", prof.table_ok},
             {"commutator_codim_ok", prof.commutator_codim_ok},
             {"space_chain_ok", prof.space_chain_ok},
             {"ideal_chain_ok", prof.ideal_chain_ok},
             {"nondegenerate_ok", prof.nondegenerate_ok},
             {"additivity_ok", prof.additivity_ok},
             {"terminal_ok", prof.terminal_ok}};
    if (prof.first_mismatch) rec["first_mismatch"] = *prof.first_mismatch;
    out.record(std::move(rec), prof.passed());
  }
  return out;
}

using CheckFn = std::function<CheckOutcome(const VerifyConfig&)>;

inline const std::vector<std::pair<std::string, CheckFn>>& verify_checks() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"ring", check_ring},
      {"lemma-chu", check_lemma_chu},
      {"lemma-power", check_lemma_power},
      {"lemma-b", check_lemma_b},
      {"lemma-bound", check_lemma_bound},
      {"prop-pexp", check_prop_pexp},
      {"prop-gap", check_prop_gap},
      {"remark-order", check_remark_order},
      {"prop-kuel", check_prop_kuel},
      {"oracle", check_oracle},
  };
  return checks;
}

inline std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : verify_checks()) names.push_back(name);
  names.push_back("all");
  return names;
}

struct VerifyResult {
  std::vector<CheckOutcome> checks;
  std::set<std::string> exercised;

  bool failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
  }
  /// No check failed and none was cut short by a cap.
  bool complete() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Pass; });
  }
};

/// Runs one named check, or every check for "all". Parameter overrides are
/// ignored by "all", which always uses the built-in cases.
inline VerifyResult verify_suite(const std::string& which, const VerifyConfig& cfg) {
  VerifyResult res;
  bool matched = false;
  for (const auto& [name, fn] : verify_checks()) {
    if (which != "all" && which != name) continue;
    matched = true;
    VerifyConfig c = cfg;
    if (which == "all") {
      c.family.reset();
      c.n.reset();
      c.p.reset();
      c.f.reset();
      c.r.reset();
      c.groups.clear();
    }
    res.checks.push_back(fn(c));
    res.exercised.insert(res.checks.back().exercised.begin(), res.checks.back().exercised.end());
  }
  if (!matched) throw std::invalid_argument("unknown verify check '" + which + "'");
  return res;
}

inline json verify_json(const VerifyResult& res) {
  json checks = json::array();
  for (const auto& c : res.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"records", c.records},
                      {"exercised", std::vector<std::string>(c.exercised.begin(), c.exercised.end())}});
  }
  return json{{"passed", !res.failed()},
              {"complete", res.complete()},
              {"checks", std::move(checks)},
              {"exercised", std::vector<std::string>(res.exercised.begin(), res.exercised.end())}};
}

}  // namespace kkg
