#include "onerel/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "onerel/property_suites.hpp"

namespace onerel {

namespace {

constexpr int kMagnusWeight = 6;
constexpr const char* kHilbertLabel = "imported from cited literature, validated by PBW cross-check";

std::string num(const Integer& z) { return z.get_str(); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

Json integers(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(num(x));
  return a;
}

Json lie_json(const LieElement& x) {
  Json coords = Json::array();
  for (const auto& [w, c] : x.coords()) {
    std::string word;
    for (std::size_t i = 0; i < w.size(); ++i) word += (i ? " " : "") + x.scheme().name(w[i]);
    coords.push_back(Json{{"word", word}, {"coeff", num(c)}});
  }
  return Json{{"text", x.str()}, {"degree", num(x.degree())}, {"coords", coords}};
}

std::string series_text(const WeightScheme& s, std::optional<int> d) {
  std::string t = "1/(1 - " + (s.m == 1 ? std::string("t") : std::to_string(s.m) + "t");
  if (s.n > 0) t += " - " + (s.n == 1 ? std::string() : std::to_string(s.n)) + (s.e == 1 ? "t" : "t^" + std::to_string(s.e));
  if (d) t += " + " + (*d == 1 ? std::string("t") : "t^" + std::to_string(*d));
  return t + ")";
}

class PhaseTimer {
 public:
  void start() { t0_ = std::chrono::steady_clock::now(); }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

const char* check_name(Check c) {
  switch (c) {
    case Check::Gate: return "gate";
    case Check::Theorem3: return "theorem3";
    case Check::Hilbert: return "hilbert";
    case Check::ModP: return "modp";
    case Check::Lemma2: return "lemma2";
    case Check::MagnusE1: return "magnus-e1";
  }
  return "?";
}

Json skipped(const std::string& reason) { return Json{{"status", "skipped"}, {"reason", reason}}; }

}  // namespace

std::set<Check> parse_checks(const std::vector<std::string>& names) {
  std::set<Check> out;
  for (const auto& n : names) {
    if (n == "all")
      out.insert({Check::Gate, Check::Theorem3, Check::Hilbert, Check::ModP, Check::Lemma2, Check::MagnusE1});
    else if (n == "gate")
      out.insert(Check::Gate);
    else if (n == "theorem3")
      out.insert(Check::Theorem3);
    else if (n == "hilbert")
      out.insert(Check::Hilbert);
    else if (n == "modp")
      out.insert(Check::ModP);
    else if (n == "lemma2")
      out.insert(Check::Lemma2);
    else if (n == "magnus-e1")
      out.insert(Check::MagnusE1);
    else
      throw std::invalid_argument("unknown check '" + n + "'");
  }
  return out;
}

void RunConfig::validate() const {
  if (max_degree && *max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  if (e && *e < 1) throw std::invalid_argument("e must be >= 1");
  for (auto p : primes)
    if (!is_prime(p)) throw std::invalid_argument("prime list contains " + std::to_string(p) + ", which is not prime");
  if (samples < 0) throw std::invalid_argument("sample count must be >= 0");
  if (max_word_len < 0) throw std::invalid_argument("max word length must be >= 0");
  if (gate_cutoff < 1) throw std::invalid_argument("gate cutoff must be >= 1");
}

RunReport run_report(const RunConfig& config, const Presentation& input) {
  config.validate();
  Presentation pres = input;
  if (config.e) pres.e = config.e;
  auto selected = [&](Check c) { return config.checks.count(c) > 0; };

  RunReport out;
  Json& j = out.json;
  Json timings = Json::object();
  PhaseTimer timer;
  bool check_failed = false, budget_hit = false;

  j["presentation"] = Json{{"text", format_presentation(pres)},
                           {"m", num(pres.m)},
                           {"n", num(pres.n)},
                           {"u", pres.u.str()},
                           {"v", pres.v.str()},
                           {"e", pres.e ? Json(num(*pres.e)) : Json(nullptr)}};

  // The gate always runs: every later phase consumes d, rho and e.
  const std::optional<int> requested_n = config.max_degree ? config.max_degree : pres.max_degree;
  const int gate_cutoff = requested_n.value_or(config.gate_cutoff);
  timer.start();
  const auto gate = check_theorem1_hypotheses(pres, gate_cutoff);
  timings["gate"] = timer.seconds();
  const int N = requested_n.value_or(gate.d ? *gate.d + 6 : gate_cutoff);
  {
    Json g{{"outcome", to_string(gate.outcome)}, {"accepted", gate.accepted()}, {"cutoff", num(gate_cutoff)}};
    g["d"] = gate.d ? Json(num(*gate.d)) : Json(nullptr);
    g["rho"] = gate.rho ? lie_json(*gate.rho) : Json(nullptr);
    g["content"] = gate.rho ? Json(num(gate.content)) : Json(nullptr);
    g["chosen_e"] = gate.chosen_e ? Json(num(*gate.chosen_e)) : Json(nullptr);
    g["failures"] = gate.failures;
    if (gate.outcome == GateOutcome::Inconclusive)
      g["note"] = "degree of u exceeds cutoff " + num(gate_cutoff) + "; inconclusive at this cutoff";
    j["gate"] = std::move(g);
  }
  // Fixed key order; unselected checks keep a placeholder.
  for (const char* key : {"torsion", "hilbert", "modp", "lemma2", "magnus_e1"})
    j[key] = Json{{"status", "not selected"}};

  const bool downstream = gate.accepted() || config.force_downstream;
  const std::string hypotheses = gate.accepted() ? "hypotheses met" : "hypotheses not met";
  const std::string blocked = "gate " + to_string(gate.outcome);
  const WeightScheme scheme(pres.m, pres.n, gate.chosen_e.value_or(pres.e.value_or(1)));

  // Ideal components are shared by theorem3, hilbert and modp.
  std::optional<std::vector<IdealComponent>> components;
  std::optional<TorsionReport> torsion;
  const bool need_quotient = selected(Check::Theorem3) || selected(Check::Hilbert) || selected(Check::ModP);
  if (need_quotient && downstream && gate.rho && !gate.rho->is_zero()) {
    timer.start();
    components = ideal_components(*gate.rho, N, config.budget);
    torsion = torsion_free_certificate(*gate.rho, N, *components);
    timings["theorem3"] = timer.seconds();
    if (!torsion->complete) budget_hit = true;
    if (!config.matrix_dir.empty()) {
      std::filesystem::create_directories(config.matrix_dir);
      for (const auto& c : *components) {
        if (c.budget_exceeded) continue;
        std::ofstream f(std::filesystem::path(config.matrix_dir) / ("ideal_degree_" + std::to_string(c.degree) + ".txt"));
        f << format_dense(c.matrix);
      }
    }
  }
  auto quotient_unavailable = [&]() {
    if (!downstream) return skipped(blocked);
    return skipped("no relator form available at cutoff " + num(gate_cutoff));
  };

  if (selected(Check::Theorem3)) {
    if (!torsion) {
      j["torsion"] = quotient_unavailable();
    } else {
      Json t{{"status", hypotheses},
             {"cutoff", num(N)},
             {"relator_degree", num(torsion->relator_degree)},
             {"content", num(torsion->content)},
             {"complete", torsion->complete},
             {"torsion_free", torsion->torsion_free},
             {"verdict", torsion->certified() ? "torsion-free up to degree " + num(N)
                                              : (torsion->torsion_free ? "incomplete" : "torsion found")}};
      t["first_torsion_degree"] = torsion->first_torsion_degree ? Json(num(*torsion->first_torsion_degree)) : Json(nullptr);
      t["notes"] = torsion->notes;
      Json degrees = Json::array();
      for (const auto& d : torsion->degrees)
        degrees.push_back(Json{{"degree", num(d.degree)},
                               {"free_dim", num(d.free_dim)},
                               {"generators", num(d.generators)},
                               {"rank", num(d.rank)},
                               {"divisors", integers(d.divisors)},
                               {"quotient_dim", num(d.quotient_dim)},
                               {"torsion", integers(d.torsion)},
                               {"budget_exceeded", d.budget_exceeded}});
      t["degrees"] = std::move(degrees);
      j["torsion"] = std::move(t);
      if (!torsion->torsion_free) check_failed = true;
    }
  }

  if (selected(Check::Hilbert)) {
    if (!torsion) {
      j["hilbert"] = quotient_unavailable();
    } else {
      int covered = 0;
      for (const auto& d : torsion->degrees)
        if (!d.budget_exceeded) ++covered;
      timer.start();
      const auto table = hilbert_crosscheck(*torsion, scheme, torsion->relator_degree, covered);
      timings["hilbert"] = timer.seconds();
      Json h{{"status", hypotheses},
             {"cutoff", num(covered)},
             {"series", series_text(scheme, torsion->relator_degree)},
             {"label", kHilbertLabel},
             {"closed_form", integers(table.closed_form)},
             {"pbw", integers(table.pbw)},
             {"match", table.match},
             {"all_match", table.all_match}};
      if (!table.all_match) {
        h["verdict"] = gate.accepted() ? "formula import suspect" : "mismatch";
        check_failed = true;
      } else {
        h["verdict"] = "match";
      }
      j["hilbert"] = std::move(h);
    }
  }

  if (selected(Check::ModP)) {
    if (!torsion) {
      j["modp"] = quotient_unavailable();
    } else {
      timer.start();
      const auto tables = modp_dimension_check(*torsion, *components, config.primes);
      timings["modp"] = timer.seconds();
      Json m{{"status", hypotheses}, {"cutoff", num(static_cast<int>(torsion->degrees.size()))}};
      Json arr = Json::array();
      bool all = true;
      for (const auto& t : tables) {
        Json rows = Json::array();
        for (const auto& r : t.rows)
          rows.push_back(Json{{"degree", num(r.degree)},
                              {"integer_rank", num(r.integer_rank)},
                              {"modp_rank", num(r.modp_rank)},
                              {"integer_quotient_dim", num(r.integer_quotient_dim)},
                              {"modp_quotient_dim", num(r.modp_quotient_dim)},
                              {"match", r.match}});
        arr.push_back(Json{{"prime", num(t.prime)}, {"all_match", t.all_match}, {"rows", rows}});
        all = all && t.all_match;
      }
      m["all_match"] = all;
      m["tables"] = std::move(arr);
      if (!all) check_failed = true;
      j["modp"] = std::move(m);
    }
  }

  if (selected(Check::Lemma2)) {
    if (!downstream) {
      j["lemma2"] = skipped(blocked);
    } else {
      timer.start();
      const auto s = lemma2_sampling(scheme, N, config.samples, config.max_word_len, config.seed);
      timings["lemma2"] = timer.seconds();
      Json l{{"status", hypotheses},
             {"cutoff", num(N)},
             {"e", num(scheme.e)},
             {"seed", num(s.seed)},
             {"samples", num(s.samples)},
             {"max_word_len", num(s.max_word_len)},
             {"checked", num(s.checked)},
             {"violations", num(s.violations)},
             {"passed", s.passed()}};
      l["counterexample"] = s.counterexample ? Json(*s.counterexample) : Json(nullptr);
      if (!s.passed()) check_failed = true;
      j["lemma2"] = std::move(l);
    }
  }

  if (selected(Check::MagnusE1)) {
    if (!downstream) {
      j["magnus_e1"] = skipped(blocked);
    } else if (scheme.m < 2 && scheme.n < 1) {
      j["magnus_e1"] = skipped("needs at least two generators");
    } else {
      timer.start();
      const int cutoff = std::max(N, kMagnusWeight);
      const auto s = magnus_e1_check(scheme, kMagnusWeight, cutoff);
      timings["magnus_e1"] = timer.seconds();
      Json cases = Json::array();
      for (const auto& c : s.cases)
        cases.push_back(Json{{"commutator", c.spelling},
                             {"weight", num(c.weight)},
                             {"degree_e1", c.unit_degree.str()},
                             {"weighted_degree", num(c.weighted_degree)},
                             {"degree_e", c.weighted.str()},
                             {"form_matches", c.form_matches},
                             {"passed", c.passed}});
      j["magnus_e1"] = Json{{"status", hypotheses},
                            {"cutoff", num(cutoff)},
                            {"max_weight", num(kMagnusWeight)},
                            {"failures", num(s.failures)},
                            {"passed", s.passed()},
                            {"cases", cases}};
      if (!s.passed()) check_failed = true;
    }
  }

  Json checks = Json::array();
  for (auto c : config.checks) checks.push_back(check_name(c));
  Json primes = Json::array();
  for (auto p : config.primes) primes.push_back(num(p));
  Json meta{{"version", ONEREL_VERSION},
            {"seed", num(config.seed)},
            {"cutoffs", Json{{"gate", num(gate_cutoff)}, {"max_degree", num(N)}}},
            {"checks", checks},
            {"primes", primes},
            {"force_downstream", config.force_downstream},
            {"budget", Json{{"max_rows", num(config.budget.max_rows)}, {"max_cols", num(config.budget.max_cols)}}}};
  if (config.timings) meta["timings"] = timings;
  j["meta"] = std::move(meta);

  if (gate.outcome == GateOutcome::Inconclusive)
    out.exit_code = kExitInconclusive;
  else if (gate.outcome == GateOutcome::Rejected)
    out.exit_code = kExitGateRejected;
  else if (check_failed)
    out.exit_code = kExitCheckFailed;
  else if (budget_hit)
    out.exit_code = kExitInconclusive;
  else
    out.exit_code = kExitPass;
  j["meta"]["exit_code"] = num(out.exit_code);
  return out;
}

RunReport run_report(const RunConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) throw std::runtime_error("cannot read " + config.input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return run_report(config, parse_presentation(buf.str()));
}

Json read_report(const std::string& text) { return Json::parse(text); }

std::string emit_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace onerel
