// Acceptance run: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "onerel/lie.hpp"
#include "onerel/magnus.hpp"
#include "onerel/power_series.hpp"
#include "onerel/property_suites.hpp"
#include "onerel/quotient_lab.hpp"
#include "onerel/relator_gate.hpp"

using namespace onerel;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

struct CorpusEntry {
  const char* name;
  int m, n, e;
  const char* u;
  const char* v;
};

const CorpusEntry kCorpus[] = {
    {"[x1,x2] = y1 (2,1,3)", 2, 1, 3, "[x1,x2]", "y1"},
    {"[[x1,x2],x1] = y1 (2,1,4)", 2, 1, 4, "[[x1,x2],x1]", "y1"},
    {"[[x1,x2],x3] = y1^2 (3,1,4)", 3, 1, 4, "[[x1,x2],x3]", "y1^2"},
};

struct Prepared {
  WeightScheme scheme;
  LieElement rho;
  int d;
  int N;
  std::vector<IdealComponent> components;
  TorsionReport report;
};

Prepared prepare(const CorpusEntry& c) {
  Presentation p{c.m, c.n, parse_word(c.u), parse_word(c.v), c.e, std::nullopt};
  auto gate = check_theorem1_hypotheses(p, 16);
  if (!gate.accepted()) throw std::runtime_error(std::string("corpus entry rejected: ") + c.name);
  const int N = *gate.d + 6;
  auto comps = ideal_components(*gate.rho, N);
  auto report = torsion_free_certificate(*gate.rho, N, comps);
  return {gate.scheme(c.m, c.n), *gate.rho, *gate.d, N, std::move(comps), std::move(report)};
}

// Built on first use so each entry's cost lands on its own criterion.
const Prepared& corpus(std::size_t i) {
  static std::vector<std::optional<Prepared>> cache(std::size(kCorpus));
  if (!cache[i]) cache[i] = prepare(kCorpus[i]);
  return *cache[i];
}

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %-44s %8.3fs  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

LieElement random_lie(std::mt19937_64& rng, const WeightScheme& s, int degree) {
  std::uniform_int_distribution<int> coef(-2, 2);
  LieElement a(s, degree);
  for (const auto& el : lyndon_basis(s, degree)) a.add(el.word, Integer(coef(rng)));
  return a;
}

template <class Scalar>
Series<Scalar> random_series(std::mt19937_64& rng, const WeightScheme& s, int cutoff) {
  std::uniform_int_distribution<int> nterms(1, 6), coef(-3, 3), letter(0, s.letters() - 1), len(0, cutoff);
  Series<Scalar> f(s, cutoff);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) m.push_back(static_cast<Letter>(letter(rng)));
    f.add_term(m, Scalar(coef(rng)));
  }
  return f;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  criterion("gate correctness", [](Outcome& o) {
    auto timed = [&](const Presentation& p) {
      const auto t0 = std::chrono::steady_clock::now();
      auto r = check_theorem1_hypotheses(p, 16);
      if (elapsed_since(t0) >= 1.0) o.fail("gate took >= 1 s; ");
      return r;
    };
    auto a = timed({2, 1, parse_word("[x1,x2]"), parse_word("y1"), std::nullopt, std::nullopt});
    const WeightScheme s = a.scheme(2, 1);
    const auto expected = bracket(LieElement::generator(s, s.x(1)), LieElement::generator(s, s.x(2)));
    if (!a.accepted() || a.d != 2 || !a.rho || *a.rho != expected || a.content != 1)
      o.fail("commutator presentation not accepted as expected; ");
    auto b = timed({1, 1, parse_word("x1^2"), parse_word("y1"), std::nullopt, std::nullopt});
    if (b.outcome != GateOutcome::Rejected || b.content != 2) o.fail("x1^2 = y1 not rejected with content 2; ");
    auto c = timed({2, 1, parse_word("[x1,x2]"), parse_word("1"), std::nullopt, std::nullopt});
    if (c.outcome != GateOutcome::Rejected || c.failures.empty()) o.fail("[x1,x2] = 1 not rejected; ");
    if (o.pass) o.detail << "3/3 presentations exact";
  });

  for (std::size_t i = 0; i < std::size(kCorpus); ++i)
    criterion(std::string("torsion-free ") + kCorpus[i].name, [i](Outcome& o) {
      const auto& p = corpus(i);
      std::size_t divisors = 0;
      for (const auto& deg : p.report.degrees) {
        divisors += deg.divisors.size();
        if (!deg.torsion.empty()) o.fail("torsion at degree " + std::to_string(deg.degree) + "; ");
      }
      if (!p.report.certified()) o.fail("certificate incomplete or failed; ");
      if (o.pass) o.detail << "N=" << p.N << ", " << divisors << " divisors, all 1";
    });

  criterion("negative control rho = 2 xi1", [](Outcome& o) {
    const WeightScheme s(1, 1, 2);
    auto r = torsion_free_certificate(Integer(2) * LieElement::generator(s, s.x(1)), 3);
    const auto& d1 = r.degrees.at(0);
    if (d1.divisors != std::vector<Integer>{Integer(2)}) o.fail("degree-1 divisors are not (2); ");
    if (r.torsion_free || r.certified() || r.first_torsion_degree != 1) o.fail("certificate did not fail; ");
    if (o.pass) o.detail << "divisor 2 at degree 1, certificate fails";
  });

  criterion("Witt identity N=10", [](Outcome& o) {
    const int N = 10;
    for (auto [m, n, e] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 1, 3}, {1, 1, 2}, {3, 2, 4}}) {
      const auto dims = witt_dimensions(WeightScheme(m, n, e), N);
      PowerSeries prod = ps_one(N);
      for (int k = 1; k <= N; ++k) prod = ps_mul(prod, ps_one_minus_power(k, static_cast<long>(dims[k - 1]), N));
      PowerSeries expected(N + 1, Integer(0));
      expected[0] = 1;
      expected[1] -= m;
      expected[e] -= n;
      if (prod != expected) o.fail("mismatch for (" + std::to_string(m) + "," + std::to_string(n) + "," +
                                   std::to_string(e) + "); ");
    }
    if (o.pass) o.detail << "4/4 schemes exact";
  });

  criterion("PBW/Hilbert cross-check", [](Outcome& o) {
    for (std::size_t i = 0; i < std::size(kCorpus); ++i) {
      const auto& p = corpus(i);
      auto h = hilbert_crosscheck(p.report, p.scheme, p.d, p.N);
      if (!h.all_match) o.fail("mismatch for " + p.rho.str() + "; ");
    }
    if (o.pass) o.detail << std::size(kCorpus) << "/" << std::size(kCorpus) << " presentations match through d+6";
  });

  criterion("mod-p consistency p=2,3,5,7", [](Outcome& o) {
    std::size_t rows = 0;
    for (std::size_t i = 0; i < std::size(kCorpus); ++i) {
      const auto& p = corpus(i);
      for (const auto& t : modp_dimension_check(p.report, p.components, {2, 3, 5, 7})) {
        rows += t.rows.size();
        if (!t.all_match) o.fail("p=" + std::to_string(t.prime) + " mismatch for " + p.rho.str() + "; ");
      }
    }
    if (o.pass) o.detail << rows << " (prime, degree) rows equal";
  });

  criterion("filtration sampling (lemma2)", [](Outcome& o) {
    int checked = 0;
    for (auto s : {WeightScheme(2, 1, 2), WeightScheme(2, 1, 3), WeightScheme(2, 1, 4), WeightScheme(3, 1, 4),
                   WeightScheme(1, 1, 2)}) {
      auto r = lemma2_sampling(s, 10, 1000, 12, 2015);
      checked += r.checked;
      if (!r.passed())
        o.fail(std::to_string(r.violations) + " violations in " + s.str() + ": " + r.counterexample.value_or("") + "; ");
    }
    if (o.pass) o.detail << "5 schemes x 1000 words, " << checked << " with i >= e, 0 violations";
  });

  criterion("Magnus e=1 specialization", [](Outcome& o) {
    auto r = magnus_e1_check(WeightScheme(2, 1, 3), 6, 8);
    for (const auto& c : r.cases)
      if (!c.passed) o.fail(c.spelling + " failed; ");
    if (o.pass) o.detail << r.cases.size() << " basic commutators, weight <= 6";
  });

  criterion("law: Magnus homomorphism", [](Outcome& o) {
    std::mt19937_64 rng(1);
    const WeightScheme s(2, 1, 3);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      auto w = random_word(rng, 2, 1, 8), z = random_word(rng, 2, 1, 8);
      if (magnus_embed(w * z, s, 7) != mul(magnus_embed(w, s, 7), magnus_embed(z, s, 7)) ||
          magnus_embed(w.inverse(), s, 7) != inverse(magnus_embed(w, s, 7)))
        ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " failures; ");
    if (o.pass) o.detail << "500 cases";
  });

  criterion("law: valuation multiplicativity", [](Outcome& o) {
    std::mt19937_64 rng(2);
    const WeightScheme s(2, 1, 3);
    int bad = 0, cases = 0;
    while (cases < 500) {
      auto f = random_series<Integer>(rng, s, 8), g = random_series<Integer>(rng, s, 8);
      auto vf = valuation(f), vg = valuation(g);
      if (vf.is_infinite() || vg.is_infinite() || vf.value() + vg.value() > 8) continue;
      ++cases;
      if (valuation(mul(f, g)) != vf + vg) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " failures; ");
    if (o.pass) o.detail << cases << " cases";
  });

  criterion("law: Jacobi and antisymmetry", [](Outcome& o) {
    std::mt19937_64 rng(3);
    const WeightScheme s(2, 1, 2);
    std::uniform_int_distribution<int> deg(1, 3);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      auto a = random_lie(rng, s, deg(rng)), b = random_lie(rng, s, deg(rng)), c = random_lie(rng, s, deg(rng));
      if (bracket(a, b) != -bracket(b, a)) ++bad;
      if (!(bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero()) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " failures; ");
    if (o.pass) o.detail << "500 triples";
  });

  criterion("law: ideal strategy independence", [](Outcome& o) {
    std::mt19937_64 rng(4);
    const WeightScheme schemes[] = {WeightScheme(2, 0, 1), WeightScheme(2, 1, 2), WeightScheme(3, 0, 1)};
    std::uniform_int_distribution<int> pick(0, 2), deg(1, 3), extra(0, 2);
    int bad = 0, cases = 0;
    while (cases < 500) {
      const auto& s = schemes[pick(rng)];
      auto rho = random_lie(rng, s, deg(rng));
      if (rho.is_zero()) continue;
      const int n = rho.degree() + extra(rng);
      ++cases;
      if (!same_row_lattice(ideal_component(rho, n).matrix, ideal_component_lyndon_closure(rho, n).matrix)) ++bad;
    }
    if (bad) o.fail(std::to_string(bad) + " failures; ");
    if (o.pass) o.detail << cases << " cases";
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
