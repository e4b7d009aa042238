#include "onerel/property_suites.hpp"

#include <random>

namespace onerel {

Lemma2Summary lemma2_sampling(const WeightScheme& scheme, int cutoff, int samples, int max_word_len,
                              std::uint64_t seed) {
  Lemma2Summary s;
  s.scheme = scheme;
  s.cutoff = cutoff;
  s.seed = seed;
  s.samples = samples;
  s.max_word_len = max_word_len;
  const WeightScheme unit(scheme.m, scheme.n, 1);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    GroupWord w;
    if (i % 2 == 0) {
      w = random_word(rng, scheme.m, scheme.n, max_word_len);
    } else {
      const int half = max_word_len / 4;
      auto a = random_word(rng, scheme.m, scheme.n, half);
      auto b = random_word(rng, scheme.m, scheme.n, half);
      w = group_commutator(a, b);
    }
    const auto deg = filtration_degree(w, scheme, cutoff);
    if (!deg.exact || deg.value < scheme.e) continue;
    ++s.checked;
    const auto lower = filtration_degree(w, unit, cutoff);
    if (lower.value < deg.value / scheme.e) {
      ++s.violations;
      if (!s.counterexample) s.counterexample = w.str();
    }
  }
  return s;
}

MagnusE1Summary magnus_e1_check(const WeightScheme& scheme, int max_weight, int cutoff) {
  MagnusE1Summary s;
  s.scheme = scheme;
  s.max_weight = max_weight;
  s.cutoff = cutoff;
  const WeightScheme unit(scheme.m, scheme.n, 1);

  const GenSymbol a = x_sym(1);
  const GenSymbol b = scheme.m >= 2 ? x_sym(2) : y_sym(1);
  if (scheme.m < 2 && scheme.n < 1) return s;
  const Letter la = unit.x(1);
  const Letter lb = scheme.m >= 2 ? unit.x(2) : unit.y(1);
  const std::string na = "x1", nb = scheme.m >= 2 ? "x2" : "y1";

  // Index sequences: single generators, then b, a followed by a^p b^q.
  std::vector<std::vector<int>> sequences{{0}, {1}};
  for (int k = 2; k <= max_weight; ++k)
    for (int p = 0; p <= k - 2; ++p) {
      std::vector<int> seq{1, 0};
      seq.insert(seq.end(), p, 0);
      seq.insert(seq.end(), k - 2 - p, 1);
      sequences.push_back(std::move(seq));
    }

  for (const auto& seq : sequences) {
    CommutatorCase c;
    auto gen = [&](int i) { return GroupWord::generator(i ? b : a); };
    c.word = gen(seq[0]);
    c.spelling = seq[0] ? nb : na;
    auto form = LieElement::generator(unit, seq[0] ? lb : la);
    c.weighted_degree = seq[0] ? scheme.weight(scheme.m >= 2 ? scheme.x(2) : scheme.y(1)) : 1;
    for (std::size_t j = 1; j < seq.size(); ++j) {
      c.word = group_commutator(c.word, gen(seq[j]));
      c.spelling = "[" + c.spelling + "," + (seq[j] ? nb : na) + "]";
      form = bracket(form, LieElement::generator(unit, seq[j] ? lb : la));
      c.weighted_degree += seq[j] ? scheme.weight(scheme.m >= 2 ? scheme.x(2) : scheme.y(1)) : 1;
    }
    c.weight = static_cast<int>(seq.size());
    c.unit_degree = filtration_degree(c.word, unit, cutoff);
    c.weighted = filtration_degree(c.word, scheme, cutoff);
    const bool exact = c.unit_degree.exact && c.unit_degree.value == c.weight;
    if (exact) c.form_matches = !form.is_zero() && leading_lie_form(c.word, unit, cutoff).form == form;
    const bool weighted_ok = c.weighted.value >= std::min(c.weighted_degree, cutoff + 1);
    c.passed = exact && c.form_matches && weighted_ok;
    if (!c.passed) ++s.failures;
    s.cases.push_back(std::move(c));
  }
  return s;
}

}  // namespace onerel
