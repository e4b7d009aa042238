#include <gtest/gtest.h>

#include <map>
#include <random>

#include "onerel/magnus.hpp"
#include "onerel/property_suites.hpp"

using namespace onerel;

namespace {

// Independent oracle: series as map<string of letters, long long>, plain
// truncated products, inverse letters as explicit alternating sums.
using Naive = std::map<std::string, long long>;

Naive naive_mul(const Naive& a, const Naive& b, const WeightScheme& s, int cutoff) {
  auto weight = [&](const std::string& w) {
    int t = 0;
    for (char c : w) t += c < s.m ? 1 : s.e;
    return t;
  };
  Naive r;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b)
      if (weight(u + v) <= cutoff) r[u + v] += cu * cv;
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

Naive naive_embed(const GroupWord& w, const WeightScheme& s, int cutoff) {
  Naive r{{"", 1}};
  for (const auto& g : w.symbols()) {
    const char l = static_cast<char>(g.factor == Factor::X ? g.index - 1 : s.m + g.index - 1);
    Naive f{{"", 1}};
    if (!g.inverted) {
      f[std::string(1, l)] = 1;
    } else {
      for (int k = 1; k <= cutoff; ++k) f[std::string(k, l)] = k % 2 ? -1 : 1;
    }
    r = naive_mul(r, f, s, cutoff);
  }
  return r;
}

int naive_degree(const GroupWord& w, const WeightScheme& s, int cutoff) {
  auto f = naive_embed(w, s, cutoff);
  f[""] -= 1;
  int best = cutoff + 1;
  for (const auto& [u, c] : f)
    if (c != 0) {
      int t = 0;
      for (char ch : u) t += ch < s.m ? 1 : s.e;
      best = std::min(best, t);
    }
  return best;
}

}  // namespace

TEST(MagnusEmbed, Examples) {
  const WeightScheme s(2, 1, 3);
  EXPECT_EQ(to_string(magnus_embed(parse_word("y1"), s, 6)), "1 + Y1");
  EXPECT_EQ(to_string(magnus_embed(parse_word("x1^-1"), s, 3)), "1 - X1 + X1*X1 - X1*X1*X1");
  EXPECT_EQ(to_string(magnus_embed(parse_word("x1 x2"), s, 4)), "1 + X1 + X2 + X1*X2");
}

TEST(MagnusEmbed, AgreesWithNaiveExpansion) {
  std::mt19937_64 rng(17);
  const WeightScheme s(2, 1, 2);
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(rng, 2, 1, 8);
    auto f = magnus_embed(w, s, 5);
    auto oracle = naive_embed(w, s, 5);
    Series<Integer> g(s, 5);
    for (const auto& [u, c] : oracle) {
      Monomial m;
      for (char ch : u) m.push_back(static_cast<Letter>(ch));
      g.add_term(m, Integer(static_cast<long>(c)));
    }
    EXPECT_EQ(f, g) << w.str();
  }
}

TEST(FiltrationDegree, Examples) {
  const WeightScheme s(2, 1, 3);
  EXPECT_EQ(filtration_degree(parse_word("y1"), s, 6), (FiltrationDegree{true, 3, 6}));
  auto c = parse_word("[x1,x2]");
  for (int e = 1; e <= 4; ++e) EXPECT_EQ(filtration_degree(c, WeightScheme(2, 1, e), 6).value, 2);
  // Oracle for the commutator: lowest part of mu(w) - 1 is X1X2 - X2X1.
  EXPECT_EQ(naive_degree(c, s, 6), 2);
  auto low = homogeneous_component(magnus_embed(c, s, 2), 2);
  EXPECT_EQ(to_string(low), "X1*X2 - X2*X1");

  for (int cutoff : {1, 4, 9}) {
    auto id = filtration_degree(parse_word("x1 x1^-1"), s, cutoff);
    EXPECT_FALSE(id.exact);
    EXPECT_EQ(id.value, cutoff + 1);
    EXPECT_EQ(id.str(), ">= " + std::to_string(cutoff + 1));
  }
}

TEST(FiltrationDegree, AboveCutoffIsLowerBound) {
  const WeightScheme s(2, 1, 3);
  auto w = parse_word("[[x1,x2],x1]");
  EXPECT_EQ(filtration_degree(w, s, 2), (FiltrationDegree{false, 3, 2}));
  EXPECT_EQ(filtration_degree(w, s, 3), (FiltrationDegree{true, 3, 3}));
}

TEST(FiltrationDegree, MatchesNaiveOracle) {
  std::mt19937_64 rng(19);
  const WeightScheme s(2, 1, 2);
  for (int i = 0; i < 200; ++i) {
    auto a = random_word(rng, 2, 1, 3), b = random_word(rng, 2, 1, 3);
    auto w = i % 2 ? group_commutator(a, b) : a;
    EXPECT_EQ(filtration_degree(w, s, 5).value, naive_degree(w, s, 5)) << w.str();
  }
}

TEST(MagnusProperties, HomomorphismAndInversion) {
  std::mt19937_64 rng(23);
  const WeightScheme s(2, 1, 2);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word(rng, 2, 1, 6), z = random_word(rng, 2, 1, 6);
    EXPECT_EQ(magnus_embed(w * z, s, 5), mul(magnus_embed(w, s, 5), magnus_embed(z, s, 5)));
    EXPECT_EQ(magnus_embed(w.inverse(), s, 5), inverse(magnus_embed(w, s, 5)));
  }
}

TEST(MagnusProperties, CentralSeriesLaw) {
  std::mt19937_64 rng(29);
  const WeightScheme s(2, 1, 2);
  const int cutoff = 7;
  int exercised = 0;
  for (int i = 0; i < 500; ++i) {
    auto w = random_word(rng, 2, 1, 4), z = random_word(rng, 2, 1, 4);
    if (i % 3 == 0) w = group_commutator(w, random_word(rng, 2, 1, 2));
    auto dw = filtration_degree(w, s, cutoff), dz = filtration_degree(z, s, cutoff);
    if (!dw.exact || !dz.exact) continue;
    ++exercised;
    EXPECT_GE(filtration_degree(group_commutator(w, z), s, cutoff).value, std::min(dw.value + dz.value, cutoff + 1))
        << w.str() << " , " << z.str();
  }
  EXPECT_GT(exercised, 200);
}

TEST(MagnusProperties, Lemma2Bound) {
  for (auto s : {WeightScheme(2, 1, 2), WeightScheme(2, 1, 3), WeightScheme(1, 1, 2)}) {
    auto summary = lemma2_sampling(s, 7, 300, 12, 77);
    EXPECT_TRUE(summary.passed()) << summary.counterexample.value_or("");
    EXPECT_GT(summary.checked, 20);
  }
}

TEST(MagnusProperties, UnitWeightSpecialization) {
  auto summary = magnus_e1_check(WeightScheme(2, 1, 3), 6, 8);
  EXPECT_TRUE(summary.passed());
  EXPECT_EQ(summary.cases.size(), 2u + 1 + 2 + 3 + 4 + 5);
  for (const auto& c : summary.cases) {
    EXPECT_TRUE(c.unit_degree.exact);
    EXPECT_EQ(c.unit_degree.value, c.weight) << c.spelling;
  }
  // On x1, y1 the weighted degree exceeds the length.
  auto mixed = magnus_e1_check(WeightScheme(1, 1, 2), 5, 8);
  EXPECT_TRUE(mixed.passed());
}
