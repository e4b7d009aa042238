#pragma once

// Seeded sampling checks of the filtration against the lower central
// series: the F_i <= gamma_[i/e] bound and the e = 1 specialization.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onerel/group_word.hpp"
#include "onerel/lie.hpp"
#include "onerel/magnus.hpp"

namespace onerel {

struct Lemma2Summary {
  WeightScheme scheme;
  int cutoff = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  int max_word_len = 0;
  int checked = 0;  // samples with an exact weighted degree i >= e
  int violations = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return violations == 0; }
};

/// Draws `samples` reduced words of length <= max_word_len. Even-numbered
/// draws are plain random words; odd-numbered draws are commutators of two
/// random words of length <= max_word_len / 4, which reach the interesting
/// degrees i >= e far more often. For each word with exact weighted degree
/// i >= e, checks that the e' = 1 degree is >= floor(i / e).
Lemma2Summary lemma2_sampling(const WeightScheme& scheme, int cutoff, int samples, int max_word_len,
                              std::uint64_t seed);

struct CommutatorCase {
  GroupWord word;
  std::string spelling;  // e.g. [[x2,x1],x1]
  int weight = 0;        // number of generator entries
  int weighted_degree = 0;
  FiltrationDegree unit_degree;      // under e' = 1
  FiltrationDegree weighted;         // under the given scheme
  bool form_matches = false;         // leading form == iterated bracket
  bool passed = false;
};

struct MagnusE1Summary {
  WeightScheme scheme;
  int max_weight = 0;
  int cutoff = 0;
  std::vector<CommutatorCase> cases;
  int failures = 0;

  bool passed() const { return failures == 0; }
};

/// Left-normed basic commutators [g_i1, g_i2, ..., g_ik] with i1 > i2 <= i3
/// <= ... <= ik on two generators a < b, of weight <= max_weight. Under
/// e' = 1 each must have degree exactly k and leading form equal to the
/// iterated bracket; under the given scheme its degree must be at least its
/// weighted degree. The generators are x1, x2 when m >= 2, else x1, y1.
MagnusE1Summary magnus_e1_check(const WeightScheme& scheme, int max_weight, int cutoff);

}  // namespace onerel
