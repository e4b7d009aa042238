#pragma once

// The Magnus embedding x_i -> 1 + X_i, y_j -> 1 + Y_j and the filtration
// degree deg(w) = v(mu(w) - 1).

#include <string>

#include "onerel/group_word.hpp"
#include "onerel/series.hpp"

namespace onerel {

template <class Scalar = Integer>
Series<Scalar> magnus_embed(const GroupWord& w, const WeightScheme& scheme, int cutoff,
                            Domain<Scalar> domain = Domain<Scalar>()) {
  w.check_range(scheme);
  auto one = Series<Scalar>::one(scheme, cutoff, domain);
  auto image = [&](const GenSymbol& s) {
    const Letter l = s.factor == Factor::X ? scheme.x(s.index) : scheme.y(s.index);
    auto f = one + Series<Scalar>::letter(scheme, cutoff, l, domain);
    return s.inverted ? inverse(f) : f;
  };
  auto result = one;
  for (const auto& s : w.symbols()) result = mul(result, image(s));
  return result;
}

/// Either an exact degree or the certified lower bound cutoff + 1.
struct FiltrationDegree {
  bool exact = false;
  int value = 0;  // the degree, or cutoff + 1 when !exact
  int cutoff = 0;

  bool at_least(int k) const { return value >= k; }
  std::string str() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }
  friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
};

/// v(mu(w) - 1) when it is <= cutoff. The window is widened one weight at a
/// time so that low-degree words never pay for the full cutoff.
FiltrationDegree filtration_degree(const GroupWord& w, const WeightScheme& scheme, int cutoff);

}  // namespace onerel
