#include "onerel/magnus.hpp"

namespace onerel {

FiltrationDegree filtration_degree(const GroupWord& w, const WeightScheme& scheme, int cutoff) {
  w.check_range(scheme);
  FiltrationDegree lower{false, cutoff + 1, cutoff};
  if (w.is_identity()) return lower;
  for (int c = 1; c <= cutoff; ++c) {
    auto f = magnus_embed<Integer>(w, scheme, c) - Series<Integer>::one(scheme, c);
    auto v = valuation(f);
    if (v.is_finite()) return {true, v.value(), cutoff};
  }
  return lower;
}

}  // namespace onerel
