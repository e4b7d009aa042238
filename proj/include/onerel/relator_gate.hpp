#pragma once

// Decides whether <x_1..x_m, y_1..y_n | u = v> meets the hypotheses of the
// residual torsion-free nilpotence criterion: u in gamma_d(A) and not a proper
// power mod gamma_{d+1}(A), v a nontrivial element of B, e > d.
//
// The proper-power condition is decided on the leading form rho of u. The
// quotient gamma_d(A)/gamma_{d+1}(A) is the free abelian group L(A)_d, and
// u maps to rho there. If u = z^k mod gamma_{d+1}(A) with k >= 2 then rho
// = k * (image of z), so content(rho) is divisible by k. Conversely, if k
// divides rho, then rho / k lies in L(A)_d and is the image of some z in
// gamma_d(A), whence u = z^k mod gamma_{d+1}(A). So u is not a proper
// power exactly when content(rho) = 1.

#include <optional>
#include <string>
#include <vector>

#include "onerel/group_word.hpp"
#include "onerel/lie.hpp"

namespace onerel {

struct Presentation {
  int m = 1;
  int n = 0;
  GroupWord u;
  GroupWord v;
  std::optional<int> e;
  std::optional<int> max_degree;  // optional file hint, not part of the group
};

enum class GateOutcome { Accepted, Rejected, Inconclusive };

std::string to_string(GateOutcome o);

struct HypothesisReport {
  GateOutcome outcome = GateOutcome::Rejected;
  int cutoff = 0;
  std::optional<int> d;          // lower central degree of u in A
  std::optional<LieElement> rho; // leading form of u
  Integer content = 0;
  std::optional<int> chosen_e;
  std::vector<std::string> failures;

  bool accepted() const { return outcome == GateOutcome::Accepted; }
  WeightScheme scheme(int m, int n) const { return WeightScheme(m, n, chosen_e.value_or(1)); }
};

HypothesisReport check_theorem1_hypotheses(const Presentation& pres, int cutoff);

}  // namespace onerel
