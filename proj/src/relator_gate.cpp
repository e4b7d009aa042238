#include "onerel/relator_gate.hpp"

#include "onerel/magnus.hpp"

namespace onerel {

std::string to_string(GateOutcome o) {
  switch (o) {
    case GateOutcome::Accepted: return "accepted";
    case GateOutcome::Rejected: return "rejected";
    case GateOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

HypothesisReport check_theorem1_hypotheses(const Presentation& pres, int cutoff) {
  HypothesisReport report;
  report.cutoff = cutoff;
  const WeightScheme base(pres.m, pres.n, 1);
  pres.u.check_range(base);
  pres.v.check_range(base);
  if (pres.e && *pres.e < 1) throw std::invalid_argument("presentation: e must be >= 1");

  const bool u_in_a = pres.u.in_A();
  if (!u_in_a) report.failures.push_back("u is not in A: it contains a y-letter");
  if (pres.u.is_identity()) report.failures.push_back("u is trivial");
  if (!pres.v.in_B()) report.failures.push_back("v is not in B: it contains an x-letter");
  if (pres.v.is_identity()) report.failures.push_back("v is trivial (v = 1)");

  bool inconclusive = false;
  if (u_in_a && !pres.u.is_identity()) {
    // u only uses x-letters, so its valuation does not depend on e.
    const auto deg = filtration_degree(pres.u, base, cutoff);
    if (!deg.exact) {
      inconclusive = true;
    } else {
      const int d = deg.value;
      report.d = d;
      report.chosen_e = pres.e.value_or(d + 1);
      if (*report.chosen_e <= d)
        report.failures.push_back("e = " + std::to_string(*report.chosen_e) + " does not exceed d = " +
                                  std::to_string(d));
      const WeightScheme scheme(pres.m, pres.n, *report.chosen_e);
      report.rho = leading_lie_form(pres.u, scheme, d).form;
      report.content = report.rho->content();
      if (report.content != 1)
        report.failures.push_back("content of rho is " + report.content.get_str() + ": u is a proper power mod gamma_" +
                                  std::to_string(d + 1) + "(A)");
    }
  }

  if (!report.failures.empty())
    report.outcome = GateOutcome::Rejected;
  else if (inconclusive)
    report.outcome = GateOutcome::Inconclusive;
  else
    report.outcome = GateOutcome::Accepted;
  return report;
}

}  // namespace onerel
