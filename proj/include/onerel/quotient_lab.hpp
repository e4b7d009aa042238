#pragma once

// Degree-by-degree study of the one-relator Lie ring g = L(F)/(rho): the
// homogeneous pieces of the ideal (rho), their Smith normal forms, and the
// Hilbert-series and mod-p cross-checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onerel/lie.hpp"
#include "onerel/power_series.hpp"
#include "onerel/smith.hpp"

namespace onerel {

/// Row/column limits for a single ideal component matrix.
struct Budget {
  std::size_t max_rows = 20000;
  std::size_t max_cols = 20000;
};

struct IdealComponent {
  int degree = 0;
  /// Distinct nonzero ad-monomials ad(g_1)...ad(g_k)(rho), in
  /// lexicographic order of the generator sequence.
  std::vector<LieElement> generators;
  /// One row per generator, columns indexed by the Lyndon basis of degree n.
  SparseMatrix<Integer> matrix;
  bool budget_exceeded = false;
};

/// The ad-monomial span of rho in degrees d..max_degree. Each component is
/// built from the previous ones, so asking for all of them at once is much
/// cheaper than calling ideal_component repeatedly.
std::vector<IdealComponent> ideal_components(const LieElement& rho, int max_degree, const Budget& budget = {});

/// The degree-n piece of (rho); n must be >= deg(rho).
IdealComponent ideal_component(const LieElement& rho, int n, const Budget& budget = {});

/// Independent generation used to cross-check ideal_component: right-normed
/// brackets [b_1, [b_2, ... [b_k, rho]]] with every b_i drawn from the whole
/// Lyndon basis, not just the generators. Small instances only.
IdealComponent ideal_component_lyndon_closure(const LieElement& rho, int n);

/// True when both matrices generate the same sublattice of Z^cols.
bool same_row_lattice(const SparseMatrix<Integer>& a, const SparseMatrix<Integer>& b);

struct DegreeReport {
  int degree = 0;
  std::size_t free_dim = 0;     // dim L(F)_n
  std::size_t generators = 0;   // rows fed to the Smith normal form
  std::size_t rank = 0;         // rank of the ideal piece
  std::vector<Integer> divisors;
  std::size_t quotient_dim = 0; // dim g_n
  std::vector<Integer> torsion; // divisors > 1
  bool budget_exceeded = false;
};

DegreeReport quotient_degree_report(const IdealComponent& component, const WeightScheme& scheme);
DegreeReport quotient_degree_report(const LieElement& rho, int n, const Budget& budget = {});

struct TorsionReport {
  WeightScheme scheme;
  LieElement rho;
  int relator_degree = 0;
  int max_degree = 0;
  Integer content;
  /// Degrees 1..max_degree; below relator_degree the ideal is zero.
  std::vector<DegreeReport> degrees;
  bool complete = true;       // false when a budget stopped the computation
  bool torsion_free = true;   // over the degrees actually computed
  std::optional<int> first_torsion_degree;
  /// Hypothesis notes, e.g. a relator with content != 1.
  std::vector<std::string> notes;

  bool certified() const { return complete && torsion_free; }
  std::vector<std::size_t> quotient_dims() const;
};

TorsionReport torsion_free_certificate(const LieElement& rho, int max_degree, const Budget& budget = {});
TorsionReport torsion_free_certificate(const LieElement& rho, int max_degree,
                                       const std::vector<IdealComponent>& components);

/// The candidate enveloping-algebra series 1/(1 - m t - n t^e + t^d) (the
/// t^d term dropped when d is absent) against the PBW product
/// prod_k (1 - t^k)^(-dim g_k).
struct HilbertTable {
  int max_degree = 0;
  std::optional<int> relator_degree;
  PowerSeries closed_form;
  PowerSeries pbw;
  std::vector<bool> match;
  bool all_match = true;
};

/// dims[k-1] = dim g_k for k = 1..N.
HilbertTable hilbert_crosscheck(const std::vector<std::size_t>& dims, const WeightScheme& scheme,
                                std::optional<int> relator_degree, int max_degree);
HilbertTable hilbert_crosscheck(const TorsionReport& report, const WeightScheme& scheme,
                                std::optional<int> relator_degree, int max_degree);

/// prod_{k<=N} (1 - t^k)^(exponent_sign * dims[k-1]), truncated after t^N.
PowerSeries pbw_product(const std::vector<std::size_t>& dims, int max_degree, int exponent_sign);

struct ModPRow {
  int degree = 0;
  std::size_t integer_rank = 0;
  std::size_t modp_rank = 0;
  std::size_t integer_quotient_dim = 0;
  std::size_t modp_quotient_dim = 0;
  bool match = true;
};

struct ModPTable {
  std::uint64_t prime = 2;
  std::vector<ModPRow> rows;
  bool all_match = true;
};

std::vector<ModPTable> modp_dimension_check(const LieElement& rho, int max_degree,
                                            const std::vector<std::uint64_t>& primes, const Budget& budget = {});
std::vector<ModPTable> modp_dimension_check(const TorsionReport& report, const std::vector<IdealComponent>& components,
                                            const std::vector<std::uint64_t>& primes);

}  // namespace onerel
