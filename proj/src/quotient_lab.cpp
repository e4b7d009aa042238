#include "onerel/quotient_lab.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace onerel {

namespace {

SparseRow<Integer> to_row(const LieElement& x, const LyndonTable& table) {
  SparseRow<Integer> row;
  for (const auto& [w, c] : x.coords()) row.emplace_back(*table.index_of(w), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

LieElement from_row(const SparseRow<Integer>& row, const LyndonTable& table) {
  LieElement x(table.scheme(), table.weight());
  for (const auto& [i, c] : row) x.add(table.element(i).word, c);
  return x;
}

/// ad(generator) on Lyndon rows of one degree, filled lazily.
class AdjointAction {
 public:
  explicit AdjointAction(const WeightScheme& scheme) : scheme_(scheme) {}

  SparseRow<Integer> apply(Letter g, int degree, const SparseRow<Integer>& x) {
    const auto& source = lyndon_table(scheme_, degree);
    const auto& target = lyndon_table(scheme_, degree + scheme_.weight(g));
    auto& cache = cache_[{g, degree}];
    if (cache.empty()) cache.resize(source.size());
    std::map<std::size_t, Integer> acc;
    for (const auto& [i, c] : x) {
      if (!cache[i]) cache[i] = to_row(bracket_generator_basis(scheme_, g, source.element(i).word), target);
      for (const auto& [j, k] : *cache[i]) acc[j] += c * k;
    }
    SparseRow<Integer> out;
    for (auto& [j, v] : acc)
      if (sgn(v) != 0) out.emplace_back(j, std::move(v));
    return out;
  }

 private:
  WeightScheme scheme_;
  std::map<std::pair<Letter, int>, std::vector<std::optional<SparseRow<Integer>>>> cache_;
};

void check_relator(const LieElement& rho) {
  if (rho.is_zero()) throw std::invalid_argument("ideal component: relator must be nonzero");
}

Integer product(const std::vector<Integer>& xs) {
  Integer p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

}  // namespace

std::vector<IdealComponent> ideal_components(const LieElement& rho, int max_degree, const Budget& budget) {
  check_relator(rho);
  const auto& scheme = rho.scheme();
  const int d = rho.degree();
  std::vector<IdealComponent> out;
  if (max_degree < d) return out;

  AdjointAction ad(scheme);
  // levels[k - d]: ad-monomial rows of degree k, deduplicated.
  std::vector<std::vector<SparseRow<Integer>>> levels;
  for (int k = d; k <= max_degree; ++k) {
    const auto& table = lyndon_table(scheme, k);
    IdealComponent comp;
    comp.degree = k;
    comp.matrix.cols = table.size();
    std::vector<SparseRow<Integer>> rows;
    if (k == d) {
      rows.push_back(to_row(rho, table));
    } else {
      std::set<SparseRow<Integer>> seen;
      for (Letter g = 0; g < scheme.letters(); ++g) {
        const int src = k - scheme.weight(g);
        if (src < d) continue;
        for (const auto& x : levels[src - d]) {
          auto y = ad.apply(g, src, x);
          if (y.empty() || !seen.insert(y).second) continue;
          rows.push_back(std::move(y));
          if (rows.size() > budget.max_rows) break;
        }
      }
    }
    if (rows.size() > budget.max_rows || table.size() > budget.max_cols) {
      comp.budget_exceeded = true;
      out.push_back(std::move(comp));
      break;
    }
    for (const auto& r : rows) comp.generators.push_back(from_row(r, table));
    comp.matrix.rows = rows;
    levels.push_back(std::move(rows));
    out.push_back(std::move(comp));
  }
  return out;
}

IdealComponent ideal_component(const LieElement& rho, int n, const Budget& budget) {
  check_relator(rho);
  if (n < rho.degree())
    throw std::invalid_argument("ideal_component: degree " + std::to_string(n) + " is below the relator degree " +
                                std::to_string(rho.degree()));
  return ideal_components(rho, n, budget).back();
}

IdealComponent ideal_component_lyndon_closure(const LieElement& rho, int n) {
  check_relator(rho);
  const auto& scheme = rho.scheme();
  const int d = rho.degree();
  if (n < d) throw std::invalid_argument("ideal_component_lyndon_closure: n below relator degree");
  std::vector<std::vector<LieElement>> levels{{rho}};
  for (int k = d + 1; k <= n; ++k) {
    std::vector<LieElement> level;
    for (int j = 1; j <= k - d; ++j)
      for (const auto& b : lyndon_basis(scheme, j))
        for (const auto& s : levels[k - j - d]) {
          auto y = bracket(LieElement::basis(scheme, b.word), s);
          if (!y.is_zero()) level.push_back(std::move(y));
        }
    levels.push_back(std::move(level));
  }
  const auto& table = lyndon_table(scheme, n);
  IdealComponent comp;
  comp.degree = n;
  comp.matrix.cols = table.size();
  for (auto& x : levels.back()) {
    comp.matrix.rows.push_back(to_row(x, table));
    comp.generators.push_back(std::move(x));
  }
  return comp;
}

bool same_row_lattice(const SparseMatrix<Integer>& a, const SparseMatrix<Integer>& b) {
  if (a.cols != b.cols) return false;
  SparseMatrix<Integer> both = a;
  both.rows.insert(both.rows.end(), b.rows.begin(), b.rows.end());
  const auto sa = smith_normal_form(a), sb = smith_normal_form(b), sab = smith_normal_form(both);
  // Equal rank puts all three in one saturation; indices then compare
  // through the products of elementary divisors.
  return sa.rank == sab.rank && sb.rank == sab.rank && product(sa.divisors) == product(sab.divisors) &&
         product(sb.divisors) == product(sab.divisors);
}

DegreeReport quotient_degree_report(const IdealComponent& component, const WeightScheme& scheme) {
  DegreeReport r;
  r.degree = component.degree;
  r.free_dim = lyndon_basis(scheme, component.degree).size();
  r.budget_exceeded = component.budget_exceeded;
  if (component.budget_exceeded) return r;
  r.generators = component.matrix.rows.size();
  auto snf = smith_normal_form(component.matrix);
  r.rank = snf.rank;
  r.divisors = std::move(snf.divisors);
  r.quotient_dim = r.free_dim - r.rank;
  for (const auto& x : r.divisors)
    if (x > 1) r.torsion.push_back(x);
  return r;
}

DegreeReport quotient_degree_report(const LieElement& rho, int n, const Budget& budget) {
  return quotient_degree_report(ideal_component(rho, n, budget), rho.scheme());
}

std::vector<std::size_t> TorsionReport::quotient_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& d : degrees) dims.push_back(d.quotient_dim);
  return dims;
}

TorsionReport torsion_free_certificate(const LieElement& rho, int max_degree, const Budget& budget) {
  return torsion_free_certificate(rho, max_degree, ideal_components(rho, max_degree, budget));
}

TorsionReport torsion_free_certificate(const LieElement& rho, int max_degree,
                                       const std::vector<IdealComponent>& components) {
  check_relator(rho);
  TorsionReport report;
  report.scheme = rho.scheme();
  report.rho = rho;
  report.relator_degree = rho.degree();
  report.max_degree = max_degree;
  report.content = rho.content();
  if (report.content != 1)
    report.notes.push_back("relator content is " + report.content.get_str() +
                           ", so rho is a proper multiple and torsion is expected");

  for (int n = 1; n <= max_degree; ++n) {
    if (n < report.relator_degree) {
      DegreeReport r;
      r.degree = n;
      r.free_dim = lyndon_basis(report.scheme, n).size();
      r.quotient_dim = r.free_dim;
      report.degrees.push_back(std::move(r));
      continue;
    }
    const auto idx = static_cast<std::size_t>(n - report.relator_degree);
    if (idx >= components.size()) {
      report.complete = false;
      break;
    }
    auto r = quotient_degree_report(components[idx], report.scheme);
    if (r.budget_exceeded) {
      report.complete = false;
      report.notes.push_back("budget exceeded at degree " + std::to_string(n));
      report.degrees.push_back(std::move(r));
      break;
    }
    if (!r.torsion.empty() && !report.first_torsion_degree) report.first_torsion_degree = n;
    if (!r.torsion.empty()) report.torsion_free = false;
    report.degrees.push_back(std::move(r));
  }
  return report;
}

PowerSeries pbw_product(const std::vector<std::size_t>& dims, int max_degree, int exponent_sign) {
  auto acc = ps_one(max_degree);
  for (int k = 1; k <= max_degree && k <= static_cast<int>(dims.size()); ++k) {
    if (dims[k - 1] == 0) continue;
    acc = ps_mul(acc, ps_one_minus_power(k, exponent_sign * static_cast<long>(dims[k - 1]), max_degree));
  }
  return acc;
}

HilbertTable hilbert_crosscheck(const std::vector<std::size_t>& dims, const WeightScheme& scheme,
                                std::optional<int> relator_degree, int max_degree) {
  if (static_cast<int>(dims.size()) < max_degree)
    throw std::invalid_argument("hilbert_crosscheck: dimensions do not cover the requested degree");
  HilbertTable t;
  t.max_degree = max_degree;
  t.relator_degree = relator_degree;
  PowerSeries denom(max_degree + 1, Integer(0));
  denom[0] = 1;
  if (max_degree >= 1) denom[1] -= scheme.m;
  if (scheme.e <= max_degree) denom[scheme.e] -= scheme.n;
  if (relator_degree && *relator_degree <= max_degree) denom[*relator_degree] += 1;
  t.closed_form = ps_inverse(denom);
  t.pbw = pbw_product(dims, max_degree, -1);
  for (int k = 0; k <= max_degree; ++k) {
    t.match.push_back(t.closed_form[k] == t.pbw[k]);
    t.all_match = t.all_match && t.match.back();
  }
  return t;
}

HilbertTable hilbert_crosscheck(const TorsionReport& report, const WeightScheme& scheme,
                                std::optional<int> relator_degree, int max_degree) {
  return hilbert_crosscheck(report.quotient_dims(), scheme, relator_degree, max_degree);
}

std::vector<ModPTable> modp_dimension_check(const TorsionReport& report, const std::vector<IdealComponent>& components,
                                            const std::vector<std::uint64_t>& primes) {
  std::vector<ModPTable> out;
  for (auto p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("modp_dimension_check: " + std::to_string(p) + " is not prime");
    ModPTable table;
    table.prime = p;
    for (const auto& deg : report.degrees) {
      if (deg.budget_exceeded) break;
      ModPRow row;
      row.degree = deg.degree;
      row.integer_rank = deg.rank;
      if (deg.degree >= report.relator_degree)
        row.modp_rank = rank_mod_p(components[deg.degree - report.relator_degree].matrix, p);
      row.integer_quotient_dim = deg.free_dim - row.integer_rank;
      row.modp_quotient_dim = deg.free_dim - row.modp_rank;
      row.match = row.integer_rank == row.modp_rank;
      table.all_match = table.all_match && row.match;
      table.rows.push_back(row);
    }
    out.push_back(std::move(table));
  }
  return out;
}

std::vector<ModPTable> modp_dimension_check(const LieElement& rho, int max_degree,
                                            const std::vector<std::uint64_t>& primes, const Budget& budget) {
  const auto components = ideal_components(rho, max_degree, budget);
  return modp_dimension_check(torsion_free_certificate(rho, max_degree, components), components, primes);
}

}  // namespace onerel
