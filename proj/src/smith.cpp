#include "onerel/smith.hpp"

#include <map>
#include <sstream>

namespace onerel {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Turns a list of nonzero diagonal entries into a divisibility chain by
// repeatedly replacing (a, b) with (gcd, lcm).
std::vector<Integer> to_divisor_chain(std::vector<Integer> diag) {
  for (auto& d : diag) d = abs(d);
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Integer g = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace

SmithForm smith_normal_form_dense(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return {diag.size(), to_divisor_chain(std::move(diag))};
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      const Integer p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), p.get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), p.get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(a[t][t]);
  }
  return {diag.size(), to_divisor_chain(std::move(diag))};
}

SmithForm smith_normal_form(const SparseMatrix<Integer>& m) {
  auto rows = m.rows;
  const std::size_t units = detail::eliminate_unit_pivots(rows, m.cols);
  SmithForm result{units, std::vector<Integer>(units, Integer(1))};
  if (rows.empty()) return result;

  // Dense residual over the columns that still carry entries.
  std::map<std::size_t, std::size_t> used;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) used.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : used) idx = k++;
  std::vector<std::vector<Integer>> dense(rows.size(), std::vector<Integer>(used.size(), Integer(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) dense[i][used[c]] = v;
  auto rest = smith_normal_form_dense(std::move(dense));
  result.rank += rest.rank;
  result.divisors.insert(result.divisors.end(), rest.divisors.begin(), rest.divisors.end());
  return result;
}

std::size_t rank_mod_p(const SparseMatrix<Integer>& m, std::uint64_t p) {
  Domain<ModP> field(p);
  std::vector<SparseRow<ModP>> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    SparseRow<ModP> out;
    for (const auto& [c, v] : r) {
      auto x = field.from_integer(v);
      if (x.value() != 0) out.emplace_back(c, x);
    }
    rows.push_back(std::move(out));
  }
  return detail::eliminate_unit_pivots(rows, m.cols);
}

std::string format_dense(const SparseMatrix<Integer>& m) {
  std::ostringstream out;
  for (const auto& r : m.rows) {
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out << ' ';
      if (next < r.size() && r[next].first == c)
        out << r[next++].second.get_str();
      else
        out << '0';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace onerel
