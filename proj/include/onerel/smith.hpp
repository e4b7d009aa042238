#pragma once

// Exact elimination on sparse integer matrices: Smith normal form over Z
// and rank over F_p. Both share the unit-pivot sparse elimination below,
// templated on the coefficient domain.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "onerel/scalar.hpp"

namespace onerel {

template <class Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column

template <class Scalar>
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow<Scalar>> rows;

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& r : rows) k += r.size();
    return k;
  }
};

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero elementary divisors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> divisors;
};

namespace detail {

/// Returns a - f*b for sorted sparse rows.
template <class Scalar>
SparseRow<Scalar> axpy_row(const SparseRow<Scalar>& a, const Scalar& f, const SparseRow<Scalar>& b) {
  SparseRow<Scalar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = b[j].second * f;
      out.emplace_back(b[j].first, -v);
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!Domain<Scalar>::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Scalar>
const Scalar* find_entry(const SparseRow<Scalar>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

template <class Scalar>
Scalar unit_inverse(const Scalar& u) {
  if constexpr (std::is_same_v<Scalar, ModP>)
    return u.inverse();
  else
    return u;  // +-1 over Z
}

/// Pivots on unit entries (Markowitz-style: sparsest row, then sparsest
/// column) until none remain. Each pivot is a unimodular step that splits
/// off a 1x1 block (1). Rows left over contain no unit entries and are
/// returned in `rows`; the number of pivots is returned.
template <class Scalar>
std::size_t eliminate_unit_pivots(std::vector<SparseRow<Scalar>>& rows, std::size_t cols) {
  using D = Domain<Scalar>;
  std::vector<std::vector<std::size_t>> col_rows(cols);
  std::vector<std::size_t> col_count(cols, 0);
  std::vector<char> alive(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) {
      col_rows[c].push_back(r);
      ++col_count[c];
    }

  std::size_t pivots = 0;
  while (true) {
    std::size_t best_row = rows.size(), best_col = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      const std::size_t rn = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        if (!D::is_unit(v)) continue;
        const std::size_t cost = rn * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_row == rows.size()) break;

    const auto pivot_row = std::move(rows[best_row]);
    rows[best_row].clear();
    alive[best_row] = 0;
    for (const auto& [c, v] : pivot_row) --col_count[c];
    const Scalar inv = unit_inverse(*find_entry(pivot_row, best_col));

    auto targets = std::move(col_rows[best_col]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t s : targets) {
      if (!alive[s]) continue;
      const Scalar* entry = find_entry(rows[s], best_col);
      if (!entry) continue;
      const Scalar f = *entry * inv;
      for (const auto& [c, v] : rows[s]) --col_count[c];
      auto updated = axpy_row(rows[s], f, pivot_row);
      for (const auto& [c, v] : updated) {
        ++col_count[c];
        if (!find_entry(rows[s], c)) col_rows[c].push_back(s);
      }
      rows[s] = std::move(updated);
    }
    // Column operations now clear the rest of the pivot row without
    // touching any other row.
    ++pivots;
  }

  std::vector<SparseRow<Scalar>> rest;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) rest.push_back(std::move(rows[r]));
  rows = std::move(rest);
  return pivots;
}

}  // namespace detail

/// Smith normal form over arbitrary-precision integers. Unit pivots are
/// taken sparsely; whatever survives goes through dense elimination with
/// smallest-absolute-value pivoting.
SmithForm smith_normal_form(const SparseMatrix<Integer>& m);

/// Dense reference algorithm, used for the residual block and as an oracle.
SmithForm smith_normal_form_dense(std::vector<std::vector<Integer>> a);

/// Rank over F_p of the reduction of m.
std::size_t rank_mod_p(const SparseMatrix<Integer>& m, std::uint64_t p);

/// Plain text dump: one row per line, space-separated integers.
std::string format_dense(const SparseMatrix<Integer>& m);

}  // namespace onerel
