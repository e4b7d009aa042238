#include <gtest/gtest.h>

#include <random>

#include "onerel/smith.hpp"

using namespace onerel;

namespace {

using Dense = std::vector<std::vector<Integer>>;

SparseMatrix<Integer> to_sparse(const Dense& a, std::size_t cols) {
  SparseMatrix<Integer> m;
  m.cols = cols;
  for (const auto& row : a) {
    SparseRow<Integer> r;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) r.emplace_back(c, row[c]);
    m.rows.push_back(std::move(r));
  }
  return m;
}

Integer det_laplace(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    d += (j % 2 ? -1 : 1) * a[0][j] * det_laplace(minor);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors: D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}.
SmithForm minors_oracle(const Dense& a, std::size_t cols) {
  SmithForm f;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.size(), cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.size(), k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense sub;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(a[i][j]);
          sub.push_back(std::move(row));
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(det_laplace(sub))).get_mpz_t());
      }
    if (g == 0) break;
    f.divisors.push_back(g / prev);
    prev = g;
    ++f.rank;
  }
  return f;
}

std::size_t naive_rank_mod_p(Dense a, std::size_t cols, long p) {
  std::vector<std::vector<long>> m;
  for (const auto& row : a) {
    std::vector<long> r;
    for (const auto& v : row) r.push_back(Integer(((v % p) + p) % p).get_si());
    m.push_back(std::move(r));
  }
  auto power = [p](long b, long e) {
    long r = 1;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long inv = power(m[rank][c], p - 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const long f = m[i][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, int zero_pct) {
  std::uniform_int_distribution<int> v(-range, range), z(0, 99);
  Dense a(rows, std::vector<Integer>(cols, Integer(0)));
  for (auto& row : a)
    for (auto& x : row)
      if (z(rng) >= zero_pct) x = v(rng);
  return a;
}

std::vector<Integer> ints(std::initializer_list<long> l) {
  std::vector<Integer> r;
  for (long v : l) r.emplace_back(v);
  return r;
}

}  // namespace

TEST(Smith, KnownExample) {
  Dense a{ints({2, 4, 4}), ints({-6, 6, 12}), ints({10, -4, -16})};
  auto f = smith_normal_form(to_sparse(a, 3));
  EXPECT_EQ(f.rank, 3u);
  EXPECT_EQ(f.divisors, ints({2, 6, 12}));
  EXPECT_EQ(smith_normal_form_dense(a).divisors, ints({2, 6, 12}));
}

TEST(Smith, EdgeShapes) {
  SparseMatrix<Integer> empty;
  empty.cols = 4;
  EXPECT_EQ(smith_normal_form(empty).rank, 0u);
  Dense zeros(3, ints({0, 0}));
  EXPECT_EQ(smith_normal_form(to_sparse(zeros, 2)).rank, 0u);
  Dense one{ints({0, -4, 0})};
  EXPECT_EQ(smith_normal_form(to_sparse(one, 3)).divisors, ints({4}));
  Dense dup{ints({1, 2}), ints({1, 2}), ints({2, 4})};
  EXPECT_EQ(smith_normal_form(to_sparse(dup, 2)).divisors, ints({1}));
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    auto a = random_dense(rng, r, c, i % 2 ? 3 : 9, 30);
    auto oracle = minors_oracle(a, c);
    auto f = smith_normal_form(to_sparse(a, c));
    EXPECT_EQ(f.rank, oracle.rank);
    EXPECT_EQ(f.divisors, oracle.divisors);
    EXPECT_EQ(smith_normal_form_dense(a).divisors, oracle.divisors);
  }
}

TEST(Smith, SparseAgreesWithDenseOnLargerMatrices) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = 5 + i % 20, c = 5 + (i * 7) % 25;
    auto a = random_dense(rng, r, c, 2, 75);
    auto f = smith_normal_form(to_sparse(a, c));
    EXPECT_EQ(f.divisors, smith_normal_form_dense(a).divisors);
    for (std::size_t k = 1; k < f.divisors.size(); ++k) EXPECT_EQ(f.divisors[k] % f.divisors[k - 1], 0);
  }
}

TEST(RankModP, MatchesNaiveElimination) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = 1 + i % 7, c = 1 + (i / 7) % 7;
    auto a = random_dense(rng, r, c, 6, 40);
    const auto m = to_sparse(a, c);
    for (long p : {2, 3, 5, 7}) EXPECT_EQ(rank_mod_p(m, p), naive_rank_mod_p(a, c, p));
  }
}

TEST(RankModP, RelatesToSmithForm) {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 200; ++i) {
    auto a = random_dense(rng, 4, 5, 8, 30);
    auto f = smith_normal_form(to_sparse(a, 5));
    for (long p : {2, 3, 5, 7}) {
      std::size_t expected = 0;
      for (const auto& d : f.divisors) expected += d % p != 0;
      EXPECT_EQ(rank_mod_p(to_sparse(a, 5), p), expected);
    }
  }
  EXPECT_THROW(rank_mod_p(SparseMatrix<Integer>{}, 4), std::invalid_argument);
}

TEST(Format, DenseDump) {
  Dense a{ints({1, 0, -2}), ints({0, 3, 0})};
  EXPECT_EQ(format_dense(to_sparse(a, 3)), "1 0 -2\n0 3 0\n");
}
