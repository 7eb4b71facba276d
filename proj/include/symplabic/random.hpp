#pragma once

#include "symplabic/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace symplabic {

using Rng = std::mt19937_64;

// Reduction modulo keeps the streams identical across standard libraries.
inline int random_int(Rng &g, int lo, int hi) { return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }

inline Rational random_rational(Rng &g, int bound = 5, int max_den = 3)
{
  int p = random_int(g, -bound, bound);
  return Rational(p, random_int(g, 1, max_den));
}

inline Rational random_positive_rational(Rng &g, int bound = 9, int max_den = 4)
{
  return Rational(random_int(g, 1, bound), random_int(g, 1, max_den));
}

inline Matrix<Rational> random_full_rank_matrix(Rng &g, int rows, int cols)
{
  for (;;) {
    Matrix<Rational> m(rows, cols);
    for (auto &r : m.a)
      for (auto &x : r)
        x = random_rational(g);
    if (rank(m) == rows)
      return m;
  }
}

// Rows added one at a time, each drawn from the symplectic complement of the
// rows so far.
inline Matrix<Rational> random_lagrangian_matrix(Rng &g, int n)
{
  int N = 2 * n;
  auto E = symplectic_form_matrix<Rational>(n);
  std::vector<std::vector<Rational>> rows;
  while (static_cast<int>(rows.size()) < n) {
    int m = static_cast<int>(rows.size());
    Matrix<Rational> A(m, N);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= N; ++j)
        for (int l = 1; l <= N; ++l)
          A(i, j) += rows[i - 1][l - 1] * E(l, j);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 1; c <= N && r < m; ++c) {
      int p = r + 1;
      while (p <= m && A(p, c) == 0)
        ++p;
      if (p > m)
        continue;
      std::swap(A.a[p - 1], A.a[r]);
      ++r;
      Rational f = A(r, c);
      for (int j = 1; j <= N; ++j)
        A(r, j) /= f;
      for (int i = 1; i <= m; ++i)
        if (i != r && A(i, c) != 0) {
          Rational h = A(i, c);
          for (int j = 1; j <= N; ++j)
            A(i, j) -= h * A(r, j);
        }
      pivots.push_back(c);
    }
    std::vector<Rational> v(N, Rational(0));
    for (int c = 1; c <= N; ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
        v[c - 1] = random_rational(g);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Rational s = 0;
      for (int c = 1; c <= N; ++c)
        if (c != pivots[i])
          s += A(static_cast<int>(i) + 1, c) * v[c - 1];
      v[pivots[i] - 1] = -s;
    }
    rows.push_back(v);
    if (rank(Matrix<Rational>(rows)) < static_cast<int>(rows.size()))
      rows.pop_back();
  }
  return Matrix<Rational>(rows);
}

} // namespace symplabic
