#ifndef SYMPLABIC_LINALG_HPP
#define SYMPLABIC_LINALG_HPP

#include "symplabic/bridge.hpp"
#include "symplabic/measurement.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplabic {

template <class S> struct Matrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<S>> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(r, std::vector<S>(c, S(0))) {}
  explicit Matrix(std::vector<std::vector<S>> entries) : a(std::move(entries))
  {
    rows = static_cast<int>(a.size());
    cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (auto const &r : a)
      if (static_cast<int>(r.size()) != cols)
        throw std::invalid_argument("matrix rows of unequal length");
  }

  // 1-based access
  S &operator()(int i, int j) { return a[i - 1][j - 1]; }
  const S &operator()(int i, int j) const { return a[i - 1][j - 1]; }

  bool operator==(const Matrix &o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class S> Matrix<S> operator*(const Matrix<S> &x, const Matrix<S> &y)
{
  if (x.cols != y.rows)
    throw std::invalid_argument("matrix shapes do not match");
  Matrix<S> out(x.rows, y.cols);
  for (int i = 1; i <= x.rows; ++i)
    for (int j = 1; j <= y.cols; ++j) {
      S s(0);
      for (int l = 1; l <= x.cols; ++l)
        s = s + x(i, l) * y(l, j);
      out(i, j) = s;
    }
  return out;
}

template <class S> Matrix<S> transpose(const Matrix<S> &m)
{
  Matrix<S> t(m.cols, m.rows);
  for (int i = 1; i <= m.rows; ++i)
    for (int j = 1; j <= m.cols; ++j)
      t(j, i) = m(i, j);
  return t;
}

template <class S> Matrix<S> submatrix_columns(const Matrix<S> &m, const Subset &J)
{
  Matrix<S> out(m.rows, static_cast<int>(J.size()));
  for (int i = 1; i <= m.rows; ++i)
    for (std::size_t c = 0; c < J.size(); ++c)
      out(i, static_cast<int>(c) + 1) = m(i, J[c]);
  return out;
}

// Laplace expansion along the first row; no division needed.
template <class S> S determinant(const Matrix<S> &m)
{
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0)
    return S(1);
  if (n == 1)
    return m(1, 1);
  S det(0);
  for (int c = 1; c <= n; ++c) {
    if (is_zero(m(1, c)))
      continue;
    Matrix<S> minor(n - 1, n - 1);
    for (int i = 2; i <= n; ++i)
      for (int j = 1, jj = 1; j <= n; ++j)
        if (j != c)
          minor(i - 1, jj++) = m(i, j);
    S term = m(1, c) * determinant(minor);
    det = (c % 2 == 1) ? det + term : det - term;
  }
  return det;
}

// Gaussian elimination over the rationals.
inline Rational determinant(Matrix<Rational> m)
{
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows;
  Rational det(1);
  for (int c = 1; c <= n; ++c) {
    int p = c;
    while (p <= n && m(p, c) == 0)
      ++p;
    if (p > n)
      return Rational(0);
    if (p != c) {
      std::swap(m.a[p - 1], m.a[c - 1]);
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i <= n; ++i) {
      if (m(i, c) == 0)
        continue;
      Rational f = m(i, c) / m(c, c);
      for (int j = c; j <= n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline int rank(Matrix<Rational> m)
{
  int r = 0;
  for (int c = 1; c <= m.cols && r < m.rows; ++c) {
    int p = r + 1;
    while (p <= m.rows && m(p, c) == 0)
      ++p;
    if (p > m.rows)
      continue;
    std::swap(m.a[p - 1], m.a[r]);
    ++r;
    for (int i = r + 1; i <= m.rows; ++i) {
      if (m(i, c) == 0)
        continue;
      Rational f = m(i, c) / m(r, c);
      for (int j = c; j <= m.cols; ++j)
        m(i, j) -= f * m(r, j);
    }
  }
  return r;
}

template <class S> PlueckerVector<S> minors_pluecker(const Matrix<S> &m)
{
  if (m.rows > m.cols)
    throw std::invalid_argument("more rows than columns");
  PlueckerVector<S> p{m.rows, m.cols, {}};
  for (auto const &J : k_subsets(m.rows, m.cols))
    p.set(J, determinant(submatrix_columns(m, J)));
  if (p.coords.empty())
    throw std::invalid_argument("matrix is not of full row rank");
  return p;
}

// Right multiplication by the elementary matrix adding t times column a to
// column b.
template <class S> void right_elementary(Matrix<S> &m, int a, int b, const S &t)
{
  for (int i = 1; i <= m.rows; ++i)
    m(i, b) = m(i, b) + t * m(i, a);
}

template <class S>
Matrix<S> bridge_matrix(const std::set<int> &start, int n, const std::vector<std::pair<int, int>> &bridges,
                        const std::vector<S> &params)
{
  if (bridges.size() != params.size())
    throw std::invalid_argument("one parameter per bridge required");
  Matrix<S> m(static_cast<int>(start.size()), n);
  int row = 1;
  for (int c : start)
    m(row++, c) = S(1);
  for (std::size_t r = 0; r < bridges.size(); ++r) {
    auto [a, b] = bridges[r];
    S t = params[r];
    if (bridge_sign_negative(start, a, b))
      t = S(0) - t;
    right_elementary(m, a, b, t);
  }
  return m;
}

// params are indexed in bridge addition order.
template <class S>
Matrix<S> bridge_matrix_parametrization(const Permutation &u, const Permutation &w, int k,
                                        const std::vector<S> &params, std::optional<Word> word = std::nullopt)
{
  auto bg = bridge_graph(u, w, k, word);
  std::vector<std::pair<int, int>> bs;
  for (auto const &b : bg.bridges)
    bs.emplace_back(b.a, b.b);
  return bridge_matrix(bg.start_set, u.size(), bs, params);
}

template <class S> Matrix<S> symplectic_form_matrix(int n)
{
  if (n < 1)
    throw std::invalid_argument("symplectic form needs n >= 1");
  Matrix<S> E(2 * n, 2 * n);
  for (int j = 1; j <= 2 * n; ++j)
    E(2 * n + 1 - j, j) = S(j % 2 == 0 ? 1 : -1);
  return E;
}

template <class S> bool is_lagrangian_matrix(const Matrix<S> &m)
{
  if (m.cols % 2 != 0 || 2 * m.rows != m.cols)
    throw std::invalid_argument("expected an n x 2n matrix");
  auto prod = m * symplectic_form_matrix<S>(m.rows) * transpose(m);
  for (auto const &r : prod.a)
    for (auto const &x : r)
      if (!is_zero(x))
        return false;
  return true;
}

struct LagrangianReport {
  bool pass = true;
  std::string witness; // first failing relation
};

enum class LagrangianMode { cutout, lemma };

template <class S> LagrangianReport lagrangian_relations_check(const PlueckerVector<S> &p, LagrangianMode mode)
{
  if (p.coords.empty())
    throw std::invalid_argument("zero Pluecker vector");
  if (p.n != 2 * p.k)
    throw std::invalid_argument("expected a point of Gr(n,2n)");
  int N = p.n;
  auto differ = [&](const Subset &A, const Subset &B) -> LagrangianReport {
    return {false, "D" + subset_key(A) + " != D" + subset_key(B)};
  };
  if (mode == LagrangianMode::cutout) {
    for (auto const &I : k_subsets(p.k, N)) {
      Subset R = reflect_set(I, N);
      if (I < R && !(p.at(I) == p.at(R)))
        return differ(I, R);
    }
    return {};
  }
  Subset I = p.coords.begin()->first;
  std::set<int> Is(I.begin(), I.end());
  for (int i = 1; i <= p.k; ++i)
    if (Is.count(i) == Is.count(N + 1 - i))
      return {false, "lex-first basis " + subset_key(I) + " contains both or neither of " + std::to_string(i) +
                         "," + std::to_string(N + 1 - i)};
  auto swap_in = [&](int out, int in) {
    std::set<int> s = Is;
    s.erase(out);
    s.insert(in);
    return Subset(s.begin(), s.end());
  };
  for (int j = 0; j < p.k; ++j)
    for (int k = j + 1; k < p.k; ++k) {
      int ij = I[j], ik = I[k];
      if (!(ij < N + 1 - ik))
        continue;
      Subset A = swap_in(ij, N + 1 - ik), B = swap_in(ik, N + 1 - ij);
      if (!(p.at(A) == p.at(B)))
        return differ(A, B);
    }
  return {};
}

} // namespace symplabic

#endif
