#ifndef SYMPLABIC_POSITROID_HPP
#define SYMPLABIC_POSITROID_HPP

#include "symplabic/affine.hpp"
#include "symplabic/measurement.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace symplabic {

// Position of x in the order a < a+1 < ... < n < 1 < ... < a-1.
inline int shifted_rank(int x, int a, int n) { return ((x - a) % n + n) % n; }

inline Subset sorted_shifted(Subset I, int a, int n)
{
  std::sort(I.begin(), I.end(), [&](int x, int y) { return shifted_rank(x, a, n) < shifted_rank(y, a, n); });
  return I;
}

inline bool shifted_leq(const Subset &I, const Subset &J, int a, int n)
{
  if (I.size() != J.size())
    throw std::invalid_argument("subsets of different sizes");
  auto si = sorted_shifted(I, a, n), sj = sorted_shifted(J, a, n);
  for (std::size_t t = 0; t < si.size(); ++t)
    if (shifted_rank(si[t], a, n) > shifted_rank(sj[t], a, n))
      return false;
  return true;
}

struct GrassmannNecklace {
  int n = 0, k = 0;
  std::vector<Subset> sets; // sets[a-1] = I_a

  friend bool operator==(const GrassmannNecklace &, const GrassmannNecklace &) = default;
};

inline bool necklace_step_ok(const GrassmannNecklace &N)
{
  if (static_cast<int>(N.sets.size()) != N.n)
    return false;
  for (int i = 1; i <= N.n; ++i) {
    auto const &I = N.sets[i - 1];
    auto const &J = N.sets[i % N.n];
    if (static_cast<int>(I.size()) != N.k)
      return false;
    std::set<int> a(I.begin(), I.end()), b(J.begin(), J.end());
    if (!a.count(i)) {
      if (a != b)
        return false;
      continue;
    }
    a.erase(i);
    std::set<int> extra;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(extra, extra.end()));
    std::set<int> missing;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(missing, missing.end()));
    if (extra.size() != 1 || !missing.empty())
      return false;
  }
  return true;
}

// The lex-first basis rule at position 1, transported to every a by
// relabelling a as 1.
inline GrassmannNecklace necklace_from_decorated(const DecoratedPermutation &d, int k)
{
  int n = d.sigma.size();
  GrassmannNecklace out{n, k, {}};
  for (int a = 1; a <= n; ++a) {
    auto rho = [&](int x) { return shifted_rank(x, a, n) + 1; };     // a -> 1
    auto rho_inv = [&](int y) { return (y - 1 + a - 1) % n + 1; };   // 1 -> a
    Subset I;
    for (int i = 1; i <= n; ++i) {
      int x = rho_inv(i);
      int pre = rho(d.sigma.inverse()(x));
      bool white_fixed = d.sigma(x) == x && d.colors.at(x - 1) == FixedColor::white;
      if (pre > i || white_fixed)
        I.push_back(x);
    }
    std::sort(I.begin(), I.end());
    if (static_cast<int>(I.size()) != k)
      throw std::invalid_argument("decorated permutation is not of the given type");
    out.sets.push_back(I);
  }
  if (!necklace_step_ok(out))
    throw std::logic_error("necklace step condition fails");
  return out;
}

inline GrassmannNecklace necklace_of(const Bd &f) { return necklace_from_decorated(to_decorated(f), f.k()); }

// Inverse of necklace_of: f(a) is read off from the element that enters
// when passing from I_a to I_{a+1}.
inline Bd bd_from_necklace(const GrassmannNecklace &N)
{
  if (!necklace_step_ok(N))
    throw std::invalid_argument("not a Grassmann necklace");
  int n = N.n;
  std::vector<int> win(n);
  for (int a = 1; a <= n; ++a) {
    auto const &Ia = N.sets[a - 1];
    auto const &Inext = N.sets[a % n];
    if (!std::binary_search(Ia.begin(), Ia.end(), a)) {
      win[a - 1] = a;
      continue;
    }
    Subset rest = Ia;
    rest.erase(std::find(rest.begin(), rest.end(), a));
    Subset entered;
    std::set_difference(Inext.begin(), Inext.end(), rest.begin(), rest.end(), std::back_inserter(entered));
    if (entered.size() != 1)
      throw std::invalid_argument("not a Grassmann necklace");
    int j = entered[0];
    win[a - 1] = j > a ? j : j + n;
  }
  Bd f(win);
  if (!(necklace_of(f).sets == N.sets))
    throw std::invalid_argument("not a Grassmann necklace");
  return f;
}

using Positroid = std::set<Subset>;

inline Positroid positroid_from_necklace(const GrassmannNecklace &N)
{
  Positroid out;
  for (auto const &J : k_subsets(N.k, N.n)) {
    bool ok = true;
    for (int a = 1; a <= N.n && ok; ++a)
      ok = shifted_leq(N.sets[a - 1], J, a, N.n);
    if (ok)
      out.insert(J);
  }
  return out;
}

inline GrassmannNecklace necklace_from_positroid(const Positroid &M, int n)
{
  if (M.empty())
    throw std::invalid_argument("empty basis set");
  int k = static_cast<int>(M.begin()->size());
  GrassmannNecklace out{n, k, {}};
  for (int a = 1; a <= n; ++a) {
    auto key = [&](const Subset &J) {
      std::vector<int> r;
      for (int x : sorted_shifted(J, a, n))
        r.push_back(shifted_rank(x, a, n));
      return r;
    };
    Subset best = *M.begin();
    for (auto const &J : M)
      if (key(J) < key(best))
        best = J;
    out.sets.push_back(best);
  }
  return out;
}

template <class S> Positroid matroid_of_point(const PlueckerVector<S> &p)
{
  if (p.coords.empty())
    throw std::invalid_argument("zero Pluecker vector");
  return p.support();
}

inline bool is_type_C_necklace(const GrassmannNecklace &N)
{
  if (N.n % 2 != 0 || 2 * N.k != N.n)
    throw std::invalid_argument("necklace is not on (n,2n)");
  int m = N.n;
  for (int i = 1; i <= m; ++i) {
    int j = (m + 1 - i) % m + 1; // i' + 1 modulo 2n
    if (N.sets[i - 1] != reflect_set(N.sets[j - 1], m))
      return false;
  }
  return true;
}

inline bool is_type_C_positroid(const Positroid &M, int n2)
{
  if (M.empty() || static_cast<int>(2 * M.begin()->size()) != n2)
    throw std::invalid_argument("positroid is not on (n,2n)");
  for (auto const &I : M)
    if (!M.count(reflect_set(I, n2)))
      return false;
  return true;
}

// Type A: k rows of width at most n-k. Type B (type C Weyl group): staircase
// of size n whose j-th row from the bottom holds at most j boxes. Rows are
// listed bottom row first; fill[j][c] is true for '+'.
struct LeDiagram {
  CoxeterType type = CoxeterType::A;
  int k = 0, n = 0;
  std::vector<int> shape;
  std::vector<std::vector<bool>> fill;

  friend bool operator==(const LeDiagram &, const LeDiagram &) = default;
};

inline int le_rows(const LeDiagram &D) { return D.type == CoxeterType::A ? D.k : D.n; }

// Longest allowed row, rows counted from the bottom starting at 1.
inline int le_row_capacity(const LeDiagram &D, int j) { return D.type == CoxeterType::A ? D.n - D.k : j; }

inline bool le_shape_ok(const LeDiagram &D)
{
  int rows = le_rows(D);
  if (static_cast<int>(D.shape.size()) != rows || static_cast<int>(D.fill.size()) != rows)
    return false;
  for (int j = 1; j <= rows; ++j) {
    int len = D.shape[j - 1];
    if (len < 0 || len > le_row_capacity(D, j) || static_cast<int>(D.fill[j - 1].size()) != len)
      return false;
    // every box needs the box below it
    if (j > 1 && D.shape[j - 2] < std::min(len, le_row_capacity(D, j - 1)))
      return false;
  }
  return true;
}

// Simple reflection index of the box in row j (from the bottom), column c.
inline int le_label(const LeDiagram &D, int j, int c)
{
  return D.type == CoxeterType::A ? D.k - j + c : D.n - j + c;
}

inline bool is_diagonal_box(const LeDiagram &D, int j, int c)
{
  return D.type == CoxeterType::C && c == le_row_capacity(D, j);
}

inline bool le_diagram_valid(const LeDiagram &D)
{
  if (!le_shape_ok(D))
    throw std::invalid_argument("malformed Le-diagram shape");
  for (std::size_t j = 0; j < D.shape.size(); ++j)
    for (int c = 0; c < D.shape[j]; ++c) {
      if (D.fill[j][c])
        continue;
      bool left = false, below = false;
      for (int c2 = 0; c2 < c; ++c2)
        left = left || D.fill[j][c2];
      for (std::size_t j2 = 0; j2 < j; ++j2)
        below = below || (c < D.shape[j2] && D.fill[j2][c]);
      if (left && below)
        return false;
      if (left && is_diagonal_box(D, static_cast<int>(j) + 1, c + 1))
        return false;
    }
  return true;
}

// Reduced word of w_Y and the kept-letter mask (0 boxes kept).
inline std::pair<Word, std::vector<bool>> le_word(const LeDiagram &D)
{
  Word w{D.type, D.type == CoxeterType::A ? D.n - 1 : D.n, {}};
  std::vector<bool> keep;
  for (std::size_t j = 0; j < D.shape.size(); ++j)
    for (int c = 0; c < D.shape[j]; ++c) {
      w.letters.push_back(le_label(D, static_cast<int>(j) + 1, c + 1));
      keep.push_back(!D.fill[j][c]);
    }
  std::reverse(w.letters.begin(), w.letters.end());
  std::reverse(keep.begin(), keep.end());
  return {w, keep};
}

inline std::pair<Permutation, Permutation> le_to_pair(const LeDiagram &D)
{
  if (!le_diagram_valid(D))
    throw std::invalid_argument("not a Le-diagram");
  auto [w, keep] = le_word(D);
  Word u{w.type, w.rank, {}};
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    if (keep[i])
      u.letters.push_back(w.letters[i]);
  return {product(u), product(w)};
}

inline std::vector<LeDiagram> enumerate_le(CoxeterType type, int k, int n)
{
  LeDiagram base{type, type == CoxeterType::A ? k : n, n, {}, {}};
  if (type == CoxeterType::A && (k < 0 || k > n))
    throw std::invalid_argument("need 0 <= k <= n");
  int rows = le_rows(base);
  std::vector<LeDiagram> out;
  std::vector<int> shape(rows, 0);
  std::function<void(int)> shapes = [&](int j) {
    if (j > rows) {
      int boxes = 0;
      for (int s : shape)
        boxes += s;
      for (long mask = 0; mask < (1L << boxes); ++mask) {
        LeDiagram D = base;
        D.shape = shape;
        int b = 0;
        for (int s : shape) {
          std::vector<bool> row;
          for (int c = 0; c < s; ++c)
            row.push_back(mask >> b++ & 1);
          D.fill.push_back(row);
        }
        if (le_diagram_valid(D))
          out.push_back(D);
      }
      return;
    }
    for (int len = 0; len <= le_row_capacity(base, j); ++len) {
      if (j > 1 && shape[j - 2] < std::min(len, le_row_capacity(base, j - 1)))
        continue;
      shape[j - 1] = len;
      shapes(j + 1);
    }
  };
  shapes(1);
  return out;
}

// Inverse of le_to_pair, by lookup among the diagrams of the same size.
inline LeDiagram le_from_pair(CoxeterType type, const Permutation &u, const Permutation &w, int k)
{
  int n = type == CoxeterType::A ? w.size() : w.size() / 2;
  for (auto const &D : enumerate_le(type, k, n)) {
    auto [du, dw] = le_to_pair(D);
    if (du == u && dw == w)
      return D;
  }
  throw std::invalid_argument("pair is not a canonical representative of this type");
}

} // namespace symplabic

#endif
