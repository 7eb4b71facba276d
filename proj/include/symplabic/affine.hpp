#ifndef SYMPLABIC_AFFINE_HPP
#define SYMPLABIC_AFFINE_HPP

#include "symplabic/coxeter.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplabic {

// Bounded affine permutation given by its window f(1..N); f(i+N) = f(i)+N.
class BoundedAffinePermutation {
public:
  BoundedAffinePermutation() = default;
  explicit BoundedAffinePermutation(std::vector<int> window) : w_(std::move(window))
  {
    int N = size();
    std::vector<bool> seen(N, false);
    long sum = 0;
    for (int i = 1; i <= N; ++i) {
      int v = w_[i - 1];
      if (v < i || v > i + N)
        throw std::invalid_argument("window entry violates i <= f(i) <= i+N");
      int r = ((v - 1) % N + N) % N;
      if (seen[r])
        throw std::invalid_argument("window is not a bijection modulo N");
      seen[r] = true;
      sum += v - i;
    }
    if (N > 0 && sum % N)
      throw std::invalid_argument("window does not define an affine permutation");
    k_ = N ? static_cast<int>(sum / N) : 0;
  }

  int size() const { return static_cast<int>(w_.size()); }
  int k() const { return k_; }
  std::vector<int> const &window() const { return w_; }

  int operator()(int i) const
  {
    int N = size();
    int r = ((i - 1) % N + N) % N;
    return w_[r] + (i - 1 - r);
  }

  friend bool operator==(const BoundedAffinePermutation &, const BoundedAffinePermutation &) = default;
  friend auto operator<=>(const BoundedAffinePermutation &, const BoundedAffinePermutation &) = default;

  std::string str() const
  {
    std::string s = "[";
    for (int i = 0; i < size(); ++i)
      s += (i ? "," : "") + std::to_string(w_[i]);
    return s + "]";
  }

private:
  std::vector<int> w_;
  int k_ = 0;
};

using Bd = BoundedAffinePermutation;

inline Bd translation_element(const std::set<int> &J, int n)
{
  std::vector<int> win(n);
  for (int i = 1; i <= n; ++i)
    win[i - 1] = i + (J.count(i) ? n : 0);
  return Bd(win);
}

// Inversion classes (i,j), i<j, f(i)>f(j), modulo simultaneous shift by N.
inline int length_A(const Bd &f)
{
  int N = f.size(), l = 0;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j < i + N; ++j)
      if (f(i) > f(j))
        ++l;
  return l;
}

inline bool is_type_C(const Bd &f)
{
  int N = f.size();
  if (N % 2)
    return false;
  for (int a = 1; a <= N; ++a)
    if (f(N + 1 - a) != 2 * N + 1 - f(a))
      return false;
  return true;
}

// Inversion classes further identified under (i,j) -> (N+1-j, N+1-i).
inline int length_C(const Bd &f)
{
  if (!is_type_C(f))
    throw std::invalid_argument("not a type C bounded affine permutation");
  int N = f.size(), total = 0, fixed = 0;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j < i + N; ++j)
      if (f(i) > f(j)) {
        ++total;
        if (((i + j - 1) % N + N) % N == 0)
          ++fixed;
      }
  return (total + fixed) / 2;
}

inline Bd from_pair(const Permutation &u, const Permutation &w, int k)
{
  int n = u.size();
  Permutation wi = w.inverse();
  std::vector<int> win(n);
  for (int i = 1; i <= n; ++i) {
    int j = wi(i);
    win[i - 1] = u(j) + (j <= k ? n : 0);
  }
  return Bd(win);
}

inline std::pair<Permutation, Permutation> to_pair(const Bd &f)
{
  int n = f.size(), k = f.k();
  std::set<int> top;
  for (int i = 1; i <= n; ++i)
    if (f(i) > n)
      top.insert(i);
  Permutation w = grassmannian_from_set(n, top);
  std::vector<int> u(n);
  for (int j = 1; j <= n; ++j)
    u[j - 1] = f(w(j)) - (j <= k ? n : 0);
  return {Permutation(u), w};
}

enum class FixedColor { none, black, white };

struct DecoratedPermutation {
  Permutation sigma;
  std::vector<FixedColor> colors; // meaningful only at fixed points

  friend bool operator==(const DecoratedPermutation &, const DecoratedPermutation &) = default;
};

inline DecoratedPermutation to_decorated(const Bd &f)
{
  int N = f.size();
  std::vector<int> s(N);
  std::vector<FixedColor> c(N, FixedColor::none);
  for (int i = 1; i <= N; ++i) {
    s[i - 1] = (f(i) - 1) % N + 1;
    if (f(i) == i)
      c[i - 1] = FixedColor::black;
    else if (f(i) == i + N)
      c[i - 1] = FixedColor::white;
  }
  return {Permutation(s), c};
}

inline Bd from_decorated(const DecoratedPermutation &d)
{
  int N = d.sigma.size();
  std::vector<int> win(N);
  for (int i = 1; i <= N; ++i) {
    int s = d.sigma(i);
    if (s > i)
      win[i - 1] = s;
    else if (s < i)
      win[i - 1] = s + N;
    else if (static_cast<int>(d.colors.size()) >= i && d.colors[i - 1] == FixedColor::white)
      win[i - 1] = i + N;
    else if (static_cast<int>(d.colors.size()) >= i && d.colors[i - 1] == FixedColor::black)
      win[i - 1] = i;
    else
      throw std::invalid_argument("fixed point without a color");
  }
  return Bd(win);
}

// Rank-function criterion on the finitely many (i,j) where ranks can differ.
inline bool affine_bruhat_leq(const Bd &f, const Bd &g)
{
  int N = f.size();
  if (g.size() != N || f.k() != g.k())
    return false;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 2; j <= i + N; ++j) {
      int cf = 0, cg = 0;
      for (int a = j - N; a <= i; ++a) {
        cf += f(a) >= j;
        cg += g(a) >= j;
      }
      if (cf > cg)
        return false;
    }
  return true;
}

inline std::vector<Bd> enumerate_Bd(int k, int n)
{
  std::vector<Bd> out;
  std::vector<int> win(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto &&self, int i, int excess) -> void {
    if (i > n) {
      if (excess == k * n)
        out.emplace_back(win);
      return;
    }
    for (int v = i; v <= i + n; ++v) {
      int r = (v - 1) % n;
      if (used[r])
        continue;
      used[r] = true;
      win[i - 1] = v;
      self(self, i + 1, excess + v - i);
      used[r] = false;
    }
  };
  if (n > 0)
    rec(rec, 1, 0);
  return out;
}

inline std::vector<Bd> enumerate_Bd_C(int n)
{
  std::vector<Bd> out;
  for (auto const &f : enumerate_Bd(n, 2 * n))
    if (is_type_C(f))
      out.push_back(f);
  return out;
}

inline std::vector<std::pair<Permutation, Permutation>> enumerate_Q(int k, int n)
{
  std::vector<std::pair<Permutation, Permutation>> out;
  auto perms = all_permutations(n);
  for (auto const &w : perms) {
    if (!is_grassmannian(w, k))
      continue;
    for (auto const &u : perms)
      if (grassmannian_leq(u, w, k))
        out.emplace_back(u, w);
  }
  return out;
}

inline std::vector<std::pair<Permutation, Permutation>> enumerate_Q_C(int n)
{
  std::vector<std::pair<Permutation, Permutation>> out;
  auto elems = all_type_C(n);
  for (auto const &w : elems) {
    if (!is_grassmannian(w, n))
      continue;
    for (auto const &u : elems)
      if (grassmannian_leq(u, w, n))
        out.emplace_back(u, w);
  }
  return out;
}

// Elements of the parabolic subgroup fixing [k] setwise (type A), or the
// type C elements fixing [n] setwise.
inline std::vector<Permutation> parabolic_elements(CoxeterType t, int N, int k)
{
  std::vector<Permutation> out;
  auto all = t == CoxeterType::A ? all_permutations(N) : all_type_C(N / 2);
  for (auto const &z : all) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      ok = z(i) <= k;
    if (ok)
      out.push_back(z);
  }
  return out;
}

// Representatives [uz, wz] of the class of a canonical pair (w Grassmannian).
inline std::vector<std::pair<Permutation, Permutation>>
interval_class(CoxeterType t, const Permutation &u, const Permutation &w, int k)
{
  std::vector<std::pair<Permutation, Permutation>> out;
  int lu = length(t, u);
  for (auto const &z : parabolic_elements(t, u.size(), k))
    if (length(t, u * z) == lu + length(t, z))
      out.emplace_back(u * z, w * z);
  return out;
}

// <u,w> <= <x,y> iff some representative of <x,y> lies inside some
// representative of <u,w>. Both pairs are canonical (w, y Grassmannian).
inline bool q_leq(CoxeterType t, const std::pair<Permutation, Permutation> &a,
                  const std::pair<Permutation, Permutation> &b, int k)
{
  auto A = interval_class(t, a.first, a.second, k);
  auto B = interval_class(t, b.first, b.second, k);
  for (auto const &[u, w] : A)
    for (auto const &[x, y] : B)
      if (bruhat_leq(u, x) && bruhat_leq(y, w))
        return true;
  return false;
}

} // namespace symplabic

#endif
