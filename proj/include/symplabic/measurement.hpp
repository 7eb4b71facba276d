#ifndef SYMPLABIC_MEASUREMENT_HPP
#define SYMPLABIC_MEASUREMENT_HPP

#include "symplabic/moves.hpp"
#include "symplabic/poly.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace symplabic {

using Subset = std::vector<int>; // sorted, 1-based

inline std::string subset_key(const Subset &s)
{
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

// R(I) = [N] minus the reflections N+1-a of a in I.
inline Subset reflect_set(const Subset &I, int N)
{
  std::set<int> out;
  for (int i = 1; i <= N; ++i)
    out.insert(i);
  for (int a : I)
    out.erase(N + 1 - a);
  return Subset(out.begin(), out.end());
}

inline std::vector<Subset> k_subsets(int k, int n)
{
  std::vector<Subset> out;
  Subset cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= n)
    rec(1);
  return out;
}

inline bool is_zero(const Rational &q) { return q == 0; }
inline bool is_zero(const Poly &p) { return p.is_zero(); }
inline bool is_zero(const RationalFunction &r) { return r.is_zero(); }

inline Rational inverse_of(const Rational &q)
{
  if (q == 0)
    throw std::domain_error("weight is not invertible");
  return Rational(1) / q;
}
inline Poly inverse_of(const Poly &p)
{
  if (!p.is_term())
    throw std::domain_error("weight is not invertible (not a single term)");
  return Poly(1).divided_by_term(p);
}
inline RationalFunction inverse_of(const RationalFunction &r) { return RationalFunction(1) / r; }

// Projective point given by its coordinates on k-subsets; zero coordinates
// are not stored.
template <class S> struct PlueckerVector {
  int k = 0, n = 0;
  std::map<Subset, S> coords;

  S at(const Subset &J) const
  {
    auto it = coords.find(J);
    return it == coords.end() ? S(0) : it->second;
  }

  void set(const Subset &J, const S &v)
  {
    if (is_zero(v))
      coords.erase(J);
    else
      coords[J] = v;
  }

  std::set<Subset> support() const
  {
    std::set<Subset> s;
    for (auto const &[J, v] : coords)
      s.insert(J);
    return s;
  }
};

// Equality in projective space, by cross multiplication with the lex-first
// nonzero coordinate.
template <class S> bool projectively_equal(const PlueckerVector<S> &p, const PlueckerVector<S> &q)
{
  if (p.k != q.k || p.n != q.n || p.support() != q.support())
    return false;
  if (p.coords.empty())
    return true;
  auto const &[J0, p0] = *p.coords.begin();
  S q0 = q.at(J0);
  for (auto const &[J, v] : p.coords)
    if (!(v * q0 == q.at(J) * p0))
      return false;
  return true;
}

// Divides by the lex-first coordinate when it is a single term and otherwise
// by the rational content of that coordinate.
inline PlueckerVector<Poly> normalized(const PlueckerVector<Poly> &p)
{
  if (p.coords.empty())
    return p;
  Poly first = p.coords.begin()->second;
  PlueckerVector<Poly> out{p.k, p.n, {}};
  if (first.is_term()) {
    for (auto const &[J, v] : p.coords)
      out.set(J, v.divided_by_term(first));
    return out;
  }
  Poly c(Rational(1) / first.content());
  for (auto const &[J, v] : p.coords)
    out.set(J, v * c);
  return out;
}

inline PlueckerVector<Rational> normalized(const PlueckerVector<Rational> &p)
{
  if (p.coords.empty())
    return p;
  Rational first = p.coords.begin()->second;
  PlueckerVector<Rational> out{p.k, p.n, {}};
  for (auto const &[J, v] : p.coords)
    out.set(J, v / first);
  return out;
}

using Matching = std::set<int>; // edge ids

// Internal vertices ordered breadth-first from the boundary.
inline std::vector<int> elimination_order(const PlabicGraph &g)
{
  std::vector<int> order;
  std::set<int> seen(g.boundary_ids.begin(), g.boundary_ids.end());
  std::deque<int> q(g.boundary_ids.begin(), g.boundary_ids.end());
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (!g.vertex(v).is_boundary())
      order.push_back(v);
    for (int w : g.neighbors(v))
      if (seen.insert(w).second)
        q.push_back(w);
  }
  for (auto const &[id, v] : g.vertices)
    if (!v.is_boundary() && !seen.count(id))
      order.push_back(id);
  return order;
}

// Every matching using each internal vertex exactly once.
inline std::vector<Matching> almost_perfect_matchings(const PlabicGraph &g)
{
  auto order = elimination_order(g);
  std::vector<Matching> out;
  std::set<int> used;
  Matching cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    while (i < order.size() && used.count(order[i]))
      ++i;
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    int v = order[i];
    used.insert(v);
    for (int e : g.vertex(v).rotation) {
      int w = g.edge(e).other(v);
      if (used.count(w))
        continue;
      used.insert(w);
      cur.insert(e);
      rec(i + 1);
      cur.erase(e);
      used.erase(w);
    }
    used.erase(v);
  };
  rec(0);
  return out;
}

inline Subset boundary_partition(const Matching &P, const PlabicGraph &g)
{
  Subset J;
  for (int i = 1; i <= g.n; ++i) {
    auto const &b = g.boundary_vertex(i);
    bool used = false;
    for (int e : b.rotation)
      used = used || P.count(e);
    if ((b.color == Color::black) == used)
      J.push_back(i);
  }
  return J;
}

template <class S>
PlueckerVector<S> boundary_measurement(const PlabicGraph &g, const std::map<int, S> &w)
{
  auto Ps = almost_perfect_matchings(g);
  if (Ps.empty())
    throw std::invalid_argument("graph has no almost perfect matching");
  int k = static_cast<int>(boundary_partition(Ps.front(), g).size());
  std::map<Subset, S> acc;
  for (auto const &P : Ps) {
    Subset J = boundary_partition(P, g);
    if (static_cast<int>(J.size()) != k)
      throw std::logic_error("boundary partitions of different sizes");
    S t(1);
    for (int e : P)
      t = t * w.at(e);
    auto it = acc.find(J);
    if (it == acc.end())
      acc.emplace(J, t);
    else
      it->second = it->second + t;
  }
  PlueckerVector<S> out{k, g.n, {}};
  for (auto const &[J, v] : acc)
    out.set(J, v);
  if (out.coords.empty())
    throw std::logic_error("boundary measurement vanishes");
  return out;
}

// Same sum, memoized on the set of already matched vertices.
template <class S>
PlueckerVector<S> boundary_measurement_memo(const PlabicGraph &g, const std::map<int, S> &w)
{
  auto order = elimination_order(g);
  std::map<int, int> idx;
  int V = 0;
  for (auto const &[id, v] : g.vertices)
    idx[id] = V++;
  using Key = std::vector<bool>;
  using Partial = std::map<std::uint64_t, S>; // boundary-used mask -> weight
  std::map<Key, Partial> memo;
  std::function<Partial(Key &, std::size_t)> rec = [&](Key &used, std::size_t i) -> Partial {
    while (i < order.size() && used[idx[order[i]]])
      ++i;
    if (i == order.size()) {
      std::uint64_t mask = 0;
      for (int b = 1; b <= g.n; ++b)
        if (used[idx[g.boundary_ids[b - 1]]])
          mask |= std::uint64_t(1) << (b - 1);
      return Partial{{mask, S(1)}};
    }
    auto it = memo.find(used);
    if (it != memo.end())
      return it->second;
    Key saved = used;
    Partial res;
    int v = order[i];
    used[idx[v]] = true;
    for (int e : g.vertex(v).rotation) {
      int x = g.edge(e).other(v);
      if (used[idx[x]])
        continue;
      used[idx[x]] = true;
      for (auto const &[m, t] : rec(used, i + 1)) {
        S add = t * w.at(e);
        auto jt = res.find(m);
        if (jt == res.end())
          res.emplace(m, add);
        else
          jt->second = jt->second + add;
      }
      used[idx[x]] = false;
    }
    used[idx[v]] = false;
    memo[saved] = res;
    return res;
  };
  Key used(V, false);
  Partial all = rec(used, 0);
  PlueckerVector<S> out{0, g.n, {}};
  bool first = true;
  for (auto const &[mask, t] : all) {
    Subset J;
    for (int b = 1; b <= g.n; ++b) {
      bool u = mask >> (b - 1) & 1;
      if ((g.boundary_vertex(b).color == Color::black) == u)
        J.push_back(b);
    }
    if (first)
      out.k = static_cast<int>(J.size());
    first = false;
    if (static_cast<int>(J.size()) != out.k)
      throw std::logic_error("boundary partitions of different sizes");
    out.set(J, out.at(J) + t);
  }
  return out;
}

// Multi-source breadth-first forest from the boundary vertices: spanning,
// one boundary vertex per component.
inline std::set<int> gauge_forest(const PlabicGraph &g)
{
  std::set<int> F;
  std::set<int> seen(g.boundary_ids.begin(), g.boundary_ids.end());
  std::deque<int> q(g.boundary_ids.begin(), g.boundary_ids.end());
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.vertex(v).rotation) {
      int x = g.edge(e).other(v);
      if (seen.insert(x).second) {
        F.insert(e);
        q.push_back(x);
      }
    }
  }
  return F;
}

// Scales at internal vertices, working inward from the boundary, so that
// every edge of F carries weight 1.
template <class S>
std::map<int, S> gauge_fix(const PlabicGraph &g, std::map<int, S> w, const std::set<int> &F)
{
  std::set<int> done(g.boundary_ids.begin(), g.boundary_ids.end());
  std::deque<int> q(g.boundary_ids.begin(), g.boundary_ids.end());
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.vertex(v).rotation) {
      if (!F.count(e))
        continue;
      int c = g.edge(e).other(v);
      if (done.count(c))
        continue;
      done.insert(c);
      S f = inverse_of(w.at(e));
      for (int e2 : g.vertex(c).rotation)
        w[e2] = w.at(e2) * f;
      q.push_back(c);
    }
  }
  return w;
}

// Rescales all edges at internal vertex v.
template <class S> std::map<int, S> gauge_action(const PlabicGraph &g, std::map<int, S> w, int v, const S &f)
{
  if (g.vertex(v).is_boundary())
    throw std::invalid_argument("gauge acts only at internal vertices");
  for (int e : g.vertex(v).rotation)
    w[e] = w.at(e) * f;
  return w;
}

} // namespace symplabic

#endif
