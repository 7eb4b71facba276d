#pragma once

// Brute-force oracles, seeded generators and graph surgery shared by the
// unit and acceptance tests. Nothing here calls the library routine it is
// meant to check.

#include "symplabic/io.hpp"
#include "symplabic/random.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

namespace symplabic {
inline void PrintTo(const Permutation &p, std::ostream *os) { *os << p.str(); }
inline void PrintTo(const Bd &f, std::ostream *os) { *os << f.str(); }
inline void PrintTo(const Poly &p, std::ostream *os) { *os << p.str(); }
} // namespace symplabic

namespace oracle {

using namespace symplabic;

// Word length by breadth-first search in the Cayley graph.
inline std::map<Permutation, int> bfs_lengths(CoxeterType t, int rank)
{
  Permutation e(ambient_size(t, rank));
  std::map<Permutation, int> dist{{e, 0}};
  std::deque<Permutation> q{e};
  while (!q.empty()) {
    Permutation v = q.front();
    q.pop_front();
    for (int i = 1; i <= rank; ++i) {
      Permutation x = v * simple_reflection(t, rank, i);
      if (dist.emplace(x, dist[v] + 1).second)
        q.push_back(x);
    }
  }
  return dist;
}

// Subword property: u <= w iff u is the product of a subword of a reduced word of w.
inline bool subword_leq(CoxeterType t, const Permutation &u, const Permutation &w)
{
  Word rw = reduced_word(t, w);
  std::size_t m = rw.letters.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    Permutation p(ambient_size(t, rw.rank));
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1)
        p = p * simple_reflection(t, rw.rank, rw.letters[j]);
    if (p == u)
      return true;
  }
  return false;
}

// All masks whose kept letters multiply to u with every prefix step going up
// in length when the letter is appended.
inline std::vector<std::vector<bool>> positive_subexpressions(const Permutation &u, const Word &w)
{
  std::vector<std::vector<bool>> out;
  std::size_t m = w.letters.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    Permutation p(ambient_size(w.type, w.rank));
    bool positive = true;
    std::vector<bool> keep(m);
    for (std::size_t j = 0; j < m; ++j) {
      Permutation ps = p * simple_reflection(w.type, w.rank, w.letters[j]);
      if (length(w.type, ps) < length(w.type, p))
        positive = false;
      keep[j] = mask >> j & 1;
      if (keep[j])
        p = ps;
    }
    if (positive && p == u)
      out.push_back(keep);
  }
  return out;
}

// Bounded affine permutations of type (k,n) from all candidate windows.
inline std::set<std::vector<int>> all_bounded_windows(int k, int n)
{
  std::set<std::vector<int>> out;
  std::vector<int> w(n);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      std::set<int> res;
      long sum = 0;
      for (int j = 1; j <= n; ++j) {
        res.insert((w[j - 1] - 1) % n);
        sum += w[j - 1] - j;
      }
      if (static_cast<int>(res.size()) == n && sum == static_cast<long>(k) * n)
        out.insert(w);
      return;
    }
    for (int v = i; v <= i + n; ++v) {
      w[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

// f(i') = f(i)' extended periodically, with i' = N+1-i.
inline bool affine_type_C(const Bd &f)
{
  int N = f.size();
  for (int i = 1 - N; i <= 2 * N; ++i)
    if (f(N + 1 - i) != N + 1 - f(i) + N)
      return false;
  return true;
}

// I_a = { f(j) mod n : a-n <= j < a, f(j) >= a }.
inline GrassmannNecklace necklace(const Bd &f)
{
  int n = f.size();
  GrassmannNecklace N{n, f.k(), {}};
  for (int a = 1; a <= n; ++a) {
    std::set<int> s;
    for (int j = a - n; j <= a - 1; ++j)
      if (f(j) >= a)
        s.insert(((f(j) - 1) % n + n) % n + 1);
    N.sets.emplace_back(s.begin(), s.end());
  }
  return N;
}

// Almost perfect matchings by running over every edge subset.
inline std::vector<std::set<int>> matchings(const PlabicGraph &g)
{
  std::vector<int> es;
  for (auto const &[id, e] : g.edges)
    es.push_back(id);
  std::vector<std::set<int>> out;
  for (unsigned long mask = 0; mask < (1UL << es.size()); ++mask) {
    std::map<int, int> cover;
    std::set<int> P;
    for (std::size_t j = 0; j < es.size(); ++j)
      if (mask >> j & 1) {
        P.insert(es[j]);
        ++cover[g.edge(es[j]).u];
        ++cover[g.edge(es[j]).v];
      }
    bool ok = true;
    for (auto const &[id, v] : g.vertices) {
      int c = cover.count(id) ? cover[id] : 0;
      ok = ok && (v.is_boundary() ? c <= 1 : c == 1);
    }
    if (ok)
      out.push_back(P);
  }
  return out;
}

// Boundary measurement from the definition: black boundary vertices that are
// matched together with white ones that are not.
template <class S> std::map<Subset, S> measurement(const PlabicGraph &g, const std::map<int, S> &w)
{
  std::map<Subset, S> out;
  for (auto const &P : matchings(g)) {
    Subset J;
    for (int i = 1; i <= g.n; ++i) {
      auto const &b = g.boundary_vertex(i);
      bool used = P.count(b.rotation[0]) > 0;
      if ((b.color == Color::black && used) || (b.color == Color::white && !used))
        J.push_back(i);
    }
    S prod(1);
    for (int e : P)
      prod = prod * w.at(e);
    auto it = out.find(J);
    if (it == out.end())
      out.emplace(J, prod);
    else
      it->second = it->second + prod;
  }
  return out;
}

// Leibniz expansion.
template <class S> S leibniz_det(const std::vector<std::vector<S>> &a)
{
  int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = i;
  S total(0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        inv += p[i] > p[j];
    S term(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i)
      term = term * a[i][p[i]];
    total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Skew form sum_j (-1)^j x_{2n+1-j} y_j on every pair of rows.
template <class S> bool rows_isotropic(const Matrix<S> &m)
{
  int N = m.cols;
  for (int r = 1; r <= m.rows; ++r)
    for (int s = 1; s <= m.rows; ++s) {
      S acc(0);
      for (int j = 1; j <= N; ++j) {
        S t = m(r, N + 1 - j) * m(s, j);
        acc = j % 2 ? acc - t : acc + t;
      }
      if (!(acc == S(0)))
        return false;
    }
  return true;
}

// Number of faces of the disk cut out by the graph.
inline int face_count(const PlabicGraph &g) { return static_cast<int>(all_faces_with_rim(g).size()) - 1; }

// Expected number of faces of a reduced graph for f.
inline int reduced_face_count(const Bd &f)
{
  return f.k() * (f.size() - f.k()) - length_A(f) + 1;
}

// Searches the square-move class (degree-2 vertices contracted) for a graph
// with two parallel edges between interior vertices. Returns true as soon as
// one turns up; gives up after `limit` distinct graphs.
inline bool move_class_has_bigon(const PlabicGraph &g0, std::size_t limit = 400)
{
  auto has_bigon = [](const PlabicGraph &g) {
    std::set<std::pair<int, int>> seen;
    for (auto const &[id, e] : g.edges) {
      if (g.vertex(e.u).is_boundary() || g.vertex(e.v).is_boundary())
        continue;
      if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
        return true;
    }
    return false;
  };
  PlabicGraph start = canonical_form(contract_degree2(g0));
  std::set<std::string> seen;
  std::deque<PlabicGraph> q{start};
  auto key = [](const PlabicGraph &g) { return to_json(canonical_form(g)).dump(); };
  seen.insert(key(start));
  while (!q.empty() && seen.size() < limit) {
    PlabicGraph g = q.front();
    q.pop_front();
    if (has_bigon(g))
      return true;
    for (auto const &f : interior_faces(g)) {
      if (f.size() != 4)
        continue;
      std::vector<int> ids;
      for (auto const &d : f)
        ids.push_back(d.from);
      try {
        PlabicGraph h = canonical_form(contract_degree2(square_move(prepare_square(g, ids), ids)));
        if (seen.insert(key(h)).second)
          q.push_back(h);
      } catch (const PatternError &) {
      }
    }
  }
  return false;
}

// First edge with both ends interior.
inline int interior_edge(const PlabicGraph &g)
{
  for (auto const &[id, e] : g.edges)
    if (!g.vertex(e.u).is_boundary() && !g.vertex(e.v).is_boundary())
      return id;
  return 0;
}

// Doubles an edge, the copy bounding an empty bigon with the original.
inline PlabicGraph inject_parallel(PlabicGraph g, int e)
{
  Edge ed = g.edge(e);
  int c = g.add_edge_raw(ed.u, ed.v);
  auto &ru = g.vertex(ed.u).rotation;
  ru.insert(ru.begin() + g.position(ed.u, e) + 1, c);
  auto &rv = g.vertex(ed.v).rotation;
  rv.insert(rv.begin() + g.position(ed.v, e), c);
  return g;
}

// Attaches a square ladder closed into an annulus to the middle of edge e.
// The zigzag running around the annulus is a round trip.
inline PlabicGraph inject_round_trip(PlabicGraph g, int e)
{
  Edge ed = g.edge(e);
  Color cu = g.vertex(ed.u).color;
  int x = g.subdivide_edge(e, opposite(cu), ed.u);
  int xy = g.vertex(x).rotation[1];
  g.subdivide_edge(xy, cu, x);
  int o[4], in[4];
  for (int j = 0; j < 4; ++j) {
    o[j] = g.add_vertex(j % 2 ? g.vertex(x).color : cu);
    in[j] = g.add_vertex(j % 2 ? cu : g.vertex(x).color);
  }
  int attach = g.add_edge_raw(x, o[0]);
  int rail_o[4], rail_i[4], rung[4];
  for (int j = 0; j < 4; ++j) {
    rail_o[j] = g.add_edge_raw(o[j], o[(j + 1) % 4]);
    rail_i[j] = g.add_edge_raw(in[j], in[(j + 1) % 4]);
    rung[j] = g.add_edge_raw(o[j], in[j]);
  }
  auto &rx = g.vertex(x).rotation;
  rx.insert(rx.begin() + 1, attach);
  for (int j = 0; j < 4; ++j) {
    std::vector<int> ro{rail_o[j], rung[j], rail_o[(j + 3) % 4]};
    if (j == 0)
      ro.insert(ro.begin(), attach);
    g.vertex(o[j]).rotation = ro;
    g.vertex(in[j]).rotation = {rung[j], rail_i[j], rail_i[(j + 3) % 4]};
  }
  return g;
}

// Every canonical pair (u,w) with n <= max_n and every k.
struct PairCase {
  Permutation u, w;
  int k;
};

inline std::vector<PairCase> canonical_pairs(int max_n)
{
  std::vector<PairCase> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto const &[u, w] : enumerate_Q(k, n))
        out.push_back({u, w, k});
  return out;
}

inline std::map<int, Rational> positive_weights(const PlabicGraph &g, Rng &rng)
{
  std::map<int, Rational> w;
  for (auto const &[id, e] : g.edges)
    w[id] = random_positive_rational(rng);
  return w;
}

// Positive weights constant on each orbit of the reflection.
inline std::map<int, Rational> symmetric_positive_weights(const PlabicGraph &g, Rng &rng)
{
  auto inv = require_involution(g);
  std::map<int, Rational> w;
  for (auto const &[e, m] : inv.edge)
    if (e <= m)
      w[e] = w[m] = random_positive_rational(rng);
  return w;
}

inline std::vector<int> face_ids(const std::vector<Dart> &f)
{
  std::vector<int> ids;
  for (auto const &d : f)
    ids.push_back(d.from);
  return ids;
}

// Removes symmetric degree-2 vertices until none with internal neighbors remain.
inline SymmetricPlabicGraph contract_symmetric(SymmetricPlabicGraph s)
{
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &[id, v] : s.graph.vertices) {
      if (v.is_boundary() || v.degree() != 2)
        continue;
      for (const char *kind : {"remove_degree2", "crossing_remove"}) {
        try {
          s = apply_symmetric_move(s, {kind, {id}});
          changed = true;
          break;
        } catch (const PatternError &) {
        }
      }
      if (changed)
        break;
    }
  }
  return s;
}

// Subdivides, in mirrored pairs or across the diameter, every edge leaving
// the face so that a paired square move on it stays off the diameter.
inline std::optional<SymmetricPlabicGraph> prepare_symmetric_square(SymmetricPlabicGraph s, const std::vector<int> &ids)
{
  std::set<int> face(ids.begin(), ids.end());
  for (int v : ids)
    if (face.count(s.r.at(v)))
      return std::nullopt;
  for (int x : ids)
    for (int e : std::vector<int>(s.graph.vertex(x).rotation)) {
      int y = s.graph.edge(e).other(x);
      if (face.count(y))
        continue;
      auto inv = require_involution(s.graph);
      const char *kind = inv.edge.at(e) == e ? "crossing_insert" : "subdivide";
      s = apply_symmetric_move(s, {kind, {e}});
      if (kind == std::string("subdivide") || !s.graph.vertex(y).is_boundary()) {
        // a second subdivision keeps the far corner of the move off the diameter
        for (int e2 : s.graph.vertex(x).rotation) {
          int z = s.graph.edge(e2).other(x);
          if (!face.count(z) && s.graph.vertex(z).degree() == 2) {
            auto inv2 = require_involution(s.graph);
            const char *k2 = inv2.edge.at(e2) == e2 ? "crossing_insert" : "subdivide";
            s = apply_symmetric_move(s, {k2, {e2}});
            break;
          }
        }
      }
    }
  return s;
}

} // namespace oracle
