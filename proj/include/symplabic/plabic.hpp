#ifndef SYMPLABIC_PLABIC_HPP
#define SYMPLABIC_PLABIC_HPP

#include "symplabic/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplabic {

enum class Color { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
inline const char *color_name(Color c) { return c == Color::black ? "black" : "white"; }

struct Vertex {
  int id = 0;
  Color color = Color::black;
  int boundary = 0;           // boundary index in [1,n], 0 for internal vertices
  std::vector<int> rotation;  // incident edge ids, counterclockwise
  bool is_boundary() const { return boundary != 0; }
  int degree() const { return static_cast<int>(rotation.size()); }
};

struct Edge {
  int id = 0;
  int u = 0, v = 0;
  int other(int x) const { return x == u ? v : u; }
  bool joins(int a, int b) const { return (u == a && v == b) || (u == b && v == a); }
};

// An edge traversed away from `from`.
struct Dart {
  int edge = 0;
  int from = 0;
  friend bool operator==(const Dart &, const Dart &) = default;
  friend auto operator<=>(const Dart &, const Dart &) = default;
};

// Planar bipartite graph in a disk given by a rotation system. Boundary
// vertices sit on the rim in clockwise order 1..n.
class PlabicGraph {
public:
  int n = 0;
  std::map<int, Vertex> vertices;
  std::map<int, Edge> edges;
  std::vector<int> boundary_ids; // boundary_ids[i-1] = vertex id of boundary i

  Vertex const &vertex(int id) const
  {
    auto it = vertices.find(id);
    if (it == vertices.end())
      throw std::invalid_argument("no vertex " + std::to_string(id));
    return it->second;
  }
  Vertex &vertex(int id) { return const_cast<Vertex &>(std::as_const(*this).vertex(id)); }
  Edge const &edge(int id) const
  {
    auto it = edges.find(id);
    if (it == edges.end())
      throw std::invalid_argument("no edge " + std::to_string(id));
    return it->second;
  }
  Vertex const &boundary_vertex(int i) const { return vertex(boundary_ids.at(i - 1)); }

  int head(const Dart &d) const { return edge(d.edge).other(d.from); }
  Dart twin(const Dart &d) const { return {d.edge, head(d)}; }

  int next_vertex_id() const { return vertices.empty() ? 1 : vertices.rbegin()->first + 1; }
  int next_edge_id() const { return edges.empty() ? 1 : edges.rbegin()->first + 1; }

  int add_vertex(Color c, int boundary = 0)
  {
    int id = next_vertex_id();
    vertices[id] = Vertex{id, c, boundary, {}};
    return id;
  }

  // Adds an edge without touching rotations; callers splice it in.
  int add_edge_raw(int u, int v)
  {
    int id = next_edge_id();
    edges[id] = Edge{id, u, v};
    return id;
  }

  int position(int v, int e) const
  {
    auto const &r = vertex(v).rotation;
    auto it = std::find(r.begin(), r.end(), e);
    if (it == r.end())
      throw std::logic_error("edge not in rotation");
    return static_cast<int>(it - r.begin());
  }

  void replace_in_rotation(int v, int old_e, std::vector<int> new_es)
  {
    auto &r = vertex(v).rotation;
    int p = position(v, old_e);
    r.erase(r.begin() + p);
    r.insert(r.begin() + p, new_es.begin(), new_es.end());
  }

  void remove_edge(int e)
  {
    Edge ed = edge(e);
    for (int x : {ed.u, ed.v}) {
      auto &r = vertex(x).rotation;
      r.erase(std::remove(r.begin(), r.end(), e), r.end());
    }
    edges.erase(e);
  }

  // Splits edge e by a new vertex of color c; returns the new vertex id.
  // The edge keeps its id on the side of `keep_side`.
  int subdivide_edge(int e, Color c, int keep_side)
  {
    Edge ed = edge(e);
    int far = ed.other(keep_side);
    int x = add_vertex(c);
    int e2 = add_edge_raw(x, far);
    edges[e] = Edge{e, keep_side, x};
    replace_in_rotation(far, e, {e2});
    vertex(x).rotation = {e, e2};
    return x;
  }

  std::vector<int> neighbors(int v) const
  {
    std::vector<int> out;
    for (int e : vertex(v).rotation)
      out.push_back(edge(e).other(v));
    return out;
  }

  friend bool operator==(const PlabicGraph &a, const PlabicGraph &b)
  {
    if (a.n != b.n || a.boundary_ids != b.boundary_ids || a.vertices.size() != b.vertices.size() ||
        a.edges.size() != b.edges.size())
      return false;
    for (auto const &[id, v] : a.vertices) {
      auto it = b.vertices.find(id);
      if (it == b.vertices.end() || it->second.color != v.color ||
          it->second.boundary != v.boundary || it->second.rotation != v.rotation)
        return false;
    }
    for (auto const &[id, e] : a.edges) {
      auto it = b.edges.find(id);
      if (it == b.edges.end() || !it->second.joins(e.u, e.v))
        return false;
    }
    return true;
  }
};

namespace detail {

// Rotation system of the graph together with the rim arcs joining boundary
// i to i+1. Darts are integers; faces are orbits of twin-then-predecessor.
struct AugmentedRotation {
  std::vector<int> dart_head, dart_tail;
  std::vector<Dart> dart_of; // graph dart, or edge = 0 for rim arcs
  std::vector<std::vector<int>> rot;
  std::map<int, int> index;
  int arc_count = 0;

  int twin(int d) const { return d ^ 1; }

  explicit AugmentedRotation(const PlabicGraph &g)
  {
    int i = 0;
    for (auto const &[id, v] : g.vertices)
      index[id] = i++;
    rot.assign(i, {});
    std::map<std::pair<int, int>, int> dart_id;
    for (auto const &[id, e] : g.edges) {
      int d = static_cast<int>(dart_head.size());
      dart_tail.push_back(index[e.u]);
      dart_head.push_back(index[e.v]);
      dart_of.push_back({id, e.u});
      dart_tail.push_back(index[e.v]);
      dart_head.push_back(index[e.u]);
      dart_of.push_back({id, e.v});
      dart_id[{id, e.u}] = d;
      dart_id[{id, e.v}] = d + 1;
    }
    int n = g.n;
    std::vector<int> arc_fwd(n);
    for (int b = 1; b <= n; ++b) {
      int d = static_cast<int>(dart_head.size());
      int from = index[g.boundary_ids[b - 1]], to = index[g.boundary_ids[b % n]];
      dart_tail.push_back(from);
      dart_head.push_back(to);
      dart_of.push_back({0, b});
      dart_tail.push_back(to);
      dart_head.push_back(from);
      dart_of.push_back({0, -b});
      arc_fwd[b - 1] = d;
    }
    arc_count = n;
    for (auto const &[id, v] : g.vertices) {
      auto &r = rot[index[id]];
      if (v.is_boundary()) {
        int b = v.boundary;
        int prev = (b + n - 2) % n;
        r.push_back(arc_fwd[prev] ^ 1);
        for (int e : v.rotation)
          r.push_back(dart_id[{e, id}]);
        r.push_back(arc_fwd[b - 1]);
      } else {
        for (int e : v.rotation)
          r.push_back(dart_id[{e, id}]);
      }
    }
  }

  int next_in_face(int d) const
  {
    int t = twin(d);
    auto const &r = rot[dart_tail[t]];
    auto it = std::find(r.begin(), r.end(), t);
    int p = static_cast<int>(it - r.begin());
    return r[(p + static_cast<int>(r.size()) - 1) % r.size()];
  }

  std::vector<std::vector<int>> faces() const
  {
    std::vector<bool> seen(dart_head.size(), false);
    std::vector<std::vector<int>> out;
    for (std::size_t d0 = 0; d0 < dart_head.size(); ++d0) {
      if (seen[d0])
        continue;
      std::vector<int> f;
      int d = static_cast<int>(d0);
      while (!seen[d]) {
        seen[d] = true;
        f.push_back(d);
        d = next_in_face(d);
      }
      out.push_back(f);
    }
    return out;
  }
};

} // namespace detail

// Interior faces as cyclic dart sequences (rim arcs excluded). The outer
// region and the regions touching the rim are omitted.
inline std::vector<std::vector<Dart>> interior_faces(const PlabicGraph &g)
{
  detail::AugmentedRotation ar(g);
  std::vector<std::vector<Dart>> out;
  for (auto const &f : ar.faces()) {
    bool rim = false;
    std::vector<Dart> ds;
    for (int d : f) {
      if (ar.dart_of[d].edge == 0)
        rim = true;
      ds.push_back(ar.dart_of[d]);
    }
    if (!rim)
      out.push_back(ds);
  }
  return out;
}

inline std::vector<std::vector<Dart>> all_faces_with_rim(const PlabicGraph &g)
{
  detail::AugmentedRotation ar(g);
  std::vector<std::vector<Dart>> out;
  for (auto const &f : ar.faces()) {
    std::vector<Dart> ds;
    for (int d : f)
      ds.push_back(ar.dart_of[d]);
    out.push_back(ds);
  }
  return out;
}

inline bool has_almost_perfect_matching(const PlabicGraph &g);

inline std::vector<std::string> validate(const PlabicGraph &g)
{
  std::vector<std::string> errs;
  auto id = [](int x) { return std::to_string(x); };
  if (g.n < 1)
    errs.push_back("boundary: graph has no boundary vertices");
  if (static_cast<int>(g.boundary_ids.size()) != g.n) {
    errs.push_back("boundary: expected " + id(g.n) + " boundary vertices");
    return errs;
  }
  for (int i = 1; i <= g.n; ++i) {
    auto it = g.vertices.find(g.boundary_ids[i - 1]);
    if (it == g.vertices.end() || it->second.boundary != i) {
      errs.push_back("boundary: index " + id(i) + " is not attached to a boundary vertex");
      return errs;
    }
  }
  for (auto const &[vid, v] : g.vertices)
    if (v.is_boundary() && (v.boundary > g.n || g.boundary_ids[v.boundary - 1] != vid))
      errs.push_back("boundary: vertex " + id(vid) + " has an inconsistent boundary index");
  bool rot_ok = true;
  for (auto const &[eid, e] : g.edges) {
    if (!g.vertices.count(e.u) || !g.vertices.count(e.v)) {
      errs.push_back("edge: " + id(eid) + " has a missing endpoint");
      rot_ok = false;
      continue;
    }
    if (e.u == e.v) {
      errs.push_back("edge: " + id(eid) + " is a loop");
      rot_ok = false;
      continue;
    }
    for (int x : {e.u, e.v}) {
      auto const &r = g.vertex(x).rotation;
      if (std::count(r.begin(), r.end(), eid) != 1) {
        errs.push_back("rotation: edge " + id(eid) + " not listed once at vertex " + id(x));
        rot_ok = false;
      }
    }
    if (g.vertex(e.u).color == g.vertex(e.v).color)
      errs.push_back("bipartite: edge " + id(eid) + " joins two " +
                     color_name(g.vertex(e.u).color) + " vertices " + id(e.u) + "," + id(e.v));
  }
  for (auto const &[vid, v] : g.vertices) {
    for (int e : v.rotation) {
      auto it = g.edges.find(e);
      if (it == g.edges.end() || (it->second.u != vid && it->second.v != vid)) {
        errs.push_back("rotation: vertex " + id(vid) + " lists non-incident edge " + id(e));
        rot_ok = false;
      }
    }
    if (v.is_boundary() && v.degree() != 1)
      errs.push_back("boundary-degree: boundary vertex " + id(v.boundary) + " has degree " +
                     id(v.degree()));
    if (v.is_boundary() && v.degree() == 1 && g.edges.count(v.rotation[0]) &&
        g.vertex(g.edge(v.rotation[0]).other(vid)).is_boundary())
      errs.push_back("boundary-degree: boundary vertex " + id(v.boundary) +
                     " is joined to another boundary vertex");
  }
  if (!rot_ok)
    return errs;
  // connectivity to the boundary
  std::set<int> seen(g.boundary_ids.begin(), g.boundary_ids.end());
  std::deque<int> q(g.boundary_ids.begin(), g.boundary_ids.end());
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (seen.insert(w).second)
        q.push_back(w);
  }
  for (auto const &[vid, v] : g.vertices)
    if (!seen.count(vid))
      errs.push_back("connectivity: vertex " + id(vid) + " has no path to the boundary");
  if (!errs.empty())
    return errs;
  detail::AugmentedRotation ar(g);
  long V = static_cast<long>(g.vertices.size());
  long E = static_cast<long>(g.edges.size()) + g.n;
  long F = static_cast<long>(ar.faces().size());
  if (V - E + F != 2)
    errs.push_back("planarity: rotation system with rim has Euler characteristic " +
                   std::to_string(V - E + F));
  else {
    // the outer face must be exactly the rim traversed clockwise
    int d = 2 * static_cast<int>(g.edges.size());
    bool outer = true;
    for (int b = 0; b < g.n; ++b)
      if (ar.next_in_face(d + 2 * b) != d + 2 * ((b + 1) % g.n))
        outer = false;
    if (!outer)
      errs.push_back("planarity: boundary vertices are not in clockwise order on the rim");
  }
  if (errs.empty() && !has_almost_perfect_matching(g))
    errs.push_back("matching: graph admits no almost perfect matching");
  return errs;
}

inline void require_valid(const PlabicGraph &g)
{
  auto errs = validate(g);
  if (!errs.empty())
    throw std::invalid_argument("invalid plabic graph: " + errs.front());
}

// Backtracking search for a matching covering every internal vertex.
inline bool has_almost_perfect_matching(const PlabicGraph &g)
{
  std::vector<int> internal;
  for (auto const &[id, v] : g.vertices)
    if (!v.is_boundary())
      internal.push_back(id);
  std::set<int> used;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    while (i < internal.size() && used.count(internal[i]))
      ++i;
    if (i == internal.size())
      return true;
    int v = internal[i];
    used.insert(v);
    for (int w : g.neighbors(v)) {
      if (used.count(w))
        continue;
      used.insert(w);
      if (rec(i + 1))
        return true;
      used.erase(w);
    }
    used.erase(v);
    return false;
  };
  return rec(0);
}

// Rules of the road. With the rim numbered clockwise and rotations listed
// counterclockwise, a left turn at a white vertex is the counterclockwise
// predecessor of the arrival edge and a right turn at black is its successor.
inline Dart next_trip_dart(const PlabicGraph &g, const Dart &in)
{
  int v = g.head(in);
  auto const &vx = g.vertex(v);
  int d = vx.degree();
  int p = g.position(v, in.edge);
  int q = vx.color == Color::white ? (p + d - 1) % d : (p + 1) % d;
  return {vx.rotation[q], v};
}

struct Trip {
  int start = 0, end = 0; // boundary indices; 0 for round trips
  std::vector<Dart> darts;
  std::vector<int> vertex_path() const;
};

inline std::vector<int> Trip::vertex_path() const
{
  std::vector<int> out;
  for (auto const &d : darts)
    out.push_back(d.from);
  return out;
}

inline Trip trip(const PlabicGraph &g, int a)
{
  auto const &b = g.boundary_vertex(a);
  if (b.degree() != 1)
    throw std::invalid_argument("boundary vertex must have degree 1");
  Trip t;
  t.start = a;
  Dart d{b.rotation[0], b.id};
  std::size_t limit = 2 * g.edges.size() + 2;
  for (;;) {
    t.darts.push_back(d);
    int h = g.head(d);
    if (g.vertex(h).is_boundary()) {
      t.end = g.vertex(h).boundary;
      return t;
    }
    if (t.darts.size() > limit)
      throw std::logic_error("trip does not terminate");
    d = next_trip_dart(g, d);
  }
}

struct TripDecomposition {
  std::vector<Trip> boundary_trips; // indexed by start - 1
  std::vector<Trip> round_trips;
};

inline TripDecomposition trip_decomposition(const PlabicGraph &g)
{
  TripDecomposition out;
  std::set<Dart> used;
  for (int a = 1; a <= g.n; ++a) {
    Trip t = trip(g, a);
    for (auto const &d : t.darts)
      used.insert(d);
    out.boundary_trips.push_back(t);
  }
  for (auto const &[eid, e] : g.edges)
    for (int from : {e.u, e.v}) {
      Dart d0{eid, from};
      if (used.count(d0))
        continue;
      Trip t;
      Dart d = d0;
      do {
        used.insert(d);
        t.darts.push_back(d);
        d = next_trip_dart(g, d);
      } while (!(d == d0));
      out.round_trips.push_back(t);
    }
  return out;
}

inline bool is_lollipop(const PlabicGraph &g, int a)
{
  auto const &b = g.boundary_vertex(a);
  if (b.degree() != 1)
    return false;
  auto const &leaf = g.vertex(g.edge(b.rotation[0]).other(b.id));
  return !leaf.is_boundary() && leaf.degree() == 1;
}

inline Color lollipop_color(const PlabicGraph &g, int a)
{
  auto const &b = g.boundary_vertex(a);
  return g.vertex(g.edge(b.rotation[0]).other(b.id)).color;
}

inline DecoratedPermutation trip_permutation(const PlabicGraph &g)
{
  std::vector<int> s(g.n);
  std::vector<FixedColor> c(g.n, FixedColor::none);
  for (int a = 1; a <= g.n; ++a) {
    s[a - 1] = trip(g, a).end;
    if (s[a - 1] == a) {
      // the trip turns back at a leaf; a lollipop in reduced graphs
      int leaf = 0;
      for (auto const &d : trip(g, a).darts) {
        auto const &h = g.vertex(g.head(d));
        if (!h.is_boundary() && h.degree() == 1)
          leaf = h.id;
      }
      if (!leaf)
        throw std::invalid_argument("fixed point of the trip permutation has no leaf");
      c[a - 1] = g.vertex(leaf).color == Color::white ? FixedColor::white : FixedColor::black;
    }
  }
  return {Permutation(s), c};
}

inline Bd bounded_affine_of_graph(const PlabicGraph &g)
{
  return from_decorated(trip_permutation(g));
}

inline bool has_interior_leaf(const PlabicGraph &g)
{
  for (auto const &[id, v] : g.vertices)
    if (!v.is_boundary() && v.degree() == 1 && !g.vertex(g.neighbors(id)[0]).is_boundary())
      return true;
  return false;
}

struct ReducednessReport {
  bool reduced = true;
  std::string reason;
};

inline ReducednessReport reducedness(const PlabicGraph &g)
{
  if (has_interior_leaf(g))
    throw std::invalid_argument("graph has an interior leaf; apply leaf removal first");
  auto td = trip_decomposition(g);
  if (!td.round_trips.empty())
    return {false, "round trip"};
  for (auto const &t : td.boundary_trips) {
    bool leaf_trip = t.start == t.end && t.darts.size() == 2 && is_lollipop(g, t.start);
    if (leaf_trip)
      continue;
    std::set<int> es;
    for (auto const &d : t.darts)
      if (!es.insert(d.edge).second)
        return {false, "trip " + std::to_string(t.start) + " uses an edge twice"};
  }
  std::vector<std::map<int, int>> pos(td.boundary_trips.size());
  for (std::size_t i = 0; i < td.boundary_trips.size(); ++i) {
    auto const &ds = td.boundary_trips[i].darts;
    for (std::size_t j = 0; j < ds.size(); ++j)
      pos[i].emplace(ds[j].edge, static_cast<int>(j));
  }
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      // common edges in the order of trip i must appear in decreasing order in trip j
      int last = -1;
      bool first = true;
      for (auto const &d : td.boundary_trips[i].darts) {
        auto it = pos[j].find(d.edge);
        if (it == pos[j].end())
          continue;
        if (!first && it->second > last)
          return {false, "bad double crossing of trips " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1)};
        last = it->second;
        first = false;
      }
    }
  for (int a = 1; a <= g.n; ++a)
    if (td.boundary_trips[a - 1].end == a && !is_lollipop(g, a))
      return {false, "fixed point " + std::to_string(a) + " is not a lollipop"};
  return {};
}

inline bool is_reduced(const PlabicGraph &g) { return reducedness(g).reduced; }

// Relabels vertices and edges by a traversal from the boundary so that graphs
// equal up to ids become identical.
inline PlabicGraph canonical_form(const PlabicGraph &g)
{
  std::map<int, int> vmap, emap;
  std::deque<std::pair<int, int>> q; // vertex, arrival edge (0 for none)
  int next_v = g.n + 1, next_e = 1;
  for (int i = 1; i <= g.n; ++i) {
    vmap[g.boundary_ids[i - 1]] = i;
    q.push_back({g.boundary_ids[i - 1], 0});
  }
  while (!q.empty()) {
    auto [v, in] = q.front();
    q.pop_front();
    auto const &r = g.vertex(v).rotation;
    int start = in ? g.position(v, in) : 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      int e = r[(start + j) % r.size()];
      if (!emap.count(e))
        emap[e] = next_e++;
      int w = g.edge(e).other(v);
      if (!vmap.count(w)) {
        vmap[w] = next_v++;
        q.push_back({w, e});
      }
    }
  }
  PlabicGraph c;
  c.n = g.n;
  for (int i = 1; i <= g.n; ++i)
    c.boundary_ids.push_back(i);
  for (auto const &[vid, v] : g.vertices) {
    if (!vmap.count(vid))
      throw std::invalid_argument("vertex unreachable from the boundary");
    Vertex nv{vmap[vid], v.color, v.boundary, {}};
    for (int e : v.rotation)
      nv.rotation.push_back(emap[e]);
    if (!nv.rotation.empty()) {
      auto m = std::min_element(nv.rotation.begin(), nv.rotation.end());
      std::rotate(nv.rotation.begin(), m, nv.rotation.end());
    }
    c.vertices[nv.id] = nv;
  }
  for (auto const &[eid, e] : g.edges) {
    int a = vmap[e.u], b = vmap[e.v];
    c.edges[emap[eid]] = Edge{emap[eid], std::min(a, b), std::max(a, b)};
  }
  return c;
}

inline bool isomorphic(const PlabicGraph &a, const PlabicGraph &b)
{
  return canonical_form(a) == canonical_form(b);
}

// Lollipops: boundary i has id i, its leaf id n+i and the leg edge id i.
inline PlabicGraph lollipop_graph(const std::set<int> &J, int n)
{
  PlabicGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i) {
    Color leaf = J.count(i) ? Color::white : Color::black;
    g.vertices[i] = Vertex{i, opposite(leaf), i, {i}};
    g.boundary_ids.push_back(i);
  }
  for (int i = 1; i <= n; ++i) {
    Color leaf = J.count(i) ? Color::white : Color::black;
    g.vertices[n + i] = Vertex{n + i, leaf, 0, {i}};
    g.edges[i] = Edge{i, i, n + i};
  }
  return g;
}

namespace detail {
// Places a vertex of color c on leg `a` next to the boundary and returns it;
// reuses a lollipop leaf of that color. `side` is the rotation slot used for
// the bridge: 0 = to the right (first), 1 = to the left (after the up edge).
inline int prepare_leg(PlabicGraph &g, int a, Color c)
{
  int bid = g.boundary_ids[a - 1];
  int leg = g.vertex(bid).rotation.at(0);
  int x = g.edge(leg).other(bid);
  if (g.vertex(x).degree() == 1 && g.vertex(x).color == c)
    return x;
  // new vertex v between boundary and x; the leg edge stays at the boundary
  int v = g.subdivide_edge(leg, c, bid);
  g.vertex(bid).color = opposite(c);
  int up = g.vertex(v).rotation[1];
  if (g.vertex(x).color == c)
    g.subdivide_edge(up, opposite(c), v);
  // rotation of v: [up, down]; bridge slots are added by the caller
  g.vertex(v).rotation = {up, leg};
  return v;
}
} // namespace detail

struct BridgeResult {
  PlabicGraph graph;
  int bridge_edge = 0;
};

// Adds an (a,b)-bridge near the boundary: white vertex on leg a, black on
// leg b. Legs are drawn vertically with boundary a to the right of b.
inline BridgeResult add_bridge(const PlabicGraph &g0, int a, int b)
{
  if (!(1 <= a && a < b && b <= g0.n))
    throw std::invalid_argument("bridge requires 1 <= a < b <= n");
  Bd f = bounded_affine_of_graph(g0);
  if (!(f(a) > f(b)))
    throw std::invalid_argument("bridge requires f(a) > f(b)");
  for (int c = a + 1; c < b; ++c)
    if (!is_lollipop(g0, c))
      throw std::invalid_argument("bridge requires lollipops strictly between a and b");
  PlabicGraph g = g0;
  int wa = detail::prepare_leg(g, a, Color::white);
  int bb = detail::prepare_leg(g, b, Color::black);
  int e = g.add_edge_raw(wa, bb);
  // at leg a the bridge points left: ccw order right, up, left, down
  auto &ra = g.vertex(wa).rotation;
  if (ra.size() == 1)
    ra = {e, ra[0]};
  else
    ra = {ra[0], e, ra[1]};
  // at leg b the bridge points right
  auto &rb = g.vertex(bb).rotation;
  rb.insert(rb.begin(), e);
  return {g, e};
}

} // namespace symplabic

#endif
