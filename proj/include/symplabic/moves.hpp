#ifndef SYMPLABIC_MOVES_HPP
#define SYMPLABIC_MOVES_HPP

#include "symplabic/plabic.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplabic {

// kind: "square", "square_flip", "remove_degree2", "subdivide",
// "parallel" (R1) or "leaf" (R2). ids: the vertex or edge ids it names.
struct MoveDescriptor {
  std::string kind;
  std::vector<int> ids;
};

struct PatternError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Edge weights; S is a field-like scalar (Rational or RationalFunction).
template <class S> using EdgeWeights = std::map<int, S>;

namespace detail {

inline int edge_between(const PlabicGraph &g, int a, int b)
{
  for (int e : g.vertex(a).rotation)
    if (g.edge(e).other(a) == b)
      return e;
  throw PatternError("vertices are not adjacent");
}

template <class S> void gauge_vertex(const PlabicGraph &g, EdgeWeights<S> &w, int v, const S &f)
{
  for (int e : g.vertex(v).rotation)
    w[e] = w.at(e) * f;
}

struct SquareData {
  int top, bottom, W, E;
  int a, b, c, d, otop, obot;
};

// Locates the square face on the given vertices. `trivalent` selects which
// color class of corners is required to have degree 3.
inline SquareData find_square(const PlabicGraph &g, const std::vector<int> &ids,
                              std::optional<Color> trivalent)
{
  if (ids.size() != 4)
    throw PatternError("square move needs four vertices");
  std::set<int> want(ids.begin(), ids.end());
  if (want.size() != 4)
    throw PatternError("square vertices must be distinct");
  for (auto const &f : interior_faces(g)) {
    if (f.size() != 4)
      continue;
    std::set<int> have;
    for (auto const &d : f)
      have.insert(d.from);
    if (have != want)
      continue;
    std::vector<int> cyc;
    for (auto const &d : f)
      cyc.push_back(d.from);
    for (int i = 0; i < 4; ++i)
      if (g.vertex(cyc[i]).color == g.vertex(cyc[(i + 1) % 4]).color)
        throw PatternError("square colors do not alternate");
    for (int x : cyc)
      if (g.vertex(x).is_boundary())
        throw PatternError("square contains a boundary vertex");
    Color tc;
    if (trivalent) {
      tc = *trivalent;
    } else {
      auto deg3 = [&](Color c) {
        for (int x : cyc)
          if (g.vertex(x).color == c && g.vertex(x).degree() != 3)
            return false;
        return true;
      };
      if (deg3(Color::black))
        tc = Color::black;
      else if (deg3(Color::white))
        tc = Color::white;
      else
        throw PatternError("no pair of opposite trivalent corners");
    }
    std::vector<int> tri, oth;
    for (int x : cyc)
      (g.vertex(x).color == tc ? tri : oth).push_back(x);
    for (int x : tri)
      if (g.vertex(x).degree() != 3)
        throw PatternError("square corner is not trivalent");
    std::set<int> face_edges;
    for (auto const &d : f)
      face_edges.insert(d.edge);
    SquareData s{};
    s.top = std::min(tri[0], tri[1]);
    s.bottom = std::max(tri[0], tri[1]);
    auto const &rt = g.vertex(s.top).rotation;
    int p = 0;
    while (face_edges.count(rt[p]))
      ++p;
    s.otop = rt[p];
    s.a = rt[(p + 1) % 3];
    s.b = rt[(p + 2) % 3];
    s.W = g.edge(s.a).other(s.top);
    s.E = g.edge(s.b).other(s.top);
    for (int e : g.vertex(s.bottom).rotation) {
      if (!face_edges.count(e))
        s.obot = e;
      else if (g.edge(e).other(s.bottom) == s.W)
        s.d = e;
      else
        s.c = e;
    }
    return s;
  }
  throw PatternError("no square face on the given vertices");
}

// Index of consecutive pair (x, y) in a cyclic rotation, or -1.
inline int consecutive(const std::vector<int> &r, int x, int y)
{
  int m = static_cast<int>(r.size());
  for (int i = 0; i < m; ++i)
    if (r[i] == x && r[(i + 1) % m] == y)
      return i;
  return -1;
}

inline void replace_pair(std::vector<int> &r, int x, int y, int z)
{
  int i = consecutive(r, x, y);
  if (i < 0)
    throw PatternError("unexpected rotation around the square");
  int m = static_cast<int>(r.size());
  if (i == m - 1) {
    r.erase(r.begin() + (m - 1));
    r[0] = z;
  } else {
    r[i] = z;
    r.erase(r.begin() + i + 1);
  }
}

} // namespace detail

struct SquareMoveEdges {
  int a, b, c, d;       // old square edges
  int a2, b2, c2, d2;   // new square edges carrying the transformed weights
  int wl, er;           // new edges of weight 1
  int otop, obot;       // removed outer edges
  int top, bottom;
};

// Square move: the two trivalent corners are replaced by
// two new ones joined to the other pair of attachment vertices.
inline PlabicGraph square_move(const PlabicGraph &g0, const std::vector<int> &ids,
                               SquareMoveEdges *info = nullptr, std::optional<Color> trivalent = std::nullopt)
{
  auto s = detail::find_square(g0, ids, trivalent);
  int N = g0.edge(s.otop).other(s.top), S = g0.edge(s.obot).other(s.bottom);
  std::set<int> six{N, S, s.W, s.E, s.top, s.bottom};
  if (six.size() != 6)
    throw PatternError("square move needs six distinct vertices");
  if (g0.vertex(N).is_boundary() || g0.vertex(S).is_boundary())
    throw PatternError("trivalent corner adjacent to the boundary");
  PlabicGraph g = g0;
  int L = s.top, R = s.bottom;
  int eWL = g.add_edge_raw(s.W, L);
  int eER = g.add_edge_raw(s.E, R);
  int c2 = g.add_edge_raw(N, L);
  int d2 = g.add_edge_raw(N, R);
  int b2 = g.add_edge_raw(L, S);
  int a2 = g.add_edge_raw(S, R);
  detail::replace_pair(g.vertex(s.W).rotation, s.d, s.a, eWL);
  detail::replace_pair(g.vertex(s.E).rotation, s.b, s.c, eER);
  g.replace_in_rotation(N, s.otop, {c2, d2});
  g.replace_in_rotation(S, s.obot, {a2, b2});
  for (int e : {s.a, s.b, s.c, s.d, s.otop, s.obot})
    g.edges.erase(e);
  g.vertex(L).rotation = {c2, eWL, b2};
  g.vertex(R).rotation = {eER, d2, a2};
  if (info)
    *info = {s.a, s.b, s.c, s.d, a2, b2, c2, d2, eWL, eER, s.otop, s.obot, s.top, s.bottom};
  return g;
}

// a' = a/(ac+bd), b' = b/(ac+bd), c' = c/(ac+bd), d' = d/(ac+bd).
template <class S> std::array<S, 4> square_move_weights(const S &a, const S &b, const S &c, const S &d)
{
  S den = a * c + b * d;
  if (den == S(0))
    throw std::domain_error("square move weights: ac+bd vanishes");
  return {a / den, b / den, c / den, d / den};
}

struct SquareFlipInfo {
  SquareMoveEdges sq;          // square edges; a2..d2 are the same ids as a..d
  std::vector<int> corners;    // top, W, bottom, E
  std::vector<int> outer;      // outer edge at each corner
  std::vector<int> far_edge;   // edge beyond the new degree-2 vertex, or -1
  std::vector<int> merged;     // edge of the removed degree-2 vertex, or -1
};

// Square move with all four corners trivalent: colors of the square are
// reversed, and each outer edge gains a degree-2 vertex or loses the one it
// already has, so the graph stays bipartite.
inline PlabicGraph square_flip_move(const PlabicGraph &g0, const std::vector<int> &ids,
                                    SquareFlipInfo *info = nullptr)
{
  auto s = detail::find_square(g0, ids, Color::black);
  for (int x : {s.W, s.E})
    if (g0.vertex(x).degree() != 3)
      throw PatternError("square corners must all be trivalent");
  PlabicGraph g = g0;
  std::set<int> face{s.top, s.bottom, s.W, s.E};
  SquareFlipInfo fi{{s.a, s.b, s.c, s.d, s.a, s.b, s.c, s.d, 0, 0, 0, 0, s.top, s.bottom},
                    {s.top, s.W, s.bottom, s.E}, {}, {}, {}};
  for (int x : {s.top, s.W, s.bottom, s.E}) {
    int o = -1;
    for (int e : g.vertex(x).rotation)
      if (!face.count(g.edge(e).other(x)))
        o = e;
    int y = g.edge(o).other(x);
    g.vertex(x).color = opposite(g.vertex(x).color);
    auto &vy = g.vertex(y);
    if (!vy.is_boundary() && vy.degree() == 2 && !face.count(y)) {
      // remove y: x now joins y's other neighbor directly through edge o
      int o2 = vy.rotation[0] == o ? vy.rotation[1] : vy.rotation[0];
      int z = g.edge(o2).other(y);
      g.edges[o] = Edge{o, x, z};
      g.replace_in_rotation(z, o2, {o});
      g.edges.erase(o2);
      g.vertices.erase(y);
      fi.outer.push_back(o);
      fi.far_edge.push_back(-1);
      fi.merged.push_back(o2);
    } else {
      int nv = g.subdivide_edge(o, opposite(g.vertex(x).color), x);
      fi.outer.push_back(o);
      fi.far_edge.push_back(g.vertex(nv).rotation[1]);
      fi.merged.push_back(-1);
    }
  }
  if (info)
    *info = fi;
  return g;
}

// `keep`, when given, names the neighbor that survives a contraction.
inline PlabicGraph remove_degree2(const PlabicGraph &g0, int v, std::optional<int> keep = std::nullopt)
{
  auto const &vx = g0.vertex(v);
  if (vx.is_boundary() || vx.degree() != 2)
    throw PatternError("vertex is not an internal degree-2 vertex");
  int e1 = vx.rotation[0], e2 = vx.rotation[1];
  if (keep && g0.edge(e2).other(v) == *keep)
    std::swap(e1, e2);
  int u1 = g0.edge(e1).other(v), u2 = g0.edge(e2).other(v);
  if (u1 == u2)
    throw PatternError("degree-2 vertex has a doubled edge");
  bool b1 = g0.vertex(u1).is_boundary(), b2 = g0.vertex(u2).is_boundary();
  if (b1 && b2)
    throw PatternError("degree-2 vertex between two boundary vertices");
  PlabicGraph g = g0;
  if (b1 || b2) {
    int b = b1 ? u1 : u2, x = b1 ? u2 : u1;
    int leg = b1 ? e1 : e2, other = b1 ? e2 : e1;
    g.edges[leg] = Edge{leg, b, x};
    g.replace_in_rotation(x, other, {leg});
    g.edges.erase(other);
    g.vertices.erase(v);
    g.vertex(b).color = opposite(g.vertex(b).color);
    return g;
  }
  // contract u1 - v - u2 into u1
  auto r1 = g.vertex(u1).rotation, r2 = g.vertex(u2).rotation;
  int p1 = g.position(u1, e1), p2 = g.position(u2, e2);
  std::vector<int> merged;
  for (std::size_t i = 1; i < r1.size(); ++i)
    merged.push_back(r1[(p1 + i) % r1.size()]);
  for (std::size_t i = 1; i < r2.size(); ++i)
    merged.push_back(r2[(p2 + i) % r2.size()]);
  for (std::size_t i = 1; i < r2.size(); ++i) {
    auto &ed = g.edges[r2[(p2 + i) % r2.size()]];
    if (ed.u == u2)
      ed.u = u1;
    else
      ed.v = u1;
  }
  g.edges.erase(e1);
  g.edges.erase(e2);
  g.vertices.erase(v);
  g.vertices.erase(u2);
  g.vertex(u1).rotation = merged;
  for (auto const &[id, ed] : g.edges)
    if (ed.u == ed.v)
      throw PatternError("contraction would create a loop");
  return g;
}

// Inserts degree-2 vertices on an edge: a single one on a leg (flipping the
// boundary color), a pair on an internal edge.
inline PlabicGraph subdivide(const PlabicGraph &g0, int e, std::vector<int> *created = nullptr)
{
  Edge ed = g0.edge(e);
  PlabicGraph g = g0;
  bool bu = g.vertex(ed.u).is_boundary(), bv = g.vertex(ed.v).is_boundary();
  if (bu || bv) {
    int b = bu ? ed.u : ed.v;
    int x = g.subdivide_edge(e, g.vertex(b).color, b);
    g.vertex(b).color = opposite(g.vertex(b).color);
    if (created)
      *created = {x};
    return g;
  }
  int x = g.subdivide_edge(e, opposite(g.vertex(ed.u).color), ed.u);
  int e2 = g.vertex(x).rotation[1];
  int y = g.subdivide_edge(e2, opposite(g.vertex(x).color), x);
  if (created)
    *created = {x, y};
  return g;
}

inline PlabicGraph apply_move(const PlabicGraph &g, const MoveDescriptor &m)
{
  auto one = [&]() {
    if (m.ids.size() != 1)
      throw PatternError("move " + m.kind + " needs exactly one id");
    return m.ids[0];
  };
  if (m.kind == "square")
    return square_move(g, m.ids);
  if (m.kind == "square_flip")
    return square_flip_move(g, m.ids);
  if (m.kind == "remove_degree2")
    return remove_degree2(g, one());
  if (m.kind == "subdivide")
    return subdivide(g, one());
  throw PatternError("unknown move " + m.kind);
}

// R1: two parallel edges bounding an empty bigon become one edge.
inline PlabicGraph reduce_parallel(const PlabicGraph &g0, int e1, int e2)
{
  if (e1 == e2 || !g0.edges.count(e1) || !g0.edges.count(e2))
    throw PatternError("parallel reduction needs two distinct edges");
  Edge a = g0.edge(e1), b = g0.edge(e2);
  if (!a.joins(b.u, b.v))
    throw PatternError("edges do not have the same endpoints");
  PlabicGraph g = g0;
  g.remove_edge(e2);
  return g;
}

// R2: remove an interior leaf v, its neighbor u and all edges at u. A
// boundary vertex attached to u gets a new leaf of v's color and flips.
inline PlabicGraph reduce_leaf(const PlabicGraph &g0, int v)
{
  auto const &vx = g0.vertex(v);
  if (vx.is_boundary() || vx.degree() != 1)
    throw PatternError("vertex is not a leaf");
  int u = g0.edge(vx.rotation[0]).other(v);
  if (g0.vertex(u).is_boundary())
    throw PatternError("leaf is a boundary leaf");
  PlabicGraph g = g0;
  Color leaf_color = vx.color;
  for (int e : g0.vertex(u).rotation) {
    int w = g0.edge(e).other(u);
    if (w == v)
      continue;
    if (g.vertex(w).is_boundary()) {
      int nl = g.add_vertex(leaf_color);
      g.edges[e] = Edge{e, w, nl};
      g.vertex(nl).rotation = {e};
      g.vertex(w).color = opposite(g.vertex(w).color);
    } else {
      g.remove_edge(e);
    }
  }
  g.edges.erase(vx.rotation[0]);
  g.vertices.erase(v);
  g.vertices.erase(u);
  return g;
}

inline PlabicGraph apply_reduction(const PlabicGraph &g, const MoveDescriptor &m)
{
  if (m.kind == "parallel") {
    if (m.ids.size() != 2)
      throw PatternError("parallel reduction needs two edge ids");
    return reduce_parallel(g, m.ids[0], m.ids[1]);
  }
  if (m.kind == "leaf") {
    if (m.ids.size() != 1)
      throw PatternError("leaf reduction needs one vertex id");
    return reduce_leaf(g, m.ids[0]);
  }
  throw PatternError("unknown reduction " + m.kind);
}

// Removes degree-2 vertices until none with two internal neighbors remain.
inline PlabicGraph contract_degree2(PlabicGraph g)
{
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &[id, v] : g.vertices) {
      if (v.is_boundary() || v.degree() != 2)
        continue;
      auto nb = g.neighbors(id);
      if (g.vertex(nb[0]).is_boundary() || g.vertex(nb[1]).is_boundary() || nb[0] == nb[1])
        continue;
      g = remove_degree2(g, id);
      changed = true;
      break;
    }
  }
  return g;
}

// Subdivides the legs at the corners of a square face so that every
// corner's outer neighbor is internal.
inline PlabicGraph prepare_square(PlabicGraph g, const std::vector<int> &ids)
{
  std::set<int> face(ids.begin(), ids.end());
  for (int x : ids)
    for (int e : std::vector<int>(g.vertex(x).rotation))
      if (g.vertex(g.edge(e).other(x)).is_boundary())
        g = subdivide(g, e);
  return g;
}

// Moves applicable to g (square faces, degree-2 removals); subdivisions are
// excluded since they always apply.
inline std::vector<MoveDescriptor> applicable_moves(const PlabicGraph &g)
{
  std::vector<MoveDescriptor> out;
  for (auto const &f : interior_faces(g)) {
    if (f.size() != 4)
      continue;
    std::vector<int> ids;
    for (auto const &d : f)
      ids.push_back(d.from);
    try {
      square_move(g, ids);
      out.push_back({"square", ids});
    } catch (const PatternError &) {
    }
  }
  for (auto const &[id, v] : g.vertices)
    if (!v.is_boundary() && v.degree() == 2) {
      try {
        remove_degree2(g, id);
        out.push_back({"remove_degree2", {id}});
      } catch (const PatternError &) {
      }
    }
  return out;
}

// Both graphs must be reduced; then move equivalence is equality of the
// bounded affine permutations.
inline bool move_equivalent(const PlabicGraph &a, const PlabicGraph &b)
{
  for (auto const *g : {&a, &b}) {
    auto r = reducedness(*g);
    if (!r.reduced)
      throw std::invalid_argument("move equivalence needs reduced graphs: " + r.reason);
  }
  return a.n == b.n && bounded_affine_of_graph(a) == bounded_affine_of_graph(b);
}

namespace detail {

inline std::string graph_key(const PlabicGraph &g)
{
  PlabicGraph c = canonical_form(g);
  std::string s = std::to_string(c.n) + "|";
  for (auto const &[id, v] : c.vertices) {
    s += std::to_string(id) + (v.color == Color::black ? "b" : "w") + std::to_string(v.boundary) + ":";
    for (int e : v.rotation)
      s += std::to_string(e) + ",";
    s += ";";
  }
  return s;
}

// Removes contractible degree-2 vertices, logging each removal.
inline PlabicGraph contract_logged(PlabicGraph g, std::vector<MoveDescriptor> &log)
{
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &[id, v] : g.vertices) {
      if (v.is_boundary() || v.degree() != 2)
        continue;
      auto nb = g.neighbors(id);
      if (g.vertex(nb[0]).is_boundary() || g.vertex(nb[1]).is_boundary() || nb[0] == nb[1])
        continue;
      log.push_back({"remove_degree2", {id}});
      g = remove_degree2(g, id);
      changed = true;
      break;
    }
  }
  return g;
}

} // namespace detail

// Breadth-first search over square moves (with the degree-2 insertions and
// removals around them) for a move sequence taking `from` to a graph
// isomorphic to `to` with its contractible degree-2 vertices removed. Gives
// up after visiting `limit` graphs.
inline std::optional<std::vector<MoveDescriptor>> find_move_sequence(const PlabicGraph &from, const PlabicGraph &to,
                                                                    std::size_t limit = 2000)
{
  std::vector<MoveDescriptor> scratch;
  std::string target = detail::graph_key(detail::contract_logged(to, scratch));
  struct Node {
    PlabicGraph g;
    int parent;
    std::vector<MoveDescriptor> step;
  };
  std::vector<MoveDescriptor> first;
  std::vector<Node> nodes{{detail::contract_logged(from, first), -1, first}};
  std::map<std::string, int> seen{{detail::graph_key(nodes[0].g), 0}};
  for (std::size_t i = 0; i < nodes.size() && nodes.size() <= limit; ++i) {
    if (detail::graph_key(nodes[i].g) == target) {
      std::vector<MoveDescriptor> out;
      for (int j = static_cast<int>(i); j >= 0; j = nodes[j].parent)
        out.insert(out.begin(), nodes[j].step.begin(), nodes[j].step.end());
      return out;
    }
    for (auto const &f : interior_faces(nodes[i].g)) {
      if (f.size() != 4)
        continue;
      std::vector<int> ids;
      for (auto const &d : f)
        ids.push_back(d.from);
      std::vector<MoveDescriptor> step;
      PlabicGraph h = nodes[i].g;
      try {
        for (int x : ids)
          for (int e : std::vector<int>(h.vertex(x).rotation))
            if (h.vertex(h.edge(e).other(x)).is_boundary()) {
              step.push_back({"subdivide", {e}});
              h = subdivide(h, e);
            }
        step.push_back({"square", ids});
        h = detail::contract_logged(square_move(h, ids), step);
      } catch (const PatternError &) {
        continue;
      }
      if (seen.emplace(detail::graph_key(h), static_cast<int>(nodes.size())).second)
        nodes.push_back({h, static_cast<int>(i), step});
    }
  }
  return std::nullopt;
}

// Weighted versions. The returned weighting gives the same boundary
// measurement up to a global scalar.
template <class S> struct WeightedGraph {
  PlabicGraph graph;
  EdgeWeights<S> weights;
};

template <class S>
WeightedGraph<S> weighted_square_move(const WeightedGraph<S> &in, const std::vector<int> &ids,
                                      std::optional<Color> trivalent = std::nullopt)
{
  SquareMoveEdges info{};
  PlabicGraph g = square_move(in.graph, ids, &info, trivalent);
  EdgeWeights<S> w = in.weights;
  // gauge the trivalent corners so their outer edges carry weight 1
  detail::gauge_vertex(in.graph, w, info.top, S(1) / w.at(info.otop));
  detail::gauge_vertex(in.graph, w, info.bottom, S(1) / w.at(info.obot));
  auto t = square_move_weights(w.at(info.a), w.at(info.b), w.at(info.c), w.at(info.d));
  for (int e : {info.a, info.b, info.c, info.d, info.otop, info.obot})
    w.erase(e);
  w[info.a2] = t[0];
  w[info.b2] = t[1];
  w[info.c2] = t[2];
  w[info.d2] = t[3];
  w[info.wl] = S(1);
  w[info.er] = S(1);
  return {g, w};
}

// Corners are gauged so their outer edges carry 1; opposite square edges
// then exchange their transformed weights.
template <class S>
WeightedGraph<S> weighted_square_flip(const WeightedGraph<S> &in, const std::vector<int> &ids)
{
  SquareFlipInfo fi;
  PlabicGraph g = square_flip_move(in.graph, ids, &fi);
  EdgeWeights<S> w = in.weights;
  for (int i = 0; i < 4; ++i)
    detail::gauge_vertex(in.graph, w, fi.corners[i], S(1) / w.at(fi.outer[i]));
  auto t = square_move_weights(w.at(fi.sq.a), w.at(fi.sq.b), w.at(fi.sq.c), w.at(fi.sq.d));
  w[fi.sq.a] = t[2];
  w[fi.sq.b] = t[3];
  w[fi.sq.c] = t[0];
  w[fi.sq.d] = t[1];
  for (int i = 0; i < 4; ++i) {
    w[fi.outer[i]] = S(1);
    if (fi.far_edge[i] >= 0)
      w[fi.far_edge[i]] = S(1);
    if (fi.merged[i] >= 0) {
      w[fi.outer[i]] = w.at(fi.merged[i]);
      w.erase(fi.merged[i]);
    }
  }
  return {g, w};
}

template <class S> WeightedGraph<S> weighted_subdivide(const WeightedGraph<S> &in, int e)
{
  std::vector<int> created;
  PlabicGraph g = subdivide(in.graph, e, &created);
  EdgeWeights<S> w = in.weights;
  S we = w.at(e);
  if (created.size() == 1) {
    // leg: the boundary-side edge carries 1, the inner one the old weight
    int x = created[0];
    for (int f : g.vertex(x).rotation)
      w[f] = f == e ? S(1) : we;
  } else {
    // all three pieces carry the old weight, which does not depend on the
    // orientation of the edge
    for (int x : created)
      for (int f : g.vertex(x).rotation)
        w[f] = we;
  }
  return {g, w};
}

template <class S>
WeightedGraph<S> weighted_remove_degree2(const WeightedGraph<S> &in, int v, std::optional<int> keep = std::nullopt)
{
  auto const &vx = in.graph.vertex(v);
  if (vx.is_boundary() || vx.degree() != 2)
    throw PatternError("vertex is not an internal degree-2 vertex");
  int e1 = vx.rotation[0], e2 = vx.rotation[1];
  if (keep && in.graph.edge(e2).other(v) == *keep)
    std::swap(e1, e2);
  int u1 = in.graph.edge(e1).other(v), u2 = in.graph.edge(e2).other(v);
  PlabicGraph g = remove_degree2(in.graph, v, u1);
  EdgeWeights<S> w = in.weights;
  bool b1 = in.graph.vertex(u1).is_boundary(), b2 = in.graph.vertex(u2).is_boundary();
  if (b1 || b2) {
    int leg = b1 ? e1 : e2, other = b1 ? e2 : e1;
    w[leg] = w.at(other) / w.at(leg);
    w.erase(other);
    return {g, w};
  }
  S ratio = w.at(e1) / w.at(e2);
  for (int e : in.graph.vertex(u2).rotation)
    if (e != e2)
      w[e] = w.at(e) * ratio;
  w.erase(e1);
  w.erase(e2);
  return {g, w};
}

} // namespace symplabic

#endif
