#ifndef SYMPLABIC_SYMMETRIC_HPP
#define SYMPLABIC_SYMMETRIC_HPP

#include "symplabic/bridge.hpp"
#include "symplabic/measurement.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>

namespace symplabic {

struct Involution {
  std::map<int, int> vertex; // r on vertex ids
  std::map<int, int> edge;   // induced map on edge ids
};

struct SymmetricPlabicGraph {
  PlabicGraph graph;
  std::map<int, int> r;
};

// Reflection through the diameter, reconstructed by walking outward from the
// boundary pairs (a, a') with rotations read in opposite directions. Returns
// nothing when the graph is not mirror symmetric.
inline std::optional<Involution> derive_involution(const PlabicGraph &g)
{
  if (g.n % 2 != 0)
    return std::nullopt;
  Involution inv;
  struct Item {
    int v, e, w, f; // v entered by e corresponds to w entered by f
  };
  std::deque<Item> q;
  auto bind_vertex = [&](int v, int w) {
    auto [it, fresh] = inv.vertex.emplace(v, w);
    return fresh ? 1 : (it->second == w ? 0 : -1);
  };
  for (int a = 1; a <= g.n; ++a) {
    int v = g.boundary_ids[a - 1], w = g.boundary_ids[g.n - a];
    if (bind_vertex(v, w) < 0)
      return std::nullopt;
    int e = g.vertex(v).rotation.at(0), f = g.vertex(w).rotation.at(0);
    q.push_back({v, e, w, f});
  }
  while (!q.empty()) {
    auto [v, e, w, f] = q.front();
    q.pop_front();
    auto const &rv = g.vertex(v).rotation, &rw = g.vertex(w).rotation;
    if (rv.size() != rw.size() || g.vertex(v).color == g.vertex(w).color)
      return std::nullopt;
    int d = static_cast<int>(rv.size());
    int p = g.position(v, e), p2 = g.position(w, f);
    for (int i = 0; i < d; ++i) {
      int e1 = rv[(p + i) % d], f1 = rw[((p2 - i) % d + d) % d];
      auto [it, fresh] = inv.edge.emplace(e1, f1);
      if (!fresh && it->second != f1)
        return std::nullopt;
      int x = g.edge(e1).other(v), y = g.edge(f1).other(w);
      int b = bind_vertex(x, y);
      if (b < 0)
        return std::nullopt;
      if (b > 0)
        q.push_back({x, e1, y, f1});
    }
  }
  if (inv.vertex.size() != g.vertices.size() || inv.edge.size() != g.edges.size())
    return std::nullopt;
  for (auto const &[v, w] : inv.vertex)
    if (v == w || inv.vertex.at(w) != v)
      return std::nullopt;
  for (auto const &[e, f] : inv.edge) {
    if (inv.edge.at(f) != e)
      return std::nullopt;
    auto const &E = g.edge(e), &F = g.edge(f);
    if (!F.joins(inv.vertex.at(E.u), inv.vertex.at(E.v)))
      return std::nullopt;
  }
  return inv;
}

inline std::set<int> crossing_edges(const PlabicGraph &g, const Involution &inv)
{
  std::set<int> out;
  for (auto const &[e, f] : inv.edge)
    if (e == f)
      out.insert(e);
  return out;
}

// Side of the diameter for each vertex: 0 for the half holding boundary
// 1..n/2, 1 for the other. Empty when the crossing edges are inconsistent.
inline std::map<int, int> sides(const PlabicGraph &g, const Involution &inv)
{
  auto cross = crossing_edges(g, inv);
  std::map<int, int> side;
  std::deque<int> q;
  int half = g.n / 2;
  for (int a = 1; a <= g.n; ++a) {
    side[g.boundary_ids[a - 1]] = a > half ? 1 : 0;
    q.push_back(g.boundary_ids[a - 1]);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.vertex(v).rotation) {
      int x = g.edge(e).other(v);
      int s = side[v] ^ (cross.count(e) ? 1 : 0);
      auto [it, fresh] = side.emplace(x, s);
      if (fresh)
        q.push_back(x);
      else if (it->second != s)
        return {};
    }
  }
  for (auto const &[v, w] : inv.vertex)
    if (!side.count(v) || side.at(v) == side.at(w))
      return {};
  return side;
}

inline bool check_symmetry(const PlabicGraph &g, const std::map<int, int> &r)
{
  if (!validate(g).empty())
    return false;
  auto inv = derive_involution(g);
  if (!inv || inv->vertex != r)
    return false;
  return !sides(g, *inv).empty();
}

inline bool check_symmetry(const SymmetricPlabicGraph &s) { return check_symmetry(s.graph, s.r); }

inline Involution require_involution(const PlabicGraph &g)
{
  auto inv = derive_involution(g);
  if (!inv || sides(g, *inv).empty())
    throw std::invalid_argument("graph is not symmetric about the diameter");
  return *inv;
}

inline SymmetricPlabicGraph make_symmetric(PlabicGraph g)
{
  auto inv = require_involution(g);
  return {std::move(g), inv.vertex};
}

inline SymmetricPlabicGraph symmetric_lollipop_graph(const std::set<int> &J, int n)
{
  for (int a = 1; a <= n; ++a)
    if (J.count(a) == J.count(2 * n + 1 - a))
      throw std::invalid_argument("J must contain exactly one of a, a'");
  return make_symmetric(lollipop_graph(J, 2 * n));
}

struct SymmetricBridgeGraph {
  SymmetricPlabicGraph graph;
  std::vector<Bridge> bridges; // addition order; paired bridges share a group
  std::set<int> start_set;
  int groups = 0;
};

// Bridge groups for the letters of a type-C word skipped by the positive
// distinguished subexpression of u, in word order.
inline std::vector<std::vector<std::pair<int, int>>> symmetric_bridge_groups(const Permutation &u, const Word &w)
{
  int N = u.size(), n = N / 2;
  auto mask = pds(u, w);
  auto pre = subexpression_prefixes(w, mask);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    if (mask[j])
      continue;
    int i = w.letters[j];
    int x = pre[j](i), y = pre[j](i + 1);
    int a = std::min(x, y), b = std::max(x, y);
    if (i == n)
      out.push_back({{a, b}});
    else
      out.push_back({{a, b}, {N + 1 - b, N + 1 - a}});
  }
  return out;
}

inline SymmetricBridgeGraph symmetric_bridge_graph(const Bd &f, std::optional<Word> word = std::nullopt)
{
  if (!is_type_C(f))
    throw std::invalid_argument("bounded affine permutation is not of type C");
  auto [u, w] = to_pair(f);
  Word ww = word ? *word : reduced_word(CoxeterType::C, w);
  if (ww.type != CoxeterType::C || product(ww) != w)
    throw std::invalid_argument("word does not represent w");
  auto groups = symmetric_bridge_groups(u, ww);
  int n = f.size() / 2;
  SymmetricBridgeGraph out;
  out.start_set = image_of_prefix(u, n);
  PlabicGraph g = lollipop_graph(out.start_set, 2 * n);
  int d = static_cast<int>(groups.size());
  for (int r = d; r >= 1; --r) {
    int gi = d - r;
    std::string param = "t" + std::to_string(gi + 1);
    for (auto [a, b] : groups[r - 1]) {
      auto res = add_bridge(g, a, b);
      g = std::move(res.graph);
      out.bridges.push_back({a, b, res.bridge_edge, param, gi});
    }
  }
  out.groups = d;
  out.graph = make_symmetric(std::move(g));
  return out;
}

template <class S> std::map<int, S> canonical_weighting(const PlabicGraph &g, const std::vector<Bridge> &bridges)
{
  std::map<int, S> w;
  for (auto const &[id, e] : g.edges)
    w[id] = S(1);
  for (auto const &b : bridges)
    w[b.edge] = S::var(b.param);
  return w;
}

template <class S> bool is_symmetric_weighting(const SymmetricPlabicGraph &s, const std::map<int, S> &w)
{
  auto inv = require_involution(s.graph);
  for (auto const &[e, f] : inv.edge)
    if (!(w.at(e) == w.at(f)))
      return false;
  return true;
}

// Breadth-first forest of the first half from its boundary, mirrored.
inline std::set<int> symmetric_gauge_forest(const SymmetricPlabicGraph &s)
{
  auto const &g = s.graph;
  auto inv = require_involution(g);
  auto side = sides(g, inv);
  auto cross = crossing_edges(g, inv);
  std::set<int> F;
  std::set<int> seen;
  std::deque<int> q;
  for (int a = 1; a <= g.n / 2; ++a) {
    seen.insert(g.boundary_ids[a - 1]);
    q.push_back(g.boundary_ids[a - 1]);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.vertex(v).rotation) {
      if (cross.count(e))
        continue;
      int x = g.edge(e).other(v);
      if (seen.insert(x).second) {
        F.insert(e);
        F.insert(inv.edge.at(e));
        q.push_back(x);
      }
    }
  }
  for (auto const &[v, sd] : side)
    if (sd == 0 && !seen.count(v))
      throw std::invalid_argument("a vertex reaches the boundary only across the diameter");
  return F;
}

inline bool is_symmetric_reduced(const SymmetricPlabicGraph &s)
{
  require_involution(s.graph);
  return is_reduced(s.graph);
}

// Midline crossing edges in the order the diameter meets them, walking from
// the rim point between 2n and 1 to the one between n and n+1.
inline std::vector<int> crossing_order(const PlabicGraph &g, const Involution &inv)
{
  auto cross = crossing_edges(g, inv);
  detail::AugmentedRotation ar(g);
  auto faces = ar.faces();
  std::vector<int> face_of(ar.dart_head.size());
  int outer = -1;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool all_rim = true;
    for (int d : faces[i]) {
      face_of[d] = static_cast<int>(i);
      all_rim = all_rim && ar.dart_of[d].edge == 0;
    }
    if (all_rim && static_cast<int>(faces[i].size()) == g.n)
      outer = static_cast<int>(i);
  }
  auto rim_dart = [&](int b) {
    for (std::size_t d = 0; d < ar.dart_of.size(); ++d)
      if (ar.dart_of[d].edge == 0 && std::abs(ar.dart_of[d].from) == b && face_of[d] != outer)
        return static_cast<int>(d);
    throw std::logic_error("rim arc not found");
  };
  auto is_mark = [&](int d, int end_dart) {
    return d == end_dart || (ar.dart_of[d].edge != 0 && cross.count(ar.dart_of[d].edge));
  };
  int start = rim_dart(g.n), finish = rim_dart(g.n / 2);
  std::vector<int> order;
  int cur = start;
  for (std::size_t steps = 0; steps <= g.edges.size(); ++steps) {
    int other = -1;
    for (int d : faces[face_of[cur]])
      if (d != cur && is_mark(d, finish) && d != start)
        other = other < 0 ? d : other;
    if (other < 0)
      throw std::logic_error("diameter leaves a face without crossing");
    if (other == finish)
      return order;
    order.push_back(ar.dart_of[other].edge);
    cur = ar.twin(other);
  }
  throw std::logic_error("diameter does not reach the far rim point");
}

// One half of the graph: boundary 1..n of the half in clockwise order, then
// cut points of the crossing edges. The edge ids stay those of G.
inline PlabicGraph half_graph(const PlabicGraph &g, const Involution &inv, int which)
{
  auto side = sides(g, inv);
  auto cross = crossing_edges(g, inv);
  auto order = crossing_order(g, inv);
  int n = g.n / 2;
  std::vector<int> cut = order;
  if (which == 0)
    std::reverse(cut.begin(), cut.end());
  PlabicGraph h;
  h.n = n + static_cast<int>(cut.size());
  int next = g.next_vertex_id();
  for (auto const &[id, v] : g.vertices)
    if (side.at(id) == which) {
      Vertex nv = v;
      if (v.is_boundary())
        nv.boundary = which == 0 ? v.boundary : v.boundary - n;
      h.vertices[id] = nv;
    }
  for (auto const &[id, e] : g.edges)
    if (side.at(e.u) == which && side.at(e.v) == which)
      h.edges[id] = e;
  for (int a = 1; a <= n; ++a)
    h.boundary_ids.push_back(g.boundary_ids[(which == 0 ? a : n + a) - 1]);
  for (std::size_t i = 0; i < cut.size(); ++i) {
    int e = cut[i];
    Edge ed = g.edge(e);
    int inner = side.at(ed.u) == which ? ed.u : ed.v;
    int b = next++;
    h.vertices[b] = Vertex{b, opposite(g.vertex(inner).color), n + static_cast<int>(i) + 1, {e}};
    h.edges[e] = Edge{e, inner, b};
    h.boundary_ids.push_back(b);
  }
  return h;
}

inline std::pair<PlabicGraph, PlabicGraph> split_halves(const SymmetricPlabicGraph &s)
{
  auto inv = require_involution(s.graph);
  return {half_graph(s.graph, inv, 0), half_graph(s.graph, inv, 1)};
}

// Reverses rotations and colors and renumbers the boundary so that it again
// runs clockwise, blocks [1,p] and [p+1,n] each reversed.
inline PlabicGraph mirror_graph(const PlabicGraph &g, int p)
{
  PlabicGraph m = g;
  for (auto &[id, v] : m.vertices) {
    std::reverse(v.rotation.begin(), v.rotation.end());
    v.color = opposite(v.color);
    if (v.is_boundary())
      v.boundary = v.boundary <= p ? p + 1 - v.boundary : g.n + p + 1 - v.boundary;
  }
  for (auto const &[id, v] : m.vertices)
    if (v.is_boundary())
      m.boundary_ids[v.boundary - 1] = id;
  return m;
}

struct SymmetricMove {
  // paired: "square", "remove_degree2", "subdivide"; on the diameter:
  // "midline_square", "crossing_insert" (edge id), "crossing_remove" (vertex id)
  std::string kind;
  std::vector<int> ids;
};

template <class S> struct WeightedSymmetricGraph {
  SymmetricPlabicGraph graph;
  EdgeWeights<S> weights;
};

namespace detail {

// `touched` holds every vertex whose rotation the move rewrites.
inline void require_off_diameter(const Involution &inv, const std::set<int> &touched)
{
  for (int v : touched)
    if (touched.count(inv.vertex.at(v)))
      throw PatternError("paired move touches the diameter");
}

} // namespace detail

template <class S>
WeightedSymmetricGraph<S> weighted_symmetric_move(const WeightedSymmetricGraph<S> &in, const SymmetricMove &m)
{
  auto const &g0 = in.graph.graph;
  auto inv = require_involution(g0);
  WeightedGraph<S> cur{g0, in.weights};
  auto one = [&]() {
    if (m.ids.size() != 1)
      throw PatternError("move " + m.kind + " needs exactly one id");
    return m.ids[0];
  };
  if (m.kind == "square") {
    SquareMoveEdges info{};
    square_move(g0, m.ids, &info);
    std::set<int> touched(m.ids.begin(), m.ids.end());
    touched.insert(g0.edge(info.otop).other(info.top));
    touched.insert(g0.edge(info.obot).other(info.bottom));
    detail::require_off_diameter(inv, touched);
    Color tc = g0.vertex(info.top).color;
    std::vector<int> mirror;
    for (int v : m.ids)
      mirror.push_back(inv.vertex.at(v));
    cur = weighted_square_move(cur, m.ids, tc);
    cur = weighted_square_move(cur, mirror, opposite(tc));
  } else if (m.kind == "remove_degree2") {
    int v = one();
    std::set<int> touched{v};
    for (int x : g0.neighbors(v))
      touched.insert(x);
    detail::require_off_diameter(inv, touched);
    int mv = inv.vertex.at(v);
    int keep = g0.neighbors(v)[0];
    cur = weighted_remove_degree2(cur, v, keep);
    cur = weighted_remove_degree2(cur, mv, inv.vertex.at(keep));
  } else if (m.kind == "subdivide") {
    int e = one();
    auto const &ed = g0.edge(e);
    if (inv.edge.at(e) == e)
      throw PatternError("paired subdivision of a crossing edge");
    detail::require_off_diameter(inv, {ed.u, ed.v});
    int me = inv.edge.at(e);
    cur = weighted_subdivide(cur, e);
    cur = weighted_subdivide(cur, me);
  } else if (m.kind == "midline_square") {
    std::set<int> face(m.ids.begin(), m.ids.end());
    for (int v : face)
      if (!face.count(inv.vertex.at(v)))
        throw PatternError("square is not bisected by the diameter");
    cur = weighted_square_flip(cur, m.ids);
  } else if (m.kind == "crossing_insert") {
    int e = one();
    if (inv.edge.at(e) != e)
      throw PatternError("edge does not cross the diameter");
    S we = cur.weights.at(e);
    std::vector<int> created;
    PlabicGraph g = subdivide(cur.graph, e, &created);
    for (int x : created)
      for (int f : g.vertex(x).rotation)
        cur.weights[f] = we;
    cur.graph = std::move(g);
  } else if (m.kind == "crossing_remove") {
    int x = one();
    auto const &vx = g0.vertex(x);
    int y = inv.vertex.at(x);
    if (vx.is_boundary() || vx.degree() != 2 || g0.vertex(y).degree() != 2)
      throw PatternError("not a symmetric pair of degree-2 vertices");
    bool adjacent = false;
    for (int e : vx.rotation)
      adjacent = adjacent || g0.edge(e).other(x) == y;
    if (!adjacent)
      throw PatternError("degree-2 pair does not share a crossing edge");
    for (int e : vx.rotation)
      if (g0.vertex(g0.edge(e).other(x)).is_boundary())
        throw PatternError("degree-2 pair is adjacent to the boundary");
    // u -ea- x -ex- y -eb- u' becomes u -eb- u' with weight w(ea) w(eb) / w(ex),
    // which leaves every other weight alone and so keeps the weighting symmetric
    int ex = detail::edge_between(g0, x, y);
    int ea = vx.rotation[0] == ex ? vx.rotation[1] : vx.rotation[0];
    auto const &vy = g0.vertex(y);
    int eb = vy.rotation[0] == ex ? vy.rotation[1] : vy.rotation[0];
    S d = cur.weights.at(ea) * cur.weights.at(eb) / cur.weights.at(ex);
    cur.graph = remove_degree2(g0, x);
    cur.weights.erase(ea);
    cur.weights.erase(ex);
    cur.weights[eb] = d;
  } else {
    throw PatternError("unknown symmetric move " + m.kind);
  }
  auto out_inv = derive_involution(cur.graph);
  if (!out_inv)
    throw std::logic_error("symmetric move broke the symmetry");
  return {{cur.graph, out_inv->vertex}, cur.weights};
}

inline SymmetricPlabicGraph apply_symmetric_move(const SymmetricPlabicGraph &s, const SymmetricMove &m)
{
  WeightedSymmetricGraph<Rational> w{s, {}};
  for (auto const &[id, e] : s.graph.edges)
    w.weights[id] = Rational(1);
  return weighted_symmetric_move(w, m).graph;
}

// Symmetric moves applicable to s, found by trial; subdivisions and crossing
// insertions are listed last since they always apply.
inline std::vector<SymmetricMove> applicable_symmetric_moves(const SymmetricPlabicGraph &s)
{
  std::vector<SymmetricMove> out;
  auto attempt = [&](const char *kind, std::vector<int> ids) {
    try {
      apply_symmetric_move(s, {kind, ids});
      out.push_back({kind, std::move(ids)});
    } catch (const PatternError &) {
    }
  };
  auto const &g = s.graph;
  for (auto const &f : interior_faces(g)) {
    if (f.size() != 4)
      continue;
    std::vector<int> ids;
    for (auto const &d : f)
      ids.push_back(d.from);
    attempt("square", ids);
    attempt("midline_square", ids);
  }
  for (auto const &[id, v] : g.vertices)
    if (!v.is_boundary() && v.degree() == 2) {
      attempt("remove_degree2", {id});
      attempt("crossing_remove", {id});
    }
  for (auto const &[id, e] : g.edges) {
    attempt("subdivide", {id});
    attempt("crossing_insert", {id});
  }
  return out;
}

} // namespace symplabic

#endif
