#include "../support.hpp"

#include <gtest/gtest.h>

#include <deque>

using namespace symplabic;

namespace {

using oracle::contract_symmetric;
using oracle::face_ids;
using oracle::prepare_symmetric_square;

std::string key(const PlabicGraph &g) { return to_json(canonical_form(g)).dump(); }

// Breadth-first search over square moves (paired or on the diameter), up to
// symmetric degree-2 contraction, for a graph isomorphic to `to`.
bool symmetric_move_path(const SymmetricPlabicGraph &from, const SymmetricPlabicGraph &to, std::size_t limit = 300)
{
  auto start = contract_symmetric(from);
  std::string goal = key(contract_symmetric(to).graph);
  std::set<std::string> seen{key(start.graph)};
  std::deque<SymmetricPlabicGraph> q{start};
  while (!q.empty() && seen.size() < limit) {
    auto s = q.front();
    q.pop_front();
    if (key(s.graph) == goal)
      return true;
    for (auto const &f : interior_faces(s.graph)) {
      if (f.size() != 4)
        continue;
      auto ids = face_ids(f);
      std::vector<SymmetricPlabicGraph> next;
      try {
        next.push_back(apply_symmetric_move(s, {"midline_square", ids}));
      } catch (const PatternError &) {
      }
      if (auto t = prepare_symmetric_square(s, ids)) {
        try {
          next.push_back(apply_symmetric_move(*t, {"square", ids}));
        } catch (const PatternError &) {
        }
      }
      for (auto &h : next) {
        auto c = contract_symmetric(h);
        if (seen.insert(key(c.graph)).second)
          q.push_back(c);
      }
    }
  }
  return false;
}

WeightedSymmetricGraph<Rational> random_symmetric_weighting(const SymmetricPlabicGraph &s, Rng &rng)
{
  return {s, oracle::symmetric_positive_weights(s.graph, rng)};
}

} // namespace

TEST(CheckSymmetry, Lollipops)
{
  auto s = symmetric_lollipop_graph({1, 3}, 2);
  EXPECT_TRUE(check_symmetry(s));
  EXPECT_TRUE(is_symmetric_reduced(s));
  EXPECT_EQ(s.r.at(s.graph.boundary_ids[0]), s.graph.boundary_ids[3]);
  EXPECT_THROW(symmetric_lollipop_graph({1, 4}, 2), std::invalid_argument);
  EXPECT_FALSE(derive_involution(lollipop_graph({1, 4}, 4)).has_value());

  // recolor one lollipop: no longer mirror symmetric
  PlabicGraph g = s.graph;
  int b = g.boundary_ids[0];
  int leaf = g.neighbors(b)[0];
  g.vertex(b).color = opposite(g.vertex(b).color);
  g.vertex(leaf).color = opposite(g.vertex(leaf).color);
  EXPECT_FALSE(check_symmetry(g, s.r));
  EXPECT_FALSE(check_symmetry(s.graph, {}));
}

TEST(SymmetricBridge, Examples)
{
  auto one = symmetric_bridge_graph(Bd({2, 3}));
  ASSERT_EQ(one.bridges.size(), 1u);
  EXPECT_EQ(std::make_pair(one.bridges[0].a, one.bridges[0].b), std::make_pair(1, 2));
  EXPECT_EQ(one.groups, 1);

  auto top = symmetric_bridge_graph(Bd({3, 4, 5, 6}));
  std::vector<std::tuple<int, int, std::string>> got;
  for (auto const &b : top.bridges)
    got.emplace_back(b.a, b.b, b.param);
  EXPECT_EQ(got, (std::vector<std::tuple<int, int, std::string>>{
                     {2, 3, "t1"}, {1, 2, "t2"}, {3, 4, "t2"}, {2, 3, "t3"}}));
  EXPECT_EQ(top.groups, 3);

  auto lol = symmetric_bridge_graph(translation_element({1, 2}, 4));
  EXPECT_TRUE(lol.bridges.empty());
  EXPECT_THROW(symmetric_bridge_graph(Bd({1, 3, 4, 6})), std::invalid_argument);
}

TEST(SymmetricBridge, PipelineForAllTypeC)
{
  for (int n = 1; n <= 3; ++n) {
    int count = 0;
    for (auto const &f : enumerate_Bd_C(n)) {
      ++count;
      auto sb = symmetric_bridge_graph(f);
      auto const &g = sb.graph.graph;
      ASSERT_TRUE(validate(g).empty()) << f.str();
      ASSERT_EQ(bounded_affine_of_graph(g), f);
      ASSERT_TRUE(oracle::affine_type_C(bounded_affine_of_graph(g)));
      ASSERT_TRUE(check_symmetry(sb.graph)) << f.str();
      ASSERT_TRUE(is_reduced(g)) << f.str();
      ASSERT_TRUE(is_symmetric_reduced(sb.graph));
      ASSERT_EQ(oracle::face_count(g), oracle::reduced_face_count(f)) << f.str();
      auto w = canonical_weighting<Poly>(g, sb.bridges);
      ASSERT_TRUE(is_symmetric_weighting(sb.graph, w));
      std::set<std::string> params;
      for (auto const &b : sb.bridges)
        params.insert(b.param);
      ASSERT_EQ(static_cast<int>(params.size()), sb.groups);
    }
    EXPECT_EQ(count, (std::vector<int>{3, 13, 79}[n - 1]));
  }
}

TEST(Halves, MirroredAndValid)
{
  for (int n = 1; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto sb = symmetric_bridge_graph(f);
      auto [g1, g2] = split_halves(sb.graph);
      ASSERT_TRUE(validate(g1).empty()) << f.str();
      ASSERT_TRUE(validate(g2).empty()) << f.str();
      ASSERT_EQ(g1.n, g2.n);
      ASSERT_TRUE(isomorphic(g2, mirror_graph(g1, n))) << f.str();
    }
}

TEST(Halves, Examples)
{
  auto s = symmetric_lollipop_graph({1, 2, 4}, 3);
  auto [g1, g2] = split_halves(s);
  EXPECT_EQ(g1.n, 3);
  EXPECT_TRUE(isomorphic(g1, lollipop_graph({1, 2}, 3)));

  auto one = symmetric_bridge_graph(Bd({2, 3}));
  auto [h1, h2] = split_halves(one.graph);
  EXPECT_EQ(h1.n, 2);
  for (auto const *h : {&h1, &h2})
    for (auto const &[id, v] : h->vertices)
      EXPECT_LE(v.degree(), 2);
  EXPECT_EQ(h1.edges.size(), h1.vertices.size() - 1);
}

TEST(Gauge, SymmetricForestIsInvariant)
{
  Rng rng(31);
  for (int n = 1; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto sb = symmetric_bridge_graph(f);
      auto const &g = sb.graph.graph;
      auto F = symmetric_gauge_forest(sb.graph);
      auto inv = require_involution(g);
      for (int e : F)
        ASSERT_TRUE(F.count(inv.edge.at(e)));
      auto w = canonical_weighting<Poly>(g, sb.bridges);
      std::map<int, RationalFunction> rw;
      for (auto const &[e, v] : w)
        rw[e] = RationalFunction(v);
      auto fixed = gauge_fix(g, rw, F);
      ASSERT_TRUE(is_symmetric_weighting(sb.graph, fixed));
    }
}

TEST(Moves, PairedDegreeTwoRoundTrip)
{
  auto sb = symmetric_bridge_graph(Bd({3, 4, 5, 6}));
  auto const &s = sb.graph;
  auto inv = require_involution(s.graph);
  for (auto const &[e, m] : inv.edge) {
    SymmetricPlabicGraph t;
    if (e == m) {
      t = apply_symmetric_move(s, {"crossing_insert", {e}});
    } else {
      auto const &ed = s.graph.edge(e);
      if (s.graph.vertex(ed.u).is_boundary() || s.graph.vertex(ed.v).is_boundary())
        continue;
      t = apply_symmetric_move(s, {"subdivide", {e}});
    }
    ASSERT_TRUE(check_symmetry(t));
    ASSERT_EQ(bounded_affine_of_graph(t.graph), bounded_affine_of_graph(s.graph));
    ASSERT_TRUE(isomorphic(contract_symmetric(t).graph, contract_symmetric(s).graph));
  }
}

TEST(Moves, MidlineSquareTwiceIsIdentity)
{
  Rng rng(12);
  int done = 0;
  for (int n = 2; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto s = contract_symmetric(symmetric_bridge_graph(f).graph);
      for (auto const &face : interior_faces(s.graph)) {
        if (face.size() != 4)
          continue;
        auto ids = face_ids(face);
        auto W = random_symmetric_weighting(s, rng);
        WeightedSymmetricGraph<Rational> W1;
        try {
          W1 = weighted_symmetric_move(W, {"midline_square", ids});
        } catch (const PatternError &) {
          continue;
        }
        auto W2 = weighted_symmetric_move(W1, {"midline_square", ids});
        ASSERT_TRUE(check_symmetry(W1.graph));
        ASSERT_TRUE(isomorphic(W2.graph.graph, s.graph)) << f.str();
        auto p0 = oracle::measurement(s.graph, W.weights);
        ASSERT_TRUE(projectively_equal(boundary_measurement_memo(s.graph, W.weights),
                                       boundary_measurement_memo(W1.graph.graph, W1.weights)));
        ASSERT_TRUE(projectively_equal(boundary_measurement_memo(s.graph, W.weights),
                                       boundary_measurement_memo(W2.graph.graph, W2.weights)));
        ++done;
      }
    }
  EXPECT_GE(done, 3);
}

TEST(Moves, MidlineSquareRecolorsFace)
{
  auto s = contract_symmetric(symmetric_bridge_graph(Bd({3, 4, 5, 6})).graph);
  bool found = false;
  for (auto const &face : interior_faces(s.graph)) {
    auto ids = face_ids(face);
    if (ids.size() != 4)
      continue;
    SymmetricPlabicGraph t;
    try {
      t = apply_symmetric_move(s, {"midline_square", ids});
    } catch (const PatternError &) {
      continue;
    }
    found = true;
    for (int v : ids)
      EXPECT_EQ(t.graph.vertex(v).color, opposite(s.graph.vertex(v).color));
    EXPECT_EQ(bounded_affine_of_graph(t.graph), Bd({3, 4, 5, 6}));
  }
  EXPECT_TRUE(found);
}

TEST(Moves, PairedSquareKeepsMeasurement)
{
  Rng rng(9);
  int ok = 0;
  for (int n = 3; n <= 4; ++n) {
    auto fs = enumerate_Bd_C(n);
    for (std::size_t i = 0; i < fs.size(); i += n == 3 ? 1 : 10) {
      Bd f = fs[i];
      auto s = contract_symmetric(symmetric_bridge_graph(f).graph);
      for (auto const &face : interior_faces(s.graph)) {
        if (face.size() != 4)
          continue;
        auto ids = face_ids(face);
        auto t = prepare_symmetric_square(s, ids);
        if (!t)
          continue;
        auto W = random_symmetric_weighting(*t, rng);
        WeightedSymmetricGraph<Rational> W2;
        try {
          W2 = weighted_symmetric_move(W, {"square", ids});
        } catch (const PatternError &) {
          continue;
        }
        ASSERT_TRUE(validate(W2.graph.graph).empty());
        ASSERT_TRUE(check_symmetry(W2.graph));
        ASSERT_EQ(bounded_affine_of_graph(W2.graph.graph), f);
        ASSERT_TRUE(is_symmetric_weighting(W2.graph, W2.weights));
        ASSERT_TRUE(projectively_equal(boundary_measurement_memo(t->graph, W.weights),
                                       boundary_measurement_memo(W2.graph.graph, W2.weights)));
        ++ok;
      }
    }
  }
  EXPECT_GE(ok, 5);
}

TEST(Moves, RandomSymmetricWalk)
{
  Rng rng(5);
  std::map<std::string, int> used;
  for (int n = 2; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto W = random_symmetric_weighting(symmetric_bridge_graph(f).graph, rng);
      auto p0 = boundary_measurement_memo(W.graph.graph, W.weights);
      for (int step = 0; step < 8; ++step) {
        auto ms = applicable_symmetric_moves(W.graph);
        std::vector<SymmetricMove> pref;
        for (auto const &m : ms)
          if (m.kind != "subdivide" && m.kind != "crossing_insert")
            pref.push_back(m);
        auto const &pool = !pref.empty() && random_int(rng, 0, 2) ? pref : ms;
        auto m = pool[random_int(rng, 0, static_cast<int>(pool.size()) - 1)];
        ++used[m.kind];
        W = weighted_symmetric_move(W, m);
        auto const &g = W.graph.graph;
        ASSERT_TRUE(validate(g).empty()) << m.kind;
        ASSERT_EQ(bounded_affine_of_graph(g), f) << m.kind;
        ASSERT_TRUE(check_symmetry(W.graph)) << m.kind;
        ASSERT_TRUE(is_symmetric_weighting(W.graph, W.weights)) << m.kind;
        ASSERT_TRUE(projectively_equal(p0, boundary_measurement_memo(g, W.weights))) << m.kind;
      }
    }
  for (auto kind : {"remove_degree2", "subdivide", "crossing_insert", "crossing_remove"})
    EXPECT_GT(used[kind], 0) << kind;
}

TEST(Moves, PatternErrors)
{
  auto s = symmetric_bridge_graph(Bd({3, 4, 5, 6})).graph;
  auto inv = require_involution(s.graph);
  int crossing = *crossing_edges(s.graph, inv).begin();
  EXPECT_THROW(apply_symmetric_move(s, {"subdivide", {crossing}}), PatternError);
  int off = 0;
  for (auto const &[e, m] : inv.edge)
    if (e != m)
      off = e;
  EXPECT_THROW(apply_symmetric_move(s, {"crossing_insert", {off}}), PatternError);
  EXPECT_THROW(apply_symmetric_move(s, {"warp", {}}), PatternError);
  EXPECT_THROW(apply_symmetric_move(s, {"crossing_remove", {s.graph.boundary_ids[0]}}), PatternError);
}

TEST(Reducedness, ParallelPairAcrossDiameter)
{
  for (int n = 1; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto s = symmetric_bridge_graph(f).graph;
      auto inv = require_involution(s.graph);
      for (int e : crossing_edges(s.graph, inv)) {
        auto const &ed = s.graph.edge(e);
        if (s.graph.vertex(ed.u).is_boundary() || s.graph.vertex(ed.v).is_boundary())
          continue;
        PlabicGraph h = oracle::inject_parallel(s.graph, e);
        auto hinv = derive_involution(h);
        ASSERT_TRUE(hinv.has_value()) << f.str();
        SymmetricPlabicGraph hs{h, hinv->vertex};
        ASSERT_TRUE(check_symmetry(hs));
        ASSERT_FALSE(is_symmetric_reduced(hs)) << f.str();
        ASSERT_EQ(is_symmetric_reduced(hs), is_reduced(h));
      }
    }
}

TEST(Reducedness, AgreesWithPlainOnWalks)
{
  Rng rng(77);
  for (auto const &f : enumerate_Bd_C(2)) {
    SymmetricPlabicGraph s = symmetric_bridge_graph(f).graph;
    for (int step = 0; step < 6; ++step) {
      std::vector<SymmetricMove> ms;
      for (auto const &m : applicable_symmetric_moves(s)) {
        bool at_leaf = false;
        if (m.kind == "subdivide")
          for (int v : {s.graph.edge(m.ids[0]).u, s.graph.edge(m.ids[0]).v})
            at_leaf = at_leaf || s.graph.vertex(v).degree() == 1;
        if (!at_leaf)
          ms.push_back(m);
      }
      if (ms.empty())
        break;
      s = apply_symmetric_move(s, ms[random_int(rng, 0, static_cast<int>(ms.size()) - 1)]);
      ASSERT_EQ(is_symmetric_reduced(s), is_reduced(s.graph));
      ASSERT_TRUE(is_symmetric_reduced(s));
    }
  }
}

TEST(Equivalence, ScrambledGraphsAreReconnected)
{
  Rng rng(41);
  int pairs = 0;
  for (int n = 2; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto a = symmetric_bridge_graph(f).graph;
      auto b = a;
      for (int step = 0; step < 10; ++step) {
        std::vector<SymmetricMove> squares;
        for (auto const &m : applicable_symmetric_moves(b))
          if (m.kind == "square" || m.kind == "midline_square")
            squares.push_back(m);
        for (auto const &face : interior_faces(b.graph))
          if (face.size() == 4)
            if (auto t = prepare_symmetric_square(b, face_ids(face)))
              try {
                apply_symmetric_move(*t, {"square", face_ids(face)});
                squares.push_back({"prepared", face_ids(face)});
              } catch (const PatternError &) {
              }
        if (squares.empty())
          break;
        auto m = squares[random_int(rng, 0, static_cast<int>(squares.size()) - 1)];
        b = m.kind == "prepared" ? apply_symmetric_move(*prepare_symmetric_square(b, m.ids), {"square", m.ids})
                                 : apply_symmetric_move(b, m);
        b = contract_symmetric(b);
      }
      if (key(contract_symmetric(a).graph) == key(b.graph))
        continue;
      ASSERT_EQ(bounded_affine_of_graph(b.graph), f);
      ASSERT_TRUE(symmetric_move_path(b, a)) << f.str();
      ++pairs;
    }
  EXPECT_GE(pairs, 5);
}

TEST(Equivalence, DifferentPermutationsStayApart)
{
  auto fs = enumerate_Bd_C(2);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (i != j && fs[i].k() == fs[j].k())
        ASSERT_FALSE(symmetric_move_path(symmetric_bridge_graph(fs[i]).graph, symmetric_bridge_graph(fs[j]).graph));
}
