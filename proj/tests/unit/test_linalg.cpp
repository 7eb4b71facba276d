#include "../support.hpp"

#include <gtest/gtest.h>

using namespace symplabic;

namespace {

Matrix<Rational> rat(std::vector<std::vector<int>> rows)
{
  Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 1; i <= m.rows; ++i)
    for (int j = 1; j <= m.cols; ++j)
      m(i, j) = rows[i - 1][j - 1];
  return m;
}

const Poly t1 = Poly::var("t1"), t2 = Poly::var("t2"), t3 = Poly::var("t3");

Matrix<Poly> symmetric_example(const std::vector<Poly> &params)
{
  return bridge_matrix_parametrization(Permutation(4), Permutation({3, 4, 1, 2}), 2, params,
                                       Word{CoxeterType::A, 3, {2, 1, 3, 2}});
}

bool both_modes(const PlueckerVector<Rational> &p)
{
  bool a = lagrangian_relations_check(p, LagrangianMode::cutout).pass;
  bool b = lagrangian_relations_check(p, LagrangianMode::lemma).pass;
  EXPECT_EQ(a, b);
  return a;
}

} // namespace

TEST(Determinant, AgreesWithLeibniz)
{
  Rng rng(1);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<Rational> m(n, n);
      for (auto &r : m.a)
        for (auto &x : r)
          x = random_rational(rng);
      ASSERT_EQ(determinant(m), oracle::leibniz_det(m.a));
      Matrix<Poly> pm(n, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          pm(i, j) = (i + j) % 3 == 0 ? Poly::var("x") * Poly(m(i, j)) : Poly(m(i, j));
      ASSERT_EQ(determinant(pm), oracle::leibniz_det(pm.a));
    }
}

TEST(Minors, Examples)
{
  auto p = minors_pluecker(rat({{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(p.coords.size(), 1u);
  EXPECT_EQ(p.at({2, 3}), Rational(1));
  Matrix<Poly> m(1, 2);
  m(1, 1) = Poly(1);
  m(1, 2) = Poly::var("t");
  auto q = minors_pluecker(m);
  EXPECT_EQ(q.at({1}), Poly(1));
  EXPECT_EQ(q.at({2}), Poly::var("t"));
  EXPECT_THROW(minors_pluecker(rat({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST(BridgeMatrix, Examples)
{
  auto none = bridge_matrix_parametrization<Poly>(Permutation({2, 1, 3}), Permutation({2, 1, 3}), 1, {});
  EXPECT_EQ(none, (Matrix<Poly>({{Poly(0), Poly(1), Poly(0)}})));
  auto one = bridge_matrix_parametrization<Poly>(Permutation(2), Permutation({2, 1}), 1, {Poly::var("t")});
  EXPECT_EQ(one, (Matrix<Poly>({{Poly(1), Poly::var("t")}})));

  auto m = symmetric_example({t1, t2, t2, t3});
  EXPECT_EQ(m, (Matrix<Poly>({{Poly(1), t2, t2 * t3, Poly(0)}, {Poly(0), Poly(1), t1 + t3, t1 * t2}})));
  auto p = minors_pluecker(m);
  EXPECT_EQ(p.at({1, 2}), Poly(1));
  EXPECT_EQ(p.at({1, 3}), t1 + t3);
  EXPECT_EQ(p.at({1, 4}), t1 * t2);
  EXPECT_EQ(p.at({2, 3}), t1 * t2);
  EXPECT_EQ(p.at({2, 4}), t1 * t2 * t2);
  EXPECT_EQ(p.at({3, 4}), t1 * t2 * t2 * t3);
  EXPECT_TRUE(lagrangian_relations_check(p, LagrangianMode::cutout).pass);
  EXPECT_TRUE(lagrangian_relations_check(p, LagrangianMode::lemma).pass);
  EXPECT_TRUE(is_lagrangian_matrix(m));

  EXPECT_THROW(bridge_matrix_parametrization<Poly>(Permutation({2, 1}), Permutation(2), 1, {}), std::invalid_argument);
}

// A bridge across the middle stays symplectic under t -> -t; flipping one
// member of a mirrored pair does not.
TEST(BridgeMatrix, SingleSignFlip)
{
  std::vector<Poly> params{t1, t2, t2, t3};
  auto bg = bridge_graph(Permutation(4), Permutation({3, 4, 1, 2}), 2, Word{CoxeterType::A, 3, {2, 1, 3, 2}});
  std::vector<std::pair<int, int>> bs;
  for (auto const &b : bg.bridges)
    bs.emplace_back(b.a, b.b);
  for (std::size_t r = 0; r < params.size(); ++r) {
    auto flipped = params;
    flipped[r] = Poly(0) - flipped[r];
    auto p = minors_pluecker(bridge_matrix(bg.start_set, 4, bs, flipped));
    auto [a, b] = bs[r];
    if (a + b == 5)
      EXPECT_EQ(p.at({1, 4}), p.at({2, 3})) << "bridge " << r;
    else
      EXPECT_NE(p.at({1, 4}), p.at({2, 3})) << "bridge " << r;
  }
}

TEST(BridgeMatrix, MinorsMatchBoundaryMeasurement)
{
  for (auto const &c : oracle::canonical_pairs(4)) {
    auto bg = bridge_graph(c.u, c.w, c.k);
    std::vector<Poly> params;
    for (auto const &b : bg.bridges)
      params.push_back(Poly::var(b.param));
    auto m = bridge_matrix_parametrization(c.u, c.w, c.k, params);
    auto p = boundary_measurement_memo(bg.graph, canonical_weighting<Poly>(bg.graph, bg.bridges));
    ASSERT_TRUE(projectively_equal(minors_pluecker(m), p)) << c.u.str() << " " << c.w.str() << " " << c.k;
  }
}

TEST(Symplectic, FormMatrix)
{
  EXPECT_EQ(symplectic_form_matrix<Rational>(1), rat({{0, 1}, {-1, 0}}));
  EXPECT_EQ(symplectic_form_matrix<Rational>(2), rat({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}));
  for (int n = 1; n <= 4; ++n) {
    auto E = symplectic_form_matrix<Rational>(n);
    auto T = transpose(E);
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j <= 2 * n; ++j)
        ASSERT_EQ(E(i, j) + T(i, j), Rational(0));
    ASSERT_NE(determinant(E), Rational(0));
  }
  EXPECT_THROW(symplectic_form_matrix<Rational>(0), std::invalid_argument);
}

TEST(Symplectic, LagrangianExamples)
{
  EXPECT_TRUE(is_lagrangian_matrix(rat({{3, -2}})));
  EXPECT_TRUE(is_lagrangian_matrix(rat({{1, 2, 0, 5}, {0, 0, 1, 2}})));
  EXPECT_FALSE(is_lagrangian_matrix(rat({{1, 2, 0, 5}, {0, 0, 1, 3}})));
  EXPECT_THROW(is_lagrangian_matrix(rat({{1, 2, 3}})), std::invalid_argument);
}

TEST(Symplectic, AgreesWithDirectForm)
{
  Rng rng(7);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      auto m = trial % 2 ? random_lagrangian_matrix(rng, n) : random_full_rank_matrix(rng, n, 2 * n);
      ASSERT_EQ(is_lagrangian_matrix(m), oracle::rows_isotropic(m));
    }
}

TEST(Relations, Witnesses)
{
  auto good = minors_pluecker(rat({{1, 2, 0, 5}, {0, 0, 1, 2}}));
  EXPECT_TRUE(lagrangian_relations_check(good, LagrangianMode::cutout).pass);
  EXPECT_TRUE(lagrangian_relations_check(good, LagrangianMode::lemma).pass);
  auto bad = minors_pluecker(rat({{1, 2, 0, 5}, {0, 0, 1, 3}}));
  auto c = lagrangian_relations_check(bad, LagrangianMode::cutout);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.witness, "D1,4 != D2,3");
  auto l = lagrangian_relations_check(bad, LagrangianMode::lemma);
  EXPECT_FALSE(l.pass);
  EXPECT_EQ(l.witness, "D2,3 != D1,4");
  EXPECT_THROW(lagrangian_relations_check(PlueckerVector<Rational>{2, 4, {}}, LagrangianMode::cutout),
               std::invalid_argument);
}

TEST(Relations, EveryPointOfGr12Passes)
{
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_TRUE(both_modes(minors_pluecker(random_full_rank_matrix(rng, 1, 2))));
}

TEST(Relations, EquivalentToFormOnRandomMatrices)
{
  Rng rng(2024);
  for (int n = 1; n <= 3; ++n) {
    int lag = 0, non = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto m = trial % 2 ? random_lagrangian_matrix(rng, n) : random_full_rank_matrix(rng, n, 2 * n);
      bool form = is_lagrangian_matrix(m);
      ASSERT_EQ(both_modes(minors_pluecker(m)), form) << "n=" << n << " trial " << trial;
      (form ? lag : non) += 1;
    }
    EXPECT_GE(lag, 50);
    if (n > 1)
      EXPECT_GE(non, 40);
  }
}

TEST(Relations, SymmetricBridgeMatricesAreLagrangian)
{
  for (int n = 1; n <= 3; ++n)
    for (auto const &f : enumerate_Bd_C(n)) {
      auto sb = symmetric_bridge_graph(f);
      std::vector<std::pair<int, int>> bs;
      std::vector<Poly> params;
      for (auto const &b : sb.bridges) {
        bs.emplace_back(b.a, b.b);
        params.push_back(Poly::var(b.param));
      }
      auto m = bridge_matrix(sb.start_set, 2 * n, bs, params);
      ASSERT_TRUE(is_lagrangian_matrix(m)) << f.str();
      auto p = minors_pluecker(m);
      ASSERT_TRUE(lagrangian_relations_check(p, LagrangianMode::cutout).pass) << f.str();
      ASSERT_TRUE(lagrangian_relations_check(p, LagrangianMode::lemma).pass) << f.str();
    }
}

TEST(ReflectSet, Examples)
{
  EXPECT_EQ(reflect_set({1, 2}, 4), (Subset{1, 2}));
  EXPECT_EQ(reflect_set({2, 3}, 4), (Subset{1, 4}));
  for (int N = 2; N <= 8; N += 2)
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
      Subset I;
      for (int i = 1; i <= N; ++i)
        if (mask >> (i - 1) & 1)
          I.push_back(i);
      Subset R = reflect_set(I, N);
      ASSERT_EQ(reflect_set(R, N), I);
      if (static_cast<int>(I.size()) == N / 2)
        ASSERT_EQ(R.size(), I.size());
    }
}
