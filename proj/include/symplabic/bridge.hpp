#ifndef SYMPLABIC_BRIDGE_HPP
#define SYMPLABIC_BRIDGE_HPP

#include "symplabic/plabic.hpp"

#include <optional>

namespace symplabic {

struct Bridge {
  int a = 0, b = 0;
  int edge = 0;       // edge id in the resulting graph
  std::string param;  // shared by the bridges of one group
  int group = 0;
};

struct BridgeGraph {
  PlabicGraph graph;
  std::vector<Bridge> bridges; // in addition order
  std::set<int> start_set;     // u([k]), the lollipop data
};

inline std::set<int> image_of_prefix(const Permutation &u, int k)
{
  std::set<int> s;
  for (int i = 1; i <= k; ++i)
    s.insert(u(i));
  return s;
}

inline bool interval_ok(const Permutation &u, const Permutation &w, int k)
{
  if (is_grassmannian(w, k))
    return grassmannian_leq(u, w, k);
  return k_bruhat_leq(u, w, k);
}

// Bridges (a_r,b_r) = u_(j_r - 1) s_{i_{j_r}} u_(j_r - 1)^{-1} for the letters
// skipped by the positive distinguished subexpression, in word order.
inline std::vector<std::pair<int, int>> bridge_transpositions(const Permutation &u, const Word &w)
{
  auto mask = pds(u, w);
  auto pre = subexpression_prefixes(w, mask);
  std::vector<std::pair<int, int>> out;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    if (mask[j])
      continue;
    int i = w.letters[j];
    int x = pre[j](i), y = pre[j](i + 1);
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  return out;
}

inline BridgeGraph bridge_graph(const Permutation &u, const Permutation &w, int k,
                                std::optional<Word> word = std::nullopt)
{
  if (!interval_ok(u, w, k))
    throw std::invalid_argument("bridge graph requires u <=_k w");
  Word ww = word ? *word : reduced_word(CoxeterType::A, w);
  if (ww.type != CoxeterType::A || product(ww) != w)
    throw std::invalid_argument("word does not represent w");
  auto ts = bridge_transpositions(u, ww);
  BridgeGraph out;
  out.start_set = image_of_prefix(u, k);
  out.graph = lollipop_graph(out.start_set, u.size());
  int d = static_cast<int>(ts.size());
  for (int r = d; r >= 1; --r) {
    auto [a, b] = ts[r - 1];
    auto res = add_bridge(out.graph, a, b);
    out.graph = std::move(res.graph);
    out.bridges.push_back({a, b, res.bridge_edge, "t" + std::to_string(r), d - r});
  }
  return out;
}

// Negative sign iff an odd number of elements of the start set lie strictly
// between a and b.
inline bool bridge_sign_negative(const std::set<int> &start, int a, int b)
{
  int c = 0;
  for (int x : start)
    if (a < x && x < b)
      ++c;
  return c % 2 == 1;
}

} // namespace symplabic

#endif
