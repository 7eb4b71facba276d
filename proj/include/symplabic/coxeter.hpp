#ifndef SYMPLABIC_COXETER_HPP
#define SYMPLABIC_COXETER_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplabic {

// Permutation of {1..n} in one-line notation. Composition acts on the left:
// (p * q)(x) = p(q(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n) : img_(n)
  {
    for (int i = 0; i < n; ++i)
      img_[i] = i + 1;
  }
  explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line))
  {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > size() || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation transposition(int n, int a, int b)
  {
    Permutation p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  std::vector<int> const &one_line() const { return img_; }

  Permutation inverse() const
  {
    Permutation r(size());
    for (int i = 1; i <= size(); ++i)
      r.img_[(*this)(i) - 1] = i;
    return r;
  }

  friend Permutation operator*(const Permutation &p, const Permutation &q)
  {
    if (p.size() != q.size())
      throw std::invalid_argument("size mismatch");
    Permutation r(p.size());
    for (int i = 1; i <= p.size(); ++i)
      r.img_[i - 1] = p(q(i));
    return r;
  }

  // Right multiplication by a transposition swaps positions.
  Permutation swapped_positions(int a, int b) const
  {
    Permutation r = *this;
    std::swap(r.img_[a - 1], r.img_[b - 1]);
    return r;
  }

  bool is_identity() const
  {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i)
        return false;
    return true;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  std::string str() const
  {
    std::string s = "(";
    for (int i = 0; i < size(); ++i)
      s += (i ? "," : "") + std::to_string(img_[i]);
    return s + ")";
  }

private:
  std::vector<int> img_;
};

enum class CoxeterType { A, C };

// Word in simple generators. Type A of rank r lives in S_{r+1}; type C of
// rank n is realized inside S_{2n}.
struct Word {
  CoxeterType type = CoxeterType::A;
  int rank = 0;
  std::vector<int> letters;

  friend bool operator==(const Word &, const Word &) = default;
};

inline int ambient_size(CoxeterType t, int rank)
{
  return t == CoxeterType::A ? rank + 1 : 2 * rank;
}

inline Permutation simple_reflection(CoxeterType t, int rank, int i)
{
  if (i < 1 || i > rank)
    throw std::invalid_argument("generator index out of range");
  if (t == CoxeterType::A)
    return Permutation::transposition(rank + 1, i, i + 1);
  int n = rank, N = 2 * n;
  if (i == n)
    return Permutation::transposition(N, n, n + 1);
  return Permutation::transposition(N, i, i + 1) * Permutation::transposition(N, N - i, N - i + 1);
}

// Type C elements are stored already embedded in S_2n; this checks the
// symmetry and returns the element.
inline Permutation embed_C_to_A(const Permutation &w)
{
  if (w.size() % 2)
    throw std::invalid_argument("not an element of the type C Weyl group");
  for (int a = 1; a <= w.size(); ++a)
    if (w(w.size() + 1 - a) != w.size() + 1 - w(a))
      throw std::invalid_argument("not an element of the type C Weyl group");
  return w;
}

inline Word embed_word_C_to_A(const Word &w)
{
  if (w.type != CoxeterType::C)
    throw std::invalid_argument("expected a type C word");
  int n = w.rank;
  Word out{CoxeterType::A, 2 * n - 1, {}};
  for (int i : w.letters) {
    out.letters.push_back(i);
    if (i < n)
      out.letters.push_back(2 * n - i);
  }
  return out;
}

inline Permutation product(const Word &w)
{
  Permutation p(ambient_size(w.type, w.rank));
  for (int i : w.letters)
    p = p * simple_reflection(w.type, w.rank, i);
  return p;
}

inline int length(const Permutation &w)
{
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j))
        ++inv;
  return inv;
}

// Embedded signed permutations: w(2n+1-a) = 2n+1-w(a).
inline bool is_type_C(const Permutation &w)
{
  int N = w.size();
  if (N % 2)
    return false;
  for (int a = 1; a <= N; ++a)
    if (w(N + 1 - a) != N + 1 - w(a))
      return false;
  return true;
}

inline void require_type_C(const Permutation &w)
{
  if (!is_type_C(w))
    throw std::invalid_argument("not an element of the type C Weyl group");
}

inline int length_C(const Permutation &w)
{
  require_type_C(w);
  int n = w.size() / 2, neg = 0;
  for (int i = 1; i <= n; ++i)
    if (w(i) > n)
      ++neg;
  return (length(w) + neg) / 2;
}

inline int length(CoxeterType t, const Permutation &w)
{
  return t == CoxeterType::A ? length(w) : length_C(w);
}

inline int rank_of(CoxeterType t, const Permutation &w)
{
  return t == CoxeterType::A ? w.size() - 1 : w.size() / 2;
}

inline bool is_reduced(const Word &w)
{
  return length(w.type, product(w)) == static_cast<int>(w.letters.size());
}

// Greedy right-descent peeling; returns a reduced word for w.
inline Word reduced_word(CoxeterType t, const Permutation &w)
{
  int r = rank_of(t, w);
  Word out{t, r, {}};
  Permutation v = w;
  int l = length(t, v);
  while (l > 0) {
    bool found = false;
    for (int i = 1; i <= r && !found; ++i) {
      Permutation vs = v * simple_reflection(t, r, i);
      if (length(t, vs) < l) {
        out.letters.push_back(i);
        v = vs;
        --l;
        found = true;
      }
    }
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

// u <= w in Bruhat order via the rank-matrix criterion. Valid for embedded
// type C elements as well since the embedding respects Bruhat order.
inline bool bruhat_leq(const Permutation &u, const Permutation &w)
{
  int n = u.size();
  if (w.size() != n)
    throw std::invalid_argument("size mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cw = 0;
      for (int a = 1; a <= i; ++a) {
        cu += u(a) >= j;
        cw += w(a) >= j;
      }
      if (cu > cw)
        return false;
    }
  return true;
}

inline bool is_grassmannian(const Permutation &w, int k)
{
  for (int i = 1; i < w.size(); ++i)
    if (i != k && w(i) > w(i + 1))
      return false;
  return true;
}

inline Permutation grassmannian_from_set(int n, const std::set<int> &top)
{
  std::vector<int> v(top.begin(), top.end());
  for (int i = 1; i <= n; ++i)
    if (!top.count(i))
      v.push_back(i);
  return Permutation(v);
}

// For Grassmannian w the Bruhat interval below it is cut out by coordinate
// inequalities.
inline bool grassmannian_leq(const Permutation &u, const Permutation &w, int k)
{
  if (!is_grassmannian(w, k))
    throw std::invalid_argument("upper element is not Grassmannian");
  for (int i = 1; i <= u.size(); ++i)
    if (i <= k ? u(i) > w(i) : u(i) < w(i))
      return false;
  return true;
}

struct CosetFactorization {
  Permutation min_rep;
  Permutation parabolic;
};

// w = min_rep * parabolic with parabolic in S_k x S_{n-k}.
inline CosetFactorization coset_factorize(const Permutation &w, int k)
{
  auto v = w.one_line();
  std::sort(v.begin(), v.begin() + k);
  std::sort(v.begin() + k, v.end());
  Permutation m(v);
  return {m, m.inverse() * w};
}

inline std::pair<Permutation, Permutation> canonical_rep(const Permutation &u,
                                                         const Permutation &w, int k)
{
  auto [m, p] = coset_factorize(w, k);
  return {u * p.inverse(), m};
}

// Reflections of the ambient group as permutations of the realization.
inline std::vector<Permutation> reflections(CoxeterType t, int N)
{
  std::vector<Permutation> out;
  if (t == CoxeterType::A) {
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b)
        out.push_back(Permutation::transposition(N, a, b));
    return out;
  }
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      int ap = N + 1 - a, bp = N + 1 - b;
      if (b == ap)
        out.push_back(Permutation::transposition(N, a, b));
      else if (a < bp)
        out.push_back(Permutation::transposition(N, a, b) *
                      Permutation::transposition(N, bp, ap));
    }
  return out;
}

// The parabolic subgroup here is S_k x S_{n-k} (type A) or the subgroup
// preserving {1..n} (type C with k = n); both are the stabilizer of [k].
inline bool same_coset(const Permutation &u, const Permutation &v, int k)
{
  Permutation q = u.inverse() * v;
  for (int i = 1; i <= k; ++i)
    if (q(i) > k)
      return false;
  return true;
}

// u <=_k w: a saturated chain from u to w whose covers all change the left
// coset modulo the parabolic subgroup.
inline bool k_bruhat_leq(CoxeterType t, const Permutation &u, const Permutation &w, int k)
{
  if (!bruhat_leq(u, w))
    return false;
  int lw = length(t, w);
  auto refl = reflections(t, u.size());
  std::set<Permutation> seen{u};
  std::deque<Permutation> q{u};
  while (!q.empty()) {
    Permutation v = q.front();
    q.pop_front();
    if (v == w)
      return true;
    int lv = length(t, v);
    if (lv >= lw)
      continue;
    for (auto const &r : refl) {
      Permutation x = v * r;
      if (length(t, x) != lv + 1 || same_coset(v, x, k) || !bruhat_leq(x, w))
        continue;
      if (seen.insert(x).second)
        q.push_back(x);
    }
  }
  return false;
}

inline bool k_bruhat_leq(const Permutation &u, const Permutation &w, int k)
{
  return k_bruhat_leq(CoxeterType::A, u, w, k);
}

// Positive distinguished subexpression for u in the reduced word w.
// mask[j] is true when letter j is kept in the subexpression.
inline std::vector<bool> pds(const Permutation &u, const Word &w)
{
  if (!is_reduced(w))
    throw std::invalid_argument("word is not reduced");
  if (!bruhat_leq(u, product(w)))
    throw std::invalid_argument("u is not below the word's product");
  std::vector<bool> mask(w.letters.size(), false);
  Permutation v = u;
  for (int j = static_cast<int>(w.letters.size()) - 1; j >= 0; --j) {
    Permutation vs = v * simple_reflection(w.type, w.rank, w.letters[j]);
    if (length(w.type, vs) < length(w.type, v)) {
      mask[j] = true;
      v = vs;
    }
  }
  if (!v.is_identity())
    throw std::logic_error("no positive distinguished subexpression found");
  return mask;
}

// Prefix products u_(0), ..., u_(m) of the subexpression selected by mask.
inline std::vector<Permutation> subexpression_prefixes(const Word &w, const std::vector<bool> &mask)
{
  std::vector<Permutation> out{Permutation(ambient_size(w.type, w.rank))};
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    Permutation p = out.back();
    if (mask[j])
      p = p * simple_reflection(w.type, w.rank, w.letters[j]);
    out.push_back(p);
  }
  return out;
}

inline std::vector<Permutation> all_permutations(int n)
{
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = i + 1;
  std::vector<Permutation> out;
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Permutation> all_type_C(int n)
{
  std::vector<Permutation> out;
  for (auto const &p : all_permutations(2 * n))
    if (is_type_C(p))
      out.push_back(p);
  return out;
}

} // namespace symplabic

#endif
