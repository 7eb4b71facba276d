#ifndef SYMPLABIC_IO_HPP
#define SYMPLABIC_IO_HPP

#include "symplabic/linalg.hpp"
#include "symplabic/positroid.hpp"
#include "symplabic/symmetric.hpp"

#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

namespace symplabic {

using json = nlohmann::json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json to_json(const Permutation &p) { return p.one_line(); }

inline Permutation permutation_from_json(const json &j)
{
  if (!j.is_array())
    throw FormatError("permutation must be an array");
  return Permutation(j.get<std::vector<int>>());
}

inline json to_json(const Word &w)
{
  return {{"type", w.type == CoxeterType::A ? "A" : "C"}, {"rank", w.rank}, {"letters", w.letters}};
}

inline Word word_from_json(const json &j)
{
  std::string t = j.at("type").get<std::string>();
  if (t != "A" && t != "C")
    throw FormatError("word type must be A or C");
  return {t == "A" ? CoxeterType::A : CoxeterType::C, j.at("rank").get<int>(), j.at("letters").get<std::vector<int>>()};
}

inline json pair_to_json(const Permutation &u, const Permutation &w, int k)
{
  return {{"k", k}, {"u", u.one_line()}, {"w", w.one_line()}};
}

inline json to_json(const Bd &f) { return {{"N", f.size()}, {"k", f.k()}, {"window", f.window()}}; }

inline Bd bd_from_json(const json &j)
{
  Bd f(j.at("window").get<std::vector<int>>());
  if (j.contains("N") && j.at("N").get<int>() != f.size())
    throw FormatError("window length differs from N");
  if (j.contains("k") && j.at("k").get<int>() != f.k())
    throw FormatError("window has a different type k");
  return f;
}

inline json to_json(const DecoratedPermutation &d)
{
  std::vector<int> white, black;
  for (int i = 1; i <= d.sigma.size(); ++i) {
    if (d.colors[i - 1] == FixedColor::white)
      white.push_back(i);
    if (d.colors[i - 1] == FixedColor::black)
      black.push_back(i);
  }
  return {{"perm", d.sigma.one_line()}, {"white_fixed", white}, {"black_fixed", black}};
}

inline DecoratedPermutation decorated_from_json(const json &j)
{
  DecoratedPermutation d{permutation_from_json(j.at("perm")), {}};
  d.colors.assign(d.sigma.size(), FixedColor::none);
  auto mark = [&](const char *key, FixedColor c) {
    if (!j.contains(key))
      return;
    for (int i : j.at(key).get<std::vector<int>>()) {
      if (i < 1 || i > d.sigma.size() || d.sigma(i) != i)
        throw FormatError("color on a non-fixed point");
      d.colors[i - 1] = c;
    }
  };
  mark("white_fixed", FixedColor::white);
  mark("black_fixed", FixedColor::black);
  for (int i = 1; i <= d.sigma.size(); ++i)
    if (d.sigma(i) == i && d.colors[i - 1] == FixedColor::none)
      throw FormatError("fixed point " + std::to_string(i) + " has no color");
  return d;
}

inline json to_json(const GrassmannNecklace &N) { return {{"n", N.n}, {"k", N.k}, {"sets", N.sets}}; }

inline GrassmannNecklace necklace_from_json(const json &j)
{
  GrassmannNecklace N{j.at("n").get<int>(), j.at("k").get<int>(), j.at("sets").get<std::vector<Subset>>()};
  for (auto &s : N.sets)
    std::sort(s.begin(), s.end());
  if (!necklace_step_ok(N))
    throw FormatError("not a Grassmann necklace");
  return N;
}

inline json positroid_to_json(const Positroid &M, int n)
{
  return {{"n", n}, {"k", M.empty() ? 0 : static_cast<int>(M.begin()->size())}, {"bases", M}};
}

inline std::pair<Positroid, int> positroid_from_json(const json &j)
{
  Positroid M;
  for (auto s : j.at("bases").get<std::vector<Subset>>()) {
    std::sort(s.begin(), s.end());
    M.insert(s);
  }
  return {M, j.at("n").get<int>()};
}

inline json to_json(const LeDiagram &D)
{
  json fill = json::array();
  for (auto const &row : D.fill) {
    json r = json::array();
    for (bool b : row)
      r.push_back(b ? "+" : "0");
    fill.push_back(r);
  }
  json j{{"type", D.type == CoxeterType::A ? "A" : "B"}, {"n", D.n}, {"shape", D.shape}, {"filling", fill}};
  if (D.type == CoxeterType::A)
    j["k"] = D.k;
  return j;
}

inline LeDiagram le_from_json(const json &j)
{
  std::string t = j.at("type").get<std::string>();
  if (t != "A" && t != "B")
    throw FormatError("Le-diagram type must be A or B");
  LeDiagram D;
  D.type = t == "A" ? CoxeterType::A : CoxeterType::C;
  D.n = j.at("n").get<int>();
  D.k = D.type == CoxeterType::A ? j.at("k").get<int>() : D.n;
  D.shape = j.at("shape").get<std::vector<int>>();
  for (auto const &row : j.at("filling")) {
    std::vector<bool> r;
    for (auto const &x : row) {
      std::string s = x.get<std::string>();
      if (s != "+" && s != "0")
        throw FormatError("Le-diagram entries are \"+\" or \"0\"");
      r.push_back(s == "+");
    }
    D.fill.push_back(r);
  }
  if (!le_shape_ok(D))
    throw FormatError("malformed Le-diagram shape");
  return D;
}

inline json to_json(const PlabicGraph &g, const std::vector<Bridge> *bridges = nullptr,
                    const std::map<int, int> *symmetry = nullptr)
{
  json vs = json::array(), es = json::array();
  for (auto const &[id, v] : g.vertices) {
    json jv{{"id", id}, {"color", color_name(v.color)}, {"rotation", v.rotation}};
    if (v.is_boundary())
      jv["boundary"] = v.boundary;
    vs.push_back(jv);
  }
  for (auto const &[id, e] : g.edges)
    es.push_back({{"id", id}, {"ends", {e.u, e.v}}});
  json j{{"n", g.n}, {"vertices", vs}, {"edges", es}};
  if (bridges) {
    json bs = json::array();
    for (auto const &b : *bridges)
      bs.push_back({{"a", b.a}, {"b", b.b}, {"edge", b.edge}, {"param", b.param}, {"group", b.group}});
    j["bridges"] = bs;
  }
  if (symmetry) {
    json s = json::object();
    for (auto const &[v, w] : *symmetry)
      s[std::to_string(v)] = w;
    j["symmetry"] = s;
  }
  return j;
}

inline PlabicGraph graph_from_json(const json &j)
{
  PlabicGraph g;
  g.n = j.at("n").get<int>();
  g.boundary_ids.assign(g.n, 0);
  for (auto const &jv : j.at("vertices")) {
    Vertex v;
    v.id = jv.at("id").get<int>();
    std::string c = jv.at("color").get<std::string>();
    if (c != "black" && c != "white")
      throw FormatError("vertex color must be black or white");
    v.color = c == "black" ? Color::black : Color::white;
    v.boundary = jv.value("boundary", 0);
    v.rotation = jv.at("rotation").get<std::vector<int>>();
    if (v.boundary) {
      if (v.boundary < 1 || v.boundary > g.n || g.boundary_ids[v.boundary - 1])
        throw FormatError("bad boundary index");
      g.boundary_ids[v.boundary - 1] = v.id;
    }
    if (!g.vertices.emplace(v.id, v).second)
      throw FormatError("duplicate vertex id");
  }
  for (int b : g.boundary_ids)
    if (!b)
      throw FormatError("missing boundary vertex");
  for (auto const &je : j.at("edges")) {
    auto ends = je.at("ends").get<std::vector<int>>();
    if (ends.size() != 2)
      throw FormatError("an edge has two ends");
    int id = je.at("id").get<int>();
    if (!g.edges.emplace(id, Edge{id, ends[0], ends[1]}).second)
      throw FormatError("duplicate edge id");
  }
  for (auto const &[id, v] : g.vertices)
    for (int e : v.rotation)
      if (!g.edges.count(e) || (g.edges.at(e).u != id && g.edges.at(e).v != id))
        throw FormatError("rotation of vertex " + std::to_string(id) + " names a foreign edge");
  return g;
}

inline std::vector<Bridge> bridges_from_json(const json &j)
{
  std::vector<Bridge> out;
  if (!j.contains("bridges"))
    return out;
  for (auto const &b : j.at("bridges"))
    out.push_back({b.at("a").get<int>(), b.at("b").get<int>(), b.at("edge").get<int>(),
                   b.at("param").get<std::string>(), b.value("group", 0)});
  return out;
}

inline std::map<int, int> symmetry_from_json(const json &j)
{
  std::map<int, int> r;
  for (auto const &[k, v] : j.at("symmetry").items())
    r[std::stoi(k)] = v.get<int>();
  return r;
}

// Weight entries: rational strings, or {"var": name}.
inline Poly weight_from_json(const json &x)
{
  if (x.is_string())
    return parse_poly(x.get<std::string>());
  if (x.is_number_integer())
    return Poly(Rational(x.get<long long>()));
  if (x.is_object() && x.contains("var"))
    return Poly::var(x.at("var").get<std::string>());
  throw FormatError("weight must be a rational string or {\"var\": name}");
}

inline std::map<int, Poly> weights_from_json(const json &j)
{
  std::map<int, Poly> w;
  for (auto const &[k, v] : j.at("edges").items())
    w[std::stoi(k)] = weight_from_json(v);
  return w;
}

template <class S> std::string scalar_string(const S &x)
{
  if constexpr (std::is_same_v<S, Rational>)
    return to_string(x);
  else
    return x.str();
}

template <class S> json to_json(const PlueckerVector<S> &p)
{
  json c = json::object();
  for (auto const &[J, v] : p.coords)
    c[subset_key(J)] = scalar_string(v);
  return {{"k", p.k}, {"n", p.n}, {"coords", c}};
}

inline PlueckerVector<Poly> pluecker_from_json(const json &j)
{
  PlueckerVector<Poly> p{j.at("k").get<int>(), j.at("n").get<int>(), {}};
  for (auto const &[key, v] : j.at("coords").items()) {
    Subset J;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ','))
      J.push_back(std::stoi(part));
    std::sort(J.begin(), J.end());
    if (static_cast<int>(J.size()) != p.k)
      throw FormatError("coordinate " + key + " is not a k-subset");
    p.set(J, weight_from_json(v));
  }
  return p;
}

inline Matrix<Poly> matrix_from_json(const json &j)
{
  std::vector<std::vector<Poly>> rows;
  for (auto const &r : j.at("rows")) {
    std::vector<Poly> row;
    for (auto const &x : r)
      row.push_back(weight_from_json(x));
    rows.push_back(row);
  }
  return Matrix<Poly>(rows);
}

template <class S> json to_json(const Matrix<S> &m)
{
  json rows = json::array();
  for (auto const &r : m.a) {
    json row = json::array();
    for (auto const &x : r)
      row.push_back(scalar_string(x));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

// Graphviz source: boundary vertices pinned on a circle, clockwise from the
// top; a symmetric graph also gets its diameter.
inline std::string to_dot(const PlabicGraph &g, bool midline = false)
{
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "graph plabic {\n  layout=neato;\n  node [style=filled, shape=circle, label=\"\", width=0.2];\n";
  const double pi = std::acos(-1.0), R = 3.0;
  auto angle = [&](double pos) { return pi / 2 - 2 * pi * (pos - 1) / g.n; };
  for (auto const &[id, v] : g.vertices) {
    os << "  v" << id << " [fillcolor=" << (v.color == Color::black ? "black" : "white");
    if (v.is_boundary()) {
      double a = angle(v.boundary);
      os << ", shape=box, width=0.1, label=\"" << v.boundary << "\", fontcolor="
         << (v.color == Color::black ? "white" : "black") << ", pos=\"" << R * std::cos(a) << ","
         << R * std::sin(a) << "!\"";
    }
    os << "];\n";
  }
  for (auto const &[id, e] : g.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << id << "\", fontsize=8];\n";
  if (midline) {
    double a = angle(g.n + 0.5), b = angle(g.n / 2 + 0.5);
    os << "  d0 [shape=point, width=0.01, pos=\"" << R * std::cos(a) << "," << R * std::sin(a) << "!\"];\n";
    os << "  d1 [shape=point, width=0.01, pos=\"" << R * std::cos(b) << "," << R * std::sin(b) << "!\"];\n";
    os << "  d0 -- d1 [style=dashed, color=gray];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace symplabic

#endif
