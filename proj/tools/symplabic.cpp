#include "symplabic/io.hpp"
#include "symplabic/random.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

using namespace symplabic;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A payload argument is a file path, "-" for stdin, or inline JSON.
json read_payload(const std::string &arg)
{
  std::string text;
  if (arg.empty() || arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (arg.front() == '{' || arg.front() == '[') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in)
      throw InputError("cannot read " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_text(const std::string &text, const std::string &path)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

void write_json(const json &j, const std::string &path) { write_text(j.dump(2) + "\n", path); }

CoxeterType parse_type(const std::string &t)
{
  if (t == "A")
    return CoxeterType::A;
  if (t == "B" || t == "C")
    return CoxeterType::C;
  throw InputError("type must be A or C (B for Le-diagrams)");
}

void require_type_C(const Bd &f, const std::string &kind)
{
  if (!is_type_C(f))
    throw InputError("input is not of type C; cannot convert to " + kind);
}

PlabicGraph read_graph(const json &j)
{
  PlabicGraph g = graph_from_json(j);
  auto problems = validate(g);
  if (!problems.empty())
    throw InputError("invalid plabic graph: " + problems.front());
  return g;
}

SymmetricPlabicGraph read_symmetric_graph(const json &j)
{
  PlabicGraph g = read_graph(j);
  if (j.contains("symmetry")) {
    SymmetricPlabicGraph s{g, symmetry_from_json(j)};
    if (!check_symmetry(s))
      throw InputError("given symmetry is not a color-reversing reflection of the graph");
    return s;
  }
  auto inv = derive_involution(g);
  if (!inv)
    throw InputError("graph is not symmetric about the diameter");
  return {g, inv->vertex};
}

Bd to_hub(const std::string &kind, const json &j)
{
  if (kind == "pair") {
    auto u = permutation_from_json(j.at("u")), w = permutation_from_json(j.at("w"));
    int k = j.at("k").get<int>();
    if (u.size() != w.size() || k < 0 || k > u.size())
      throw InputError("pair needs u, w of equal size and 0 <= k <= n");
    if (!bruhat_leq(u, w))
      throw InputError("pair needs u <= w");
    return from_pair(u, w, k);
  }
  if (kind == "bounded-affine")
    return bd_from_json(j);
  if (kind == "decorated")
    return from_decorated(decorated_from_json(j));
  if (kind == "necklace")
    return bd_from_necklace(necklace_from_json(j));
  if (kind == "positroid") {
    auto [M, n] = positroid_from_json(j);
    auto N = necklace_from_positroid(M, n);
    if (positroid_from_necklace(N) != M)
      throw InputError("basis set is not a positroid");
    return bd_from_necklace(N);
  }
  if (kind == "le-diagram" || kind == "le-diagram-B") {
    LeDiagram D = le_from_json(j);
    if ((kind == "le-diagram-B") != (D.type == CoxeterType::C))
      throw InputError("Le-diagram type does not match " + kind);
    if (!le_diagram_valid(D))
      throw InputError("filling violates the Le condition");
    auto [u, w] = le_to_pair(D);
    return from_pair(u, w, D.k);
  }
  if (kind == "plabic-graph")
    return bounded_affine_of_graph(read_graph(j));
  if (kind == "symmetric-graph") {
    Bd f = bounded_affine_of_graph(read_symmetric_graph(j).graph);
    require_type_C(f, kind);
    return f;
  }
  throw InputError("unknown kind " + kind);
}

json from_hub(const std::string &kind, const Bd &f)
{
  if (kind == "pair") {
    auto [u, w] = to_pair(f);
    return pair_to_json(u, w, f.k());
  }
  if (kind == "bounded-affine")
    return to_json(f);
  if (kind == "decorated")
    return to_json(to_decorated(f));
  if (kind == "necklace")
    return to_json(necklace_of(f));
  if (kind == "positroid")
    return positroid_to_json(positroid_from_necklace(necklace_of(f)), f.size());
  if (kind == "le-diagram") {
    auto [u, w] = to_pair(f);
    return to_json(le_from_pair(CoxeterType::A, u, w, f.k()));
  }
  if (kind == "le-diagram-B") {
    require_type_C(f, kind);
    auto [u, w] = to_pair(f);
    return to_json(le_from_pair(CoxeterType::C, u, w, f.k()));
  }
  if (kind == "plabic-graph") {
    auto [u, w] = to_pair(f);
    auto B = bridge_graph(u, w, f.k());
    return to_json(B.graph, &B.bridges);
  }
  if (kind == "symmetric-graph") {
    require_type_C(f, kind);
    auto B = symmetric_bridge_graph(f);
    return to_json(B.graph.graph, &B.bridges, &B.graph.r);
  }
  throw InputError("unknown kind " + kind);
}

json window_list(const std::vector<Bd> &fs)
{
  json items = json::array();
  for (auto const &f : fs)
    items.push_back(f.window());
  return items;
}

json pair_list(const std::vector<std::pair<Permutation, Permutation>> &ps, int k)
{
  json items = json::array();
  for (auto const &[u, w] : ps)
    items.push_back(pair_to_json(u, w, k));
  return items;
}

json report(bool pass, const std::string &witness)
{
  json j{{"pass", pass}};
  if (!pass)
    j["witness"] = witness;
  return j;
}

LagrangianMode parse_mode(const std::string &m)
{
  if (m == "cutout")
    return LagrangianMode::cutout;
  if (m == "lemma")
    return LagrangianMode::lemma;
  throw InputError("mode must be lemma or cutout");
}

struct Options {
  std::string from, to, input, output, kind, what, type = "A", weights, mode = "cutout";
  int n = -1, k = -1, samples = 100;
  std::uint64_t seed = 0;
  bool symbolic = false, canonical = false;
};

int need(int v, const char *name)
{
  if (v < 0)
    throw InputError(std::string("missing --") + name);
  return v;
}

int run_convert(const Options &o)
{
  json in = read_payload(o.input);
  write_json(from_hub(o.to, to_hub(o.from, in)), o.output);
  return 0;
}

int run_enumerate(const Options &o)
{
  json items;
  int n = need(o.n, "n");
  if (o.kind == "q") {
    int k = need(o.k, "k");
    items = pair_list(enumerate_Q(k, n), k);
  } else if (o.kind == "qc") {
    items = pair_list(enumerate_Q_C(n), n);
  } else if (o.kind == "bd") {
    items = window_list(enumerate_Bd(need(o.k, "k"), n));
  } else if (o.kind == "bdc") {
    items = window_list(enumerate_Bd_C(n));
  } else if (o.kind == "le") {
    CoxeterType t = parse_type(o.type);
    items = json::array();
    for (auto const &D : enumerate_le(t, t == CoxeterType::A ? need(o.k, "k") : n, n))
      items.push_back(to_json(D));
  } else {
    throw InputError("unknown enumeration kind " + o.kind);
  }
  write_json({{"kind", o.kind}, {"count", items.size()}, {"items", items}}, o.output);
  return 0;
}

int run_measure(const Options &o)
{
  json in = read_payload(o.input);
  PlabicGraph g = read_graph(in);
  std::map<int, Poly> w;
  if (o.canonical) {
    w = canonical_weighting<Poly>(g, bridges_from_json(in));
  } else {
    json wj = !o.weights.empty() ? read_payload(o.weights) : in.value("weights", json());
    if (wj.is_null())
      throw InputError("no weights given; pass --weights or --canonical");
    w = weights_from_json(wj);
  }
  for (auto const &[id, e] : g.edges) {
    auto it = w.find(id);
    if (it == w.end())
      throw InputError("edge " + std::to_string(id) + " has no weight");
    if (it->second.is_zero())
      throw InputError("edge " + std::to_string(id) + " has weight zero");
    if (!o.symbolic && !o.canonical && !it->second.is_constant())
      throw InputError("symbolic weight on edge " + std::to_string(id) + " needs --symbolic");
  }
  if (w.size() != g.edges.size())
    throw InputError("weighting names an edge that is not in the graph");
  write_json(to_json(boundary_measurement_memo(g, w)), o.output);
  return 0;
}

json verify_random(const Options &o)
{
  Rng rng(o.seed);
  LagrangianMode mode = parse_mode(o.mode);
  std::vector<int> sizes;
  if (o.n > 0)
    sizes.push_back(o.n);
  else
    sizes = {1, 2, 3};
  int lagrangian = 0, checked = 0;
  for (int n : sizes)
    for (int s = 0; s < o.samples; ++s) {
      Matrix<Rational> m = s % 2 ? random_lagrangian_matrix(rng, n) : random_full_rank_matrix(rng, n, 2 * n);
      bool form = is_lagrangian_matrix(m);
      bool rel = lagrangian_relations_check(minors_pluecker(m), mode).pass;
      ++checked;
      lagrangian += form;
      if (form != rel) {
        json j = report(false, "sample " + std::to_string(s) + " for n=" + std::to_string(n) +
                                   (form ? ": Lagrangian matrix fails the relations"
                                         : ": relations hold off the Lagrangian Grassmannian"));
        j["matrix"] = to_json(m);
        return j;
      }
    }
  json j = report(true, "");
  j["samples"] = checked;
  j["lagrangian"] = lagrangian;
  return j;
}

int run_verify(const Options &o)
{
  json out;
  if (o.what == "lagrangian-random") {
    out = verify_random(o);
  } else {
    json in = read_payload(o.input);
    if (o.what == "lagrangian-matrix") {
      Matrix<Poly> m = matrix_from_json(in);
      if (m.cols != 2 * m.rows)
        throw InputError("expected an n x 2n matrix");
      bool pass = is_lagrangian_matrix(m);
      std::string witness;
      if (!pass) {
        auto p = minors_pluecker(m);
        witness = lagrangian_relations_check(p, parse_mode(o.mode)).witness;
      }
      out = report(pass, witness);
    } else if (o.what == "lagrangian-pluecker") {
      auto r = lagrangian_relations_check(pluecker_from_json(in), parse_mode(o.mode));
      out = report(r.pass, r.witness);
    } else if (o.what == "reduced") {
      auto r = reducedness(read_graph(in));
      out = report(r.reduced, r.reason);
    } else if (o.what == "symmetric") {
      PlabicGraph g = read_graph(in);
      bool pass = in.contains("symmetry") ? check_symmetry(g, symmetry_from_json(in))
                                          : derive_involution(g).has_value();
      out = report(pass, "no color-reversing reflection through the diameter");
    } else if (o.what == "necklace-typeC") {
      out = report(is_type_C_necklace(necklace_from_json(in)), "necklace is not closed under reflection");
    } else if (o.what == "positroid-typeC") {
      auto [M, n] = positroid_from_json(in);
      out = report(is_type_C_positroid(M, n), "positroid is not closed under reflection");
    } else {
      throw InputError("unknown verification " + o.what);
    }
  }
  write_json(out, o.output);
  return out.at("pass").get<bool>() ? 0 : 1;
}

int run_emit(const Options &o)
{
  json in = read_payload(o.input);
  PlabicGraph g = read_graph(in);
  bool symmetric = in.contains("symmetry") ? check_symmetry(g, symmetry_from_json(in)) : derive_involution(g).has_value();
  write_text(to_dot(g, symmetric), o.output);
  return 0;
}

int run_poset(const Options &o)
{
  CoxeterType t = parse_type(o.type);
  int n = need(o.n, "n");
  std::vector<Bd> fs = t == CoxeterType::A ? enumerate_Bd(need(o.k, "k"), n) : enumerate_Bd_C(n);
  std::size_t m = fs.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq[i][j] = affine_bruhat_leq(fs[i], fs[j]);
  json covers = json::array(), elements = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    elements.push_back({{"window", fs[i].window()},
                        {"length", t == CoxeterType::A ? length_A(fs[i]) : length_C(fs[i])}});
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !leq[i][j])
        continue;
      bool cover = true;
      for (std::size_t l = 0; l < m && cover; ++l)
        cover = l == i || l == j || !(leq[i][l] && leq[l][j]);
      if (cover)
        covers.push_back({i, j});
    }
  }
  write_json({{"elements", elements}, {"covers", covers}}, o.output);
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Plabic graphs, positroids and the Lagrangian Grassmannian"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App *c) {
    c->add_option("input", o.input, "JSON file, - for stdin, or inline JSON");
    c->add_option("-o,--output", o.output, "output file (default stdout)");
  };
  const std::vector<std::string> kinds{"pair",     "bounded-affine", "decorated",    "necklace",       "positroid",
                                       "le-diagram", "le-diagram-B", "plabic-graph", "symmetric-graph"};

  auto *convert = app.add_subcommand("convert", "convert between indexing objects");
  convert->add_option("--from", o.from)->required()->check(CLI::IsMember(kinds));
  convert->add_option("--to", o.to)->required()->check(CLI::IsMember(kinds));
  add_io(convert);

  auto *enumerate = app.add_subcommand("enumerate", "list Q, Q^C, Bd, Bd^C or Le-diagrams");
  enumerate->add_option("kind", o.kind)->required()->check(CLI::IsMember({"q", "qc", "bd", "bdc", "le"}));
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--k", o.k);
  enumerate->add_option("--type", o.type, "A or B, for le")->check(CLI::IsMember({"A", "B"}));
  enumerate->add_option("-o,--output", o.output);

  auto *measure = app.add_subcommand("measure", "boundary measurement of a weighted graph");
  add_io(measure);
  measure->add_option("--weights", o.weights, "weighting JSON (file or inline)");
  measure->add_flag("--canonical", o.canonical, "one variable per bridge group");
  measure->add_flag("--symbolic", o.symbolic, "allow variables in the weights");

  auto *verify = app.add_subcommand("verify", "check a property; exit 1 on failure");
  verify->add_option("what", o.what)
      ->required()
      ->check(CLI::IsMember({"lagrangian-matrix", "lagrangian-pluecker", "reduced", "symmetric", "necklace-typeC",
                             "positroid-typeC", "lagrangian-random"}));
  add_io(verify);
  verify->add_option("--mode", o.mode, "lemma or cutout")->check(CLI::IsMember({"lemma", "cutout"}));
  verify->add_option("--seed", o.seed, "random seed (default 0)");
  verify->add_option("--samples", o.samples, "samples per n (default 100)");
  verify->add_option("--n", o.n, "restrict random checks to one n");

  auto *emit = app.add_subcommand("emit", "Graphviz DOT for a plabic graph");
  add_io(emit);

  auto *poset = app.add_subcommand("poset", "cover relations of Bd(k,n) or Bd^C(2n)");
  poset->add_option("--n", o.n)->required();
  poset->add_option("--k", o.k);
  poset->add_option("--type", o.type, "A or C")->check(CLI::IsMember({"A", "C"}));
  poset->add_option("-o,--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*convert)
      return run_convert(o);
    if (*enumerate)
      return run_enumerate(o);
    if (*measure)
      return run_measure(o);
    if (*verify)
      return run_verify(o);
    if (*emit)
      return run_emit(o);
    return run_poset(o);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
