#include "d0/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace d0 {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int> ints_of(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(t);
  std::vector<int> xs;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("not an integer: " + tok);
    xs.push_back(x);
  }
  return xs;
}

char edge_char(EdgeType t) { return t == EdgeType::Knuth ? 'K' : 'R'; }

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

}  // namespace

void GraphBundle::validate() const {
  const int V = static_cast<int>(vertices.size());
  const int n = degree();
  for (const Word& w : vertices) {
    if (w.size() != n) throw std::invalid_argument("vertex " + w.str() + " has the wrong length");
    if (!w.repetition_free()) throw std::invalid_argument("vertex " + w.str() + " repeats a letter");
  }
  std::set<Word> distinct(vertices.begin(), vertices.end());
  if (static_cast<int>(distinct.size()) != V) throw std::invalid_argument("repeated vertex");
  for (const auto& [color, E] : involutions) {
    if (color < 2 || color > n - 1) throw std::invalid_argument("color " + std::to_string(color) + " out of range");
    if (static_cast<int>(E.size()) != V)
      throw std::invalid_argument("involution " + std::to_string(color) + " has " + std::to_string(E.size()) +
                                  " entries for " + std::to_string(V) + " vertices");
    for (int v = 1; v <= V; ++v) {
      int w = E[v - 1];
      if (w == 0) continue;
      if (w < 0 || w > V) throw std::invalid_argument("E_" + std::to_string(color) + "(" + std::to_string(v) +
                                                      ") = " + std::to_string(w) + " out of range");
      if (w == v || E[w - 1] != v)
        throw std::invalid_argument("E_" + std::to_string(color) + " is not an involution at " + std::to_string(v));
    }
  }
  for (const TypedEdge& e : types) {
    auto it = involutions.find(e.color);
    if (e.v < 1 || e.v > V || e.w < 1 || e.w > V) throw std::invalid_argument("type line: index out of range");
    if (it == involutions.end() || it->second[e.v - 1] != e.w)
      throw std::invalid_argument("type line " + std::to_string(e.color) + " " + edge_char(e.type) + " " +
                                  std::to_string(e.v) + " " + std::to_string(e.w) + " is not an edge");
  }
}

GraphBundle bundle_of(const PartialD0Graph& g) {
  GraphBundle b;
  b.vertices = g.vertices();
  const int V = g.num_vertices();
  for (int c = 2; c <= g.degree() - 1; ++c) b.involutions[c].assign(V, 0);
  for (const Edge& e : g.edges()) {
    b.involutions[e.color][e.u] = e.v + 1;
    b.involutions[e.color][e.v] = e.u + 1;
    b.types.push_back({e.color, e.type, e.u + 1, e.v + 1});
  }
  std::sort(b.types.begin(), b.types.end(), [](const TypedEdge& x, const TypedEdge& y) {
    return std::tie(x.color, x.v, x.w) < std::tie(y.color, y.v, y.w);
  });
  return b;
}

GraphBundle bundle_of(const SignedColoredGraph& g) {
  if (!g.has_labels()) throw std::invalid_argument("bundle_of: graph has no vertex labels");
  GraphBundle b;
  const int V = g.size();
  for (int v = 0; v < V; ++v) b.vertices.push_back(g.label(v));
  for (int c = 2; c <= g.degree() - 1; ++c) {
    auto& E = b.involutions[c];
    E.assign(V, 0);
    for (int v = 0; v < V; ++v) {
      int w = g.neighbor(v, c);
      if (w < 0) continue;
      E[v] = w + 1;
      if (v < w) {
        std::optional<EdgeType> t = g.edge_type(v, c);
        if (t) b.types.push_back({c, *t, v + 1, w + 1});
      }
    }
  }
  return b;
}

SignedColoredGraph to_signed(const GraphBundle& b) {
  b.validate();
  std::map<std::tuple<int, int, int>, EdgeType> typed;
  for (const TypedEdge& e : b.types) typed[{e.color, e.v, e.w}] = e.type;
  std::vector<std::uint32_t> des;
  for (const Word& w : b.vertices) des.push_back(descent_set(w).bits());
  SignedColoredGraph g(std::max(b.degree(), 1), std::move(des));
  for (const auto& [c, E] : b.involutions)
    for (int v = 1; v <= static_cast<int>(E.size()); ++v) {
      int w = E[v - 1];
      if (w <= v) continue;
      auto it = typed.find({c, v, w});
      std::optional<EdgeType> t;
      if (it != typed.end()) t = it->second;
      g.add_edge(c, v - 1, w - 1, t);
    }
  g.set_labels(b.vertices);
  return g;
}

PartialD0Graph to_partial(const GraphBundle& b, int N) {
  b.validate();
  PartialD0Graph g = PartialD0Graph::minimal(b.vertices, N);
  for (const auto& [c, E] : b.involutions)
    for (int v = 0; v < static_cast<int>(E.size()); ++v) {
      int w = E[v] - 1;
      if (w <= v) continue;
      int s = g.square_at(v, c);
      if (s < 0 || g.square_at(w, c) != s)
        throw std::invalid_argument("edge " + g.vertex(v).str() + " - " + g.vertex(w).str() + " of color " +
                                    std::to_string(c) + " is not a KR edge");
      int diff = g.member_at(v, c) ^ g.member_at(w, c);
      if (diff != 1 && diff != 2)
        throw std::invalid_argument("edge " + g.vertex(v).str() + " - " + g.vertex(w).str() + " is a diagonal of its square");
      SquareType t = diff == 1 ? SquareType::Knuth : SquareType::Rotation;
      if (g.type(s) == SquareType::Undetermined)
        g.assign(s, t);
      else if (g.type(s) != t)
        throw std::invalid_argument("edges of square " + g.square(s).str() + " disagree on its type");
    }
  // Each typed square must carry both of its edges.
  std::set<std::tuple<int, int, int>> have;
  for (const auto& [c, E] : b.involutions)
    for (int v = 0; v < static_cast<int>(E.size()); ++v)
      if (E[v] - 1 > v) have.insert({c, v, E[v] - 1});
  for (const Edge& e : g.edges())
    if (!have.count({e.color, e.u, e.v}))
      throw std::invalid_argument("square " + g.square(g.square_at(e.u, e.color)).str() + " is missing the edge " +
                                  g.vertex(e.u).str() + " - " + g.vertex(e.v).str());
  for (const TypedEdge& e : b.types) {
    int s = g.square_at(e.v - 1, e.color);
    SquareType want = e.type == EdgeType::Knuth ? SquareType::Knuth : SquareType::Rotation;
    if (g.type(s) != want) throw std::invalid_argument("type line disagrees with square " + g.square(s).str());
  }
  return g;
}

std::vector<Word> parse_vertex_list(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string t = trim(all);
  std::vector<Word> out;
  if (!t.empty() && t.front() == '[') {
    // [[a,b,...],[...],...]
    int depth = 0;
    std::string cur;
    for (char ch : t) {
      if (ch == '[') {
        ++depth;
        if (depth == 2) cur.clear();
        continue;
      }
      if (ch == ']') {
        if (depth == 2) {
          std::vector<int> xs = ints_of(cur);
          out.push_back(Word(std::span<const int>(xs)));
        }
        --depth;
        continue;
      }
      if (depth == 2) cur += ch;
    }
    if (depth != 0) throw std::invalid_argument("vertex list: unbalanced brackets");
    return out;
  }
  std::istringstream lines(t);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(Word::parse(line));
  }
  return out;
}

std::vector<Word> read_vertex_list(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return parse_vertex_list(in);
}

void write_vertex_list(std::ostream& out, const std::vector<Word>& words) {
  for (const Word& w : words) {
    for (int i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

void write_bundle(const GraphBundle& b, const std::filesystem::path& dir) {
  b.validate();
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = open_out(dir / "vertexset.txt");
    write_vertex_list(out, b.vertices);
  }
  {
    std::ofstream out = open_out(dir / "involutions.txt");
    for (const auto& [c, E] : b.involutions) {
      out << c << ':';
      for (int x : E) out << ' ' << x;
      out << '\n';
    }
  }
  {
    std::ofstream out = open_out(dir / "types.txt");
    for (const TypedEdge& e : b.types) out << e.color << ' ' << edge_char(e.type) << ' ' << e.v << ' ' << e.w << '\n';
  }
  if (!b.provenance.empty()) {
    std::ofstream out = open_out(dir / "provenance.txt");
    for (const auto& [k, v] : b.provenance) out << k << " = " << v << '\n';
  }
}

GraphBundle read_bundle(const std::filesystem::path& dir) {
  GraphBundle b;
  b.vertices = read_vertex_list(dir / "vertexset.txt");
  const int V = static_cast<int>(b.vertices.size());
  if (std::filesystem::exists(dir / "involutions.txt")) {
    std::ifstream in = open_in(dir / "involutions.txt");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("involutions.txt:" + std::to_string(lineno) + ": expected 'i: a1 ... aV'");
      int c = std::stoi(line.substr(0, colon));
      std::vector<int> E = ints_of(line.substr(colon + 1));
      if (static_cast<int>(E.size()) != V)
        throw std::invalid_argument("involutions.txt:" + std::to_string(lineno) + ": " + std::to_string(E.size()) +
                                    " entries for " + std::to_string(V) + " vertices");
      if (b.involutions.count(c)) throw std::invalid_argument("involutions.txt: color repeated");
      b.involutions[c] = std::move(E);
    }
  }
  if (std::filesystem::exists(dir / "types.txt")) {
    std::ifstream in = open_in(dir / "types.txt");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      std::istringstream ls(line);
      TypedEdge e;
      std::string t;
      if (!(ls >> e.color >> t >> e.v >> e.w) || (t != "K" && t != "R"))
        throw std::invalid_argument("types.txt:" + std::to_string(lineno) + ": expected 'i K|R v w'");
      e.type = t == "K" ? EdgeType::Knuth : EdgeType::Rotation;
      if (e.v > e.w) std::swap(e.v, e.w);
      b.types.push_back(e);
    }
  }
  if (std::filesystem::exists(dir / "provenance.txt")) {
    std::ifstream in = open_in(dir / "provenance.txt");
    std::string line;
    while (std::getline(in, line)) {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      b.provenance[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }
  b.validate();
  return b;
}

std::string schur_str(const SchurResult& r) {
  if (const auto* e = std::get_if<SchurExpansion>(&r)) return e->is_zero() ? "0" : e->str();
  return "not symmetric, residual " + std::get<NotSymmetric>(r).residual.str();
}

std::string CheckReport::str() const {
  std::string out;
  for (const std::string& l : lines) out += l + '\n';
  return out;
}

CheckReport check_report(const GraphBundle& b) {
  CheckReport rep;
  if (b.vertices.empty()) return rep;
  SignedColoredGraph g = to_signed(b);
  auto line = [&](const std::string& what, const AxiomResult& r) {
    rep.lines.push_back(what + ": " + (r.pass ? "pass" : "FAIL " + r.witness));
    if (!r.pass) rep.ok = false;
  };
  rep.lines.push_back("vertices " + std::to_string(g.size()) + ", degree " + std::to_string(g.degree()));
  line("axiom 0", check_axiom0(g));
  line("axiom 1", check_axiom1(g));
  line("axiom 2", check_axiom2(g));
  line("axiom 3", check_axiom3(g));
  line("axiom 4'a", check_axiom4a(g));
  line("axiom 4'b", check_axiom4b(g));
  line("axiom 4''b", check_axiom4bb(g));
  line("axiom 5", check_axiom5(g));
  line("LSP_4", check_lsp(g, 4));
  line("LSP_5", check_lsp(g, 5));
  line("restriction shapes", check_restriction_shapes(g));

  KRSetReport kr = kr_set_report(b.vertices);
  rep.lines.push_back(std::string("KR set: ") + (kr.is_kr_set ? "yes" : "no, square " + kr.witness));
  if (kr.is_kr_set) {
    PartialD0Graph p = to_partial(b);
    rep.lines.push_back("undetermined squares: " + std::to_string(p.num_undetermined()));
    if (p.num_undetermined() > 0) rep.ok = false;
    line("axiom 5 by squares", axiom5_by_squares(p));
    line("axiom 5 by forbidden patterns", axiom5_by_forbidden(p));
    line("axiom 5 by valid patterns", axiom5_by_valid(p));
  }

  DeltaSchur ds = delta_schur(b.vertices);
  rep.lines.push_back("generating function: " + schur_str(ds.f_basis));
  if (!ds.symmetric()) {
    rep.computational_failure = true;
  } else {
    rep.lines.push_back(std::string("pairing path agrees: ") + (ds.paths_agree() ? "yes" : "no"));
    if (!ds.paths_agree()) rep.computational_failure = true;
    const SchurExpansion& e = ds.expansion();
    std::string neg;
    for (const Partition& p : e.negative_terms()) neg += " " + p.compact();
    rep.lines.push_back("Schur positive: " + std::string(e.is_positive() ? "yes" : "no, negative at" + neg));
  }
  std::vector<std::vector<int>> comps = g.components();
  rep.lines.push_back("components: " + std::to_string(comps.size()));
  return rep;
}

}  // namespace d0
