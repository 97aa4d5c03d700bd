#include "d0/axioms.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d0 {

namespace {

std::string name(const SignedColoredGraph& g, int v) {
  return g.has_labels() ? g.label(v).str() : "#" + std::to_string(v);
}

std::string edge_name(const SignedColoredGraph& g, int color, int u, int v) {
  return std::to_string(color) + "-edge {" + name(g, u) + ", " + name(g, v) + "}";
}

bool has_sigma(const SignedColoredGraph& g, int i) { return i >= 1 && i <= g.degree() - 1; }

}  // namespace

AxiomResult check_axiom0(const SignedColoredGraph& g) {
  for (int c = 2; c <= g.degree() - 1; ++c)
    for (int v = 0; v < g.size(); ++v) {
      int w = g.neighbor(v, c);
      if (w < 0) continue;
      if (w == v || g.neighbor(w, c) != v)
        return AxiomResult::fail("axiom 0: E_" + std::to_string(c) + " is not a fixed-point-free involution at " +
                                 name(g, v));
    }
  return {};
}

AxiomResult check_axiom1(const SignedColoredGraph& g) {
  if (auto r = check_axiom0(g); !r) return r;
  for (int v = 0; v < g.size(); ++v)
    for (int c = 2; c <= g.degree() - 1; ++c) {
      bool admits = g.neighbor(v, c) >= 0;
      bool want = g.sigma(v, c - 1) != g.sigma(v, c);
      if (admits != want)
        return AxiomResult::fail("axiom 1: " + name(g, v) + (admits ? " admits" : " lacks") + " a " +
                                 std::to_string(c) + "-neighbor");
    }
  return {};
}

AxiomResult check_axiom2(const SignedColoredGraph& g) {
  const int n = g.degree();
  for (int c = 2; c <= n - 1; ++c)
    for (int v = 0; v < g.size(); ++v) {
      int w = g.neighbor(v, c);
      if (w < v) continue;
      for (int h = 1; h <= n - 1; ++h) {
        bool flips = g.sigma(v, h) != g.sigma(w, h);
        if ((h == c - 1 || h == c) && !flips)
          return AxiomResult::fail("axiom 2: sigma_" + std::to_string(h) + " does not flip across " +
                                   edge_name(g, c, v, w));
        if ((h < c - 2 || h > c + 1) && flips)
          return AxiomResult::fail("axiom 2: sigma_" + std::to_string(h) + " flips across " + edge_name(g, c, v, w));
      }
    }
  return {};
}

AxiomResult check_axiom3(const SignedColoredGraph& g) {
  const int n = g.degree();
  for (int c = 2; c <= n - 1; ++c)
    for (int v = 0; v < g.size(); ++v) {
      int w = g.neighbor(v, c);
      if (w < 0) continue;
      if (has_sigma(g, c - 2) && g.sigma(v, c - 2) != g.sigma(w, c - 2) && g.sigma(v, c - 2) == g.sigma(v, c - 1))
        return AxiomResult::fail("axiom 3: sigma_" + std::to_string(c - 2) + " condition at " +
                                 edge_name(g, c, v, w));
      if (has_sigma(g, c + 1) && g.sigma(v, c + 1) != g.sigma(w, c + 1) && g.sigma(v, c + 1) == g.sigma(v, c))
        return AxiomResult::fail("axiom 3: sigma_" + std::to_string(c + 1) + " condition at " +
                                 edge_name(g, c, v, w));
    }
  return {};
}

namespace {

// Component id per vertex for a restriction.
std::vector<int> component_ids(const SignedColoredGraph& r, std::vector<std::vector<int>>& comps) {
  comps = r.components();
  std::vector<int> id(r.size(), -1);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int v : comps[k]) id[v] = static_cast<int>(k);
  return id;
}

}  // namespace

AxiomResult check_axiom4a(const SignedColoredGraph& g) {
  const int n = g.degree();
  for (int i = 4; i <= n - 1; ++i) {
    SignedColoredGraph lo = g.restrict(i - 3, i), hi = g.restrict(i - 2, i + 1);
    std::vector<std::vector<int>> lo_comps, hi_comps;
    std::vector<int> lo_id = component_ids(lo, lo_comps), hi_id = component_ids(hi, hi_comps);
    for (int w = 0; w < g.size(); ++w) {
      int v = g.neighbor(w, i - 1);
      if (v < 0 || g.neighbor(w, i) == v) continue;
      if (g.sigma(w, i - 3) == g.sigma(v, i - 3) || g.sigma(w, i) == g.sigma(v, i)) continue;
      FExpansion a = lo.fexpansion(lo_comps[lo_id[w]]);
      FExpansion b = hi.fexpansion(hi_comps[hi_id[w]]);
      if (!(a == b))
        return AxiomResult::fail("axiom 4'a: at " + name(g, w) + " with i=" + std::to_string(i) + ": " + a.str() +
                                 " vs " + b.str());
    }
  }
  return {};
}

AxiomResult check_axiom5(const SignedColoredGraph& g) {
  const int n = g.degree();
  for (int i = 2; i <= n - 1; ++i)
    for (int j = 2; j <= n - 1; ++j) {
      if (std::abs(i - j) < 3) continue;
      for (int w = 0; w < g.size(); ++w) {
        int x = g.neighbor(w, i);
        if (x < 0) continue;
        int y = g.neighbor(x, j);
        if (y < 0) continue;
        int v = g.neighbor(w, j);
        if (v < 0 || g.neighbor(v, i) != y)
          return AxiomResult::fail("axiom 5: " + edge_name(g, i, w, x) + " then " + edge_name(g, j, x, y) +
                                   " does not close");
      }
    }
  return {};
}

AxiomResult check_axiom(const SignedColoredGraph& g, int which) {
  switch (which) {
    case 0: return check_axiom0(g);
    case 1: return check_axiom1(g);
    case 2: return check_axiom2(g);
    case 3: return check_axiom3(g);
    case 5: return check_axiom5(g);
    default: throw std::invalid_argument("check_axiom: which must be 0, 1, 2, 3 or 5");
  }
}

bool itype_W(const SignedColoredGraph& g, int v, int i) {
  if (!g.has_color(i) || !g.has_color(i - 1)) return false;
  if (g.neighbor(v, i) < 0) return false;
  int u = g.neighbor(v, i - 1);
  if (u < 0) return false;
  return g.sigma(v, i) != g.sigma(u, i);
}

// ---------------------------------------------------------------- chains

namespace {

struct Link {
  int next;  // x^{2j+1}
  int m;     // -1 for weak links
};

using LinkFn = std::function<void(int, std::vector<Link>&)>;

class ChainWalker {
 public:
  ChainWalker(const SignedColoredGraph& g, int i, bool weak) : g_(g), i_(i), weak_(weak) {
    W_.assign(g.size(), 0);
    Wprev_.assign(g.size(), 0);
    for (int v = 0; v < g.size(); ++v) {
      W_[v] = itype_W(g, v, i + 1);
      Wprev_[v] = itype_W(g, v, i - 1);
    }
    in_path_.assign(g.size(), 0);
  }

  bool admits_low(int v) const { return g_.neighbor(v, i_ - 2) >= 0; }

  void links(int x, std::vector<Link>& out) const {
    out.clear();
    if (!weak_) {
      int y = x;
      for (int m = 0; m <= g_.size(); ++m) {
        int z = g_.neighbor(y, i_ - 2);
        if (z < 0) break;
        if (!Wprev_[y]) out.push_back({z, m});
        int y2 = g_.neighbor(z, i_ - 1);
        if (y2 < 0 || y2 == x) break;
        y = y2;
      }
      return;
    }
    // Any vertex of the (i-2)-(i-1)-string through x.
    std::vector<int> stack{x}, seen{x};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int c : {i_ - 2, i_ - 1}) {
        int w = g_.neighbor(v, c);
        if (w >= 0 && std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(seen.begin(), seen.end());
    for (int y : seen) {
      if (y == x) continue;
      int z = g_.neighbor(y, i_ - 2);
      if (z >= 0 && !Wprev_[z]) out.push_back({y, -1});
    }
  }

  // Calls leaf(path, ms) for every forward-maximal chain starting with (a, b).
  void walk(int a, int b, const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& leaf) {
    path_ = {a, b};
    ms_.clear();
    in_path_[a] = in_path_[b] = 1;
    stop_ = false;
    dfs(leaf);
    in_path_[a] = in_path_[b] = 0;
  }

  bool W(int v) const { return W_[v]; }
  bool in_path(int v) const { return in_path_[v]; }

 private:
  void dfs(const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& leaf) {
    std::vector<Link> ls;
    links(path_.back(), ls);
    bool extended = false;
    for (const Link& l : ls) {
      if (stop_) return;
      int z = l.next;
      if (in_path_[z] || !admits_low(z)) continue;
      int w = g_.neighbor(z, i_);
      if (w < 0 || in_path_[w] || !admits_low(w)) continue;
      extended = true;
      path_.push_back(z);
      path_.push_back(w);
      ms_.push_back(l.m);
      in_path_[z] = in_path_[w] = 1;
      dfs(leaf);
      in_path_[z] = in_path_[w] = 0;
      path_.resize(path_.size() - 2);
      ms_.pop_back();
    }
    if (!extended && !stop_) stop_ = !leaf(path_, ms_);
  }

  const SignedColoredGraph& g_;
  int i_;
  bool weak_;
  std::vector<char> W_, Wprev_, in_path_;
  std::vector<int> path_, ms_;
  bool stop_ = false;
};

bool chain_color_ok(const SignedColoredGraph& g, int i) { return i >= 4 && i < g.degree(); }

// First interior index violating the prefix/suffix rule, or -1.
int window_violation(const std::vector<int>& path, const std::function<bool(int)>& W) {
  const int L = static_cast<int>(path.size());
  if (L < 6) return -1;
  std::vector<char> pre(L), suf(L);
  for (int k = 0; k < L; ++k) pre[k] = W(path[k]) && (k == 0 || pre[k - 1]);
  for (int k = L - 1; k >= 0; --k) suf[k] = W(path[k]) && (k == L - 1 || suf[k + 1]);
  for (int k = 2; k <= L - 3; ++k)
    if (W(path[k]) && !pre[k] && !suf[k]) return k;
  return -1;
}

std::string chain_str(const SignedColoredGraph& g, const std::vector<int>& path) {
  std::string s = "(";
  for (std::size_t k = 0; k < path.size(); ++k) s += (k ? ", " : "") + name(g, path[k]);
  return s + ")";
}

std::vector<Chain> maximal_chains(const SignedColoredGraph& g, int i, bool weak) {
  std::vector<Chain> out;
  if (!chain_color_ok(g, i)) return out;
  ChainWalker walker(g, i, weak);
  std::vector<Link> ls;
  for (int a = 0; a < g.size(); ++a) {
    int b = g.neighbor(a, i);
    if (b < 0 || !walker.admits_low(a) || !walker.admits_low(b)) continue;
    walker.walk(a, b, [&](const std::vector<int>& path, const std::vector<int>& ms) {
      // Skip chains that a predecessor pair (u, p) would extend backwards.
      std::vector<char> mark(g.size(), 0);
      for (int v : path) mark[v] = 1;
      for (int p = 0; p < g.size(); ++p) {
        if (mark[p] || !walker.admits_low(p)) continue;
        int u = g.neighbor(p, i);
        if (u < 0 || mark[u] || !walker.admits_low(u)) continue;
        walker.links(p, ls);
        for (const Link& l : ls)
          if (l.next == path[0]) return true;
      }
      out.push_back(Chain{i, path, weak ? std::vector<int>{} : ms});
      return true;
    });
  }
  return out;
}

AxiomResult check_chains(const SignedColoredGraph& g, bool weak) {
  const char* label = weak ? "axiom 4''b" : "axiom 4'b";
  for (int i = 4; i < g.degree(); ++i) {
    if (i + 1 > g.degree() - 1) continue;  // no vertex can have (i+1)-type W
    ChainWalker walker(g, i, weak);
    AxiomResult res;
    for (int a = 0; a < g.size() && res.pass; ++a) {
      int b = g.neighbor(a, i);
      if (b < 0 || !walker.admits_low(a) || !walker.admits_low(b)) continue;
      walker.walk(a, b, [&](const std::vector<int>& path, const std::vector<int>&) {
        int k = window_violation(path, [&](int v) { return walker.W(v); });
        if (k < 0) return true;
        res = AxiomResult::fail(std::string(label) + ": " + std::to_string(i) + "-chain " + chain_str(g, path) +
                                " at position " + std::to_string(k + 1));
        return false;
      });
    }
    if (!res) return res;
  }
  return {};
}

}  // namespace

std::vector<Chain> flat_chains(const SignedColoredGraph& g, int i) { return maximal_chains(g, i, false); }
std::vector<Chain> weak_flat_chains(const SignedColoredGraph& g, int i) { return maximal_chains(g, i, true); }

AxiomResult chain_window_check(const SignedColoredGraph& g, const Chain& c) {
  int k = window_violation(c.vertices, [&](int v) { return itype_W(g, v, c.color + 1); });
  if (k < 0) return {};
  return AxiomResult::fail("chain " + chain_str(g, c.vertices) + " violates the window rule at position " +
                           std::to_string(k + 1));
}

AxiomResult check_axiom4b(const SignedColoredGraph& g) { return check_chains(g, false); }
AxiomResult check_axiom4bb(const SignedColoredGraph& g) { return check_chains(g, true); }

AxiomResult check_lsp(const SignedColoredGraph& g, int d) {
  const int n = g.degree();
  for (int a = 1; a + d - 1 <= n; ++a) {
    SignedColoredGraph r = g.restrict(a, a + d - 1);
    for (const auto& comp : r.components()) {
      SchurResult s = schur_from_f(r.fexpansion(comp));
      if (const auto* ns = std::get_if<NotSymmetric>(&s))
        return AxiomResult::fail("LSP_" + std::to_string(d) + ": component of " + name(g, r.origin(comp[0])) +
                                 " in Res_[" + std::to_string(a) + "," + std::to_string(a + d - 1) +
                                 "] is not symmetric, residual " + ns->residual.str());
      const auto& e = std::get<SchurExpansion>(s);
      if (!e.is_positive())
        return AxiomResult::fail("LSP_" + std::to_string(d) + ": component of " + name(g, r.origin(comp[0])) +
                                 " in Res_[" + std::to_string(a) + "," + std::to_string(a + d - 1) + "] has " +
                                 e.str());
    }
  }
  return {};
}

AxiomResult check_restriction_shapes(const SignedColoredGraph& g) {
  const int n = g.degree();
  for (int i = 2; i + 1 <= n - 1; ++i) {
    SignedColoredGraph r = g.restrict(i - 1, i + 2);
    for (const auto& comp : r.components()) {
      int edges = 0;
      for (int v : comp)
        for (int c : {2, 3})
          if (r.neighbor(v, c) > v) ++edges;
      const int V = static_cast<int>(comp.size());
      bool ok = (V == 1 && edges == 0) || (V == 3 && edges == 2) || (V == 5 && edges == 4) || (V == 2 && edges == 2);
      if (!ok)
        return AxiomResult::fail("restriction Res_[" + std::to_string(i - 1) + "," + std::to_string(i + 2) +
                                 "] has a component with " + std::to_string(V) + " vertices and " +
                                 std::to_string(edges) + " edges through " + name(g, r.origin(comp[0])));
    }
  }
  return {};
}

// ---------------------------------------------------------------- hypercubes

KRSquare Hypercube::square(int r, int c) const {
  if (c < 2) return KRSquare{i, with_window(base, j, 2 * r + c)};
  return KRSquare{j, with_window(base, i, 2 * r + c - 2)};
}

std::array<KRSquare, 8> Hypercube::squares() const {
  std::array<KRSquare, 8> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) out[pattern_index(r, c)] = square(r, c);
  return out;
}

std::string pattern_str(const HypercubePattern& t) {
  std::string s;
  for (int k = 0; k < 8; ++k) {
    if (k == 4) s += " /";
    if (k) s += ' ';
    s += type_char(t[k]);
  }
  return s;
}

HypercubePattern pattern_from_string(const std::string& s) {
  HypercubePattern t{};
  int k = 0;
  for (char ch : s) {
    if (ch == ' ' || ch == '/') continue;
    if (k == 8) throw std::invalid_argument("pattern: too many entries");
    t[k++] = type_from_char(ch);
  }
  if (k != 8) throw std::invalid_argument("pattern: need 8 entries");
  return t;
}

std::vector<Hypercube> hypercubes_through(const PartialD0Graph& g, int s) {
  std::vector<Hypercube> out;
  const KRSquare& sq = g.square(s);
  const int n = g.degree();
  for (int j = sq.color + 3; j <= n - 1; ++j) out.push_back(Hypercube{sq.color, j, with_window(sq.base, j, 0)});
  for (int i = 2; i <= sq.color - 3; ++i) out.push_back(Hypercube{i, sq.color, with_window(sq.base, i, 0)});
  return out;
}

std::vector<Hypercube> hypercubes(const PartialD0Graph& g) {
  std::set<Hypercube> seen;
  for (int s = 0; s < g.num_squares(); ++s)
    for (const Hypercube& h : hypercubes_through(g, s)) seen.insert(h);
  return {seen.begin(), seen.end()};
}

std::array<int, 8> hypercube_square_ids(const PartialD0Graph& g, const Hypercube& h) {
  std::array<int, 8> ids;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) ids[pattern_index(r, c)] = g.find_square(h.square(r, c));
  return ids;
}

HypercubePattern pattern_of(const PartialD0Graph& g, const Hypercube& h) {
  HypercubePattern t;
  std::array<int, 8> ids = hypercube_square_ids(g, h);
  for (int k = 0; k < 8; ++k) t[k] = ids[k] < 0 ? SquareType::Irrelevant : g.type(ids[k]);
  return t;
}

const std::array<HypercubePattern, 12>& valid_patterns() {
  static const std::array<HypercubePattern, 12> patterns = [] {
    const char* rows[12] = {"KKKK/KKKK", "KKKK/KKRR", "KKRR/KKKK", "KKRR/KKRR", "KKKK/RRKK", "RRKK/KKKK",
                            "KRRR/KRRR", "RKRR/RKRR", "RRKK/RRKK", "RRKR/RRKR", "RRRK/RRRK", "RRRR/RRRR"};
    std::array<HypercubePattern, 12> out;
    for (int k = 0; k < 12; ++k) out[k] = pattern_from_string(rows[k]);
    return out;
  }();
  return patterns;
}

const std::vector<PartialPattern>& forbidden_partial_patterns() {
  static const std::vector<PartialPattern> patterns = [] {
    constexpr SquareType K = SquareType::Knuth, R = SquareType::Rotation;
    using Cells = std::vector<std::pair<int, SquareType>>;  // (index, type)
    // Singles at block offset `col0`, rows and columns of a 2x2 block.
    auto singles = [](int col0, SquareType t) {
      std::vector<Cells> out;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.push_back({{pattern_index(r, col0 + c), t}});
      return out;
    };
    auto row_pairs = [&](int col0) {
      std::vector<Cells> out;
      for (auto [x, y] : {std::pair{K, R}, std::pair{R, K}})
        for (int r = 0; r < 2; ++r) out.push_back({{pattern_index(r, col0), x}, {pattern_index(r, col0 + 1), y}});
      return out;
    };
    auto col_pairs = [&](int col0) {
      std::vector<Cells> out;
      for (auto [x, y] : {std::pair{K, R}, std::pair{R, K}})
        for (int c = 0; c < 2; ++c) out.push_back({{pattern_index(0, col0 + c), x}, {pattern_index(1, col0 + c), y}});
      return out;
    };
    std::vector<PartialPattern> out;
    auto product = [&](const std::vector<Cells>& left, const std::vector<Cells>& right) {
      for (const Cells& l : left)
        for (const Cells& r : right) {
          PartialPattern p{};
          for (auto [k, t] : l) p[k] = t;
          for (auto [k, t] : r) p[k] = t;
          out.push_back(p);
        }
    };
    product(singles(0, K), row_pairs(2));
    product(singles(0, R), col_pairs(2));
    product(row_pairs(0), singles(2, K));
    product(col_pairs(0), singles(2, R));
    return out;
  }();
  return patterns;
}

bool contains(const HypercubePattern& t, const PartialPattern& p) {
  for (int k = 0; k < 8; ++k)
    if (p[k] && *p[k] != t[k]) return false;
  return true;
}

bool covers(const HypercubePattern& p, const HypercubePattern& t) {
  for (int k = 0; k < 8; ++k) {
    bool typed = t[k] == SquareType::Knuth || t[k] == SquareType::Rotation;
    if (typed && t[k] != p[k]) return false;
  }
  return true;
}

bool avoids_forbidden(const HypercubePattern& t) {
  for (const PartialPattern& p : forbidden_partial_patterns())
    if (contains(t, p)) return false;
  return true;
}

bool covered_by_valid(const HypercubePattern& t) {
  for (const HypercubePattern& p : valid_patterns())
    if (covers(p, t)) return true;
  return false;
}

AxiomResult axiom5_by_squares(const PartialD0Graph& g) {
  const int n = g.degree();
  for (const Edge& e : g.edges())
    for (int j = 2; j <= n - 1; ++j) {
      if (std::abs(e.color - j) < 3) continue;
      for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        int sv = g.square_at(v, j);
        if (sv < 0) continue;
        int sw = g.square_at(w, j);
        if (sw < 0 || g.type(sv) != g.type(sw))
          return AxiomResult::fail("axiom 5: " + std::to_string(e.color) + "-edge {" + g.vertex(v).str() + ", " +
                                   g.vertex(w).str() + "} joins KR_" + std::to_string(j) + " squares of types " +
                                   type_char(g.type(sv)) + " and " +
                                   (sw < 0 ? '-' : type_char(g.type(sw))));
      }
    }
  return {};
}

AxiomResult axiom5_by_forbidden(const PartialD0Graph& g) {
  for (const Hypercube& h : hypercubes(g)) {
    HypercubePattern t = pattern_of(g, h);
    if (!avoids_forbidden(t))
      return AxiomResult::fail("axiom 5: hypercube " + h.square(0, 0).str() + " x " + h.square(0, 2).str() +
                               " has forbidden pattern " + pattern_str(t));
  }
  return {};
}

AxiomResult axiom5_by_valid(const PartialD0Graph& g) {
  for (const Hypercube& h : hypercubes(g)) {
    HypercubePattern t = pattern_of(g, h);
    if (!covered_by_valid(t))
      return AxiomResult::fail("axiom 5: hypercube " + h.square(0, 0).str() + " x " + h.square(0, 2).str() +
                               " has pattern " + pattern_str(t) + " outside the valid list");
  }
  return {};
}

bool is_d_graph(const PartialD0Graph& g) {
  if (!g.is_d0()) return false;
  SignedColoredGraph s = g.to_signed();
#ifndef NDEBUG
  if (!check_axiom1(s) || !check_axiom2(s) || !check_axiom3(s) || !check_axiom4a(s))
    throw std::logic_error("is_d_graph: a D0 graph violates axioms 1-3 or 4'a");
#endif
  return check_axiom5(s).pass && check_axiom4b(s).pass;
}

}  // namespace d0
