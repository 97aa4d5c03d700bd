#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "d0/d0graph.hpp"

namespace d0 {

struct AxiomResult {
  bool pass = true;
  std::string witness;  // first violation in vertex/color order; empty on pass

  explicit operator bool() const { return pass; }
  static AxiomResult fail(std::string why) { return {false, std::move(why)}; }
};

AxiomResult check_axiom0(const SignedColoredGraph& g);
AxiomResult check_axiom1(const SignedColoredGraph& g);
AxiomResult check_axiom2(const SignedColoredGraph& g);
AxiomResult check_axiom3(const SignedColoredGraph& g);
AxiomResult check_axiom4a(const SignedColoredGraph& g);
// Edge form: an i-edge followed by a j-edge, |i-j| >= 3, closes a square.
AxiomResult check_axiom5(const SignedColoredGraph& g);
// which in {0,1,2,3,5}
AxiomResult check_axiom(const SignedColoredGraph& g, int which);

bool itype_W(const SignedColoredGraph& g, int v, int i);

struct Chain {
  int color = 0;
  std::vector<int> vertices;  // x^1 .. x^{2h}
  std::vector<int> m;         // m_j per flat link; empty for weak chains
};

// Flat i-chains that extend neither forwards nor backwards.
std::vector<Chain> flat_chains(const SignedColoredGraph& g, int i);
std::vector<Chain> weak_flat_chains(const SignedColoredGraph& g, int i);

// Whether the chain satisfies the prefix/suffix condition at every interior index.
AxiomResult chain_window_check(const SignedColoredGraph& g, const Chain& c);

AxiomResult check_axiom4b(const SignedColoredGraph& g);
AxiomResult check_axiom4bb(const SignedColoredGraph& g);

AxiomResult check_lsp(const SignedColoredGraph& g, int d);

// Components of Res_[i-1,i+2] are isolated vertices, 2-edge paths, 4-edge
// paths or double edges.
AxiomResult check_restriction_shapes(const SignedColoredGraph& g);

// ---------------------------------------------------------------- hypercubes

// Row-major 2x4: left block (color i) then right block (color j) per row.
using HypercubePattern = std::array<SquareType, 8>;
// Unoccupied entries are nullopt.
using PartialPattern = std::array<std::optional<SquareType>, 8>;

inline int pattern_index(int r, int c) { return r * 4 + c; }

// KR_{i,j} hypercube, i + 3 <= j, stored by the word x bac y edf z.
struct Hypercube {
  int i = 0;
  int j = 0;
  Word base;

  // Column c in 0..3 of row r; left squares for c < 2.
  KRSquare square(int r, int c) const;
  std::array<KRSquare, 8> squares() const;

  friend auto operator<=>(const Hypercube&, const Hypercube&) = default;
};

std::string pattern_str(const HypercubePattern& t);  // "R R K 0 / K 0 0 0"
HypercubePattern pattern_from_string(const std::string& s);

// Hypercubes with at least one square meeting the vertex set, sorted.
std::vector<Hypercube> hypercubes(const PartialD0Graph& g);
std::vector<Hypercube> hypercubes_through(const PartialD0Graph& g, int square);
std::array<int, 8> hypercube_square_ids(const PartialD0Graph& g, const Hypercube& h);
HypercubePattern pattern_of(const PartialD0Graph& g, const Hypercube& h);

const std::array<HypercubePattern, 12>& valid_patterns();
const std::vector<PartialPattern>& forbidden_partial_patterns();

bool contains(const HypercubePattern& t, const PartialPattern& p);
// p covers t when every K/R entry of t agrees with p.
bool covers(const HypercubePattern& p, const HypercubePattern& t);
bool avoids_forbidden(const HypercubePattern& t);
bool covered_by_valid(const HypercubePattern& t);

// Square forms of axiom 5 on a D0 graph.
AxiomResult axiom5_by_squares(const PartialD0Graph& g);
AxiomResult axiom5_by_forbidden(const PartialD0Graph& g);
AxiomResult axiom5_by_valid(const PartialD0Graph& g);

// Axioms 4'b and 5; the remaining D graph axioms hold for every D0 graph.
bool is_d_graph(const PartialD0Graph& g);

}  // namespace d0
