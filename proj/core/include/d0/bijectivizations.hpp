#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "d0/d0graph.hpp"
#include "d0/quasisym.hpp"
#include "d0/tableau.hpp"
#include "d0/word.hpp"

namespace d0 {

// Rows grow southwards, columns eastwards (English notation).
struct Cell {
  int row = 0;
  int col = 0;
  int content = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// k-tuple of skew shapes with contents.
class SkewTuple {
 public:
  SkewTuple() = default;
  explicit SkewTuple(std::vector<std::vector<Cell>> components);

  // Accepted forms:
  //   "2/1; 22/11; 2"            one skew shape per component
  //   "(2,32,33)/(1,11,21)"      tuple of outer shapes over tuple of inner shapes
  //   "[0 1 1]; [0 1 1] [1 1 0]" explicit (row, col, content) cells
  // An empty inner shape may be written as nothing, 0 or ∅.
  static SkewTuple parse(std::string_view text);
  static SkewTuple from_shapes(const std::vector<std::pair<Partition, Partition>>& shapes);

  int k() const { return static_cast<int>(comps_.size()); }
  const std::vector<std::vector<Cell>>& components() const { return comps_; }
  int size() const;
  int shifted_content(int comp, const Cell& z) const { return k() * z.content + comp; }
  std::vector<int> letters() const;  // sorted shifted contents
  // Pairs (x, y): letter x must precede letter y.
  std::vector<std::pair<int, int>> precedences() const;

  // No 2x2 square, distinct positive shifted contents up to N (0: no bound).
  void validate(int N = 0) const;
  std::string str() const;

 private:
  std::vector<std::vector<Cell>> comps_;  // each sorted by (row, col)
};

// The antidiagonal reading w(beta) = w^0 w^1 ... w^{k-1}.
Word wbeta(const SkewTuple& beta);
// W^(k)(beta) in lexicographic order.
std::vector<Word> words_of(const SkewTuple& beta);

struct LLTResult {
  std::map<int, std::vector<Word>> groups;        // inv_k -> words
  std::map<int, SchurExpansion> expansion;        // inv_k -> Schur expansion of the group
  std::string str() const;  // "q^2 s41 + q^3 (s32 + s311) + ..."
};

// Throws std::logic_error if some inv_k group fails to be symmetric.
LLTResult llt(const SkewTuple& beta);

// ---------------------------------------------------------------- class keys

struct LamKey {
  std::uint32_t letters = 0;  // bit a-1 set for each letter a
  int inv = 0;                // inv_k
  std::uint32_t order = 0;    // bit a-1 set when a precedes a+k

  friend auto operator<=>(const LamKey&, const LamKey&) = default;
};

LamKey lam_key(const Word& w, int k);
Tableau plactic_key(const Word& w);

struct Bijectivization {
  enum class Kind { Plactic, Lam, Assaf, Triples };
  Kind kind = Kind::Plactic;
  int k = 0;
  // For Triples: type of the letter set {a < b < c}.
  std::function<SquareType(int, int, int)> triple_type;

  static Bijectivization plactic() { return {Kind::Plactic, 0, {}}; }
  static Bijectivization lam(int k) { return {Kind::Lam, k, {}}; }
  static Bijectivization assaf(int k) { return {Kind::Assaf, k, {}}; }
  static Bijectivization triples(std::function<SquareType(int, int, int)> t) { return {Kind::Triples, 0, std::move(t)}; }
  // "plactic", "lam3" or "lam:3", "assaf3" or "assaf:3"
  static Bijectivization parse(std::string_view text);
  std::string name() const;
};

// Knuth when c - a > k, rotation otherwise.
SquareType assaf_type(int k, int a, int c);

PartialD0Graph assaf_graph(int k, std::vector<Word> W, int N = 0);
PartialD0Graph triples_graph(const std::function<SquareType(int, int, int)>& type, std::vector<Word> W, int N = 0);

// Partition of S_d into labelled classes; words are indexed by Lehmer rank.
struct ClassMatrix {
  Bijectivization spec;
  int d = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> rows;  // sorted ranks; rows ordered by least rank
  std::vector<std::int32_t> row_of;              // rank -> row

  int num_rows() const { return static_cast<int>(rows.size()); }
  std::vector<Word> words(int row) const;
};

ClassMatrix class_matrix(const Bijectivization& spec, int d);

}  // namespace d0
