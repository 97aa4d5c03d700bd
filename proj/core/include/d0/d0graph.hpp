#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "d0/kr.hpp"
#include "d0/quasisym.hpp"
#include "d0/word.hpp"

namespace d0 {

// Graph of degree n whose vertices carry signatures of length n-1 and whose
// edges of color i (2 <= i <= n-1) form partial involutions E_i.
class SignedColoredGraph {
 public:
  SignedColoredGraph() = default;
  SignedColoredGraph(int degree, std::vector<std::uint32_t> descents);

  int degree() const { return n_; }
  int size() const { return static_cast<int>(des_.size()); }
  std::uint32_t descents(int v) const { return des_[v]; }
  // +1 or -1 for 1 <= i <= n-1.
  int sigma(int v, int i) const { return ((des_[v] >> (i - 1)) & 1U) ? -1 : 1; }
  bool has_color(int i) const { return i >= 2 && i <= n_ - 1; }
  int neighbor(int v, int color) const {
    return has_color(color) ? E_[static_cast<std::size_t>(color) * size() + v] : -1;
  }
  std::optional<EdgeType> edge_type(int v, int color) const;

  // Adds the edge {u,v}; both endpoints must be free at that color.
  void add_edge(int color, int u, int v, std::optional<EdgeType> type = std::nullopt);

  void set_labels(std::vector<Word> labels);
  bool has_labels() const { return !labels_.empty(); }
  const Word& label(int v) const { return labels_[v]; }
  int origin(int v) const { return origin_.empty() ? v : origin_[v]; }

  // Res_[i..j]: signatures sliced, colors i+1..j-1 kept and renumbered from 2.
  SignedColoredGraph restrict(int i, int j) const;

  // Connected components, each sorted ascending, ordered by least vertex.
  std::vector<std::vector<int>> components() const;
  FExpansion fexpansion(const std::vector<int>& vertices) const;
  FExpansion fexpansion() const;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> des_;
  std::vector<std::int32_t> E_;        // color-major, -1 for no neighbour
  std::vector<std::uint8_t> etype_;    // 0 none, 1 Knuth, 2 rotation
  std::vector<Word> labels_;
  std::vector<std::int32_t> origin_;
};

struct Edge {
  int color;
  EdgeType type;
  int u;  // vertex indices, u < v
  int v;
};

// Immutable structure shared between graphs on the same vertex set.
struct D0Skeleton;

// A vertex set W together with a type for every KR square meeting W.
// Edges are derived from the types.
class PartialD0Graph {
 public:
  PartialD0Graph() = default;

  // Minimal partial D0 graph: squares meeting W in two words get the forced
  // type, full squares are undetermined. Throws unless W is a KR set.
  static PartialD0Graph minimal(std::vector<Word> W, int N = 0);
  // Full squares typed by `rule`; squares meeting W in a pair keep the forced
  // type, which must agree with `rule`.
  static PartialD0Graph typed(std::vector<Word> W, const std::function<SquareType(const KRSquare&)>& rule,
                              int N = 0);

  int degree() const;
  int alphabet() const;
  int num_vertices() const;
  const std::vector<Word>& vertices() const;
  const Word& vertex(int v) const;
  int index_of(const Word& w) const;  // -1 when absent

  int num_squares() const;
  const KRSquare& square(int s) const;
  int find_square(const KRSquare& sq) const;  // -1 when the square misses W
  // Vertex index of member m of square s, or -1 when that word is not in W.
  int square_member(int s, int m) const;
  int square_occupancy(int s) const;  // 2 or 4
  SquareType type(int s) const { return types_[s]; }
  const std::vector<SquareType>& types() const { return types_; }

  // Square containing v at this color, or -1; and v's member index there.
  int square_at(int v, int color) const;
  int member_at(int v, int color) const;

  int neighbor(int v, int color) const;

  // Declares an undetermined square Knuth or rotation.
  void assign(int s, SquareType t);
  // Sets every undetermined square to t.
  PartialD0Graph complete_all(SquareType t) const;
  // Replaces the whole type vector; entries are validated.
  void set_types(std::vector<SquareType> types);

  int num_undetermined() const;
  bool is_d0() const { return num_undetermined() == 0; }

  std::vector<Edge> edges() const;
  SignedColoredGraph to_signed() const;
  std::vector<std::vector<int>> components() const;
  // Subgraph on a union of components (or any subset keeping types legal).
  PartialD0Graph induced(const std::vector<int>& vertex_indices) const;

  DeltaSchur generating_function() const;

 private:
  std::shared_ptr<const D0Skeleton> sk_;
  std::vector<SquareType> types_;

  static PartialD0Graph build(std::vector<Word> W, int N);
  void check_type(int s, SquareType t) const;
};

struct KRSetReport {
  bool is_kr_set = true;
  std::string witness;  // first offending square, canonical order
};

KRSetReport kr_set_report(const std::vector<Word>& W);
bool is_kr_set(const std::vector<Word>& W);

// Repetition-free words of length n over [N] not in W.
std::vector<Word> complement(const std::vector<Word>& W, int n, int N);

}  // namespace d0
