#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "d0/bijectivizations.hpp"
#include "d0/tableau.hpp"
#include "d0/word.hpp"

namespace d0 {

// Stacked class matrices A_j with b^j = A_j J_lambda and c the indicator of W_d.
struct LinearProgram {
  int d = 0;
  Partition lambda;
  std::vector<ClassMatrix> blocks;
  std::vector<std::vector<std::int64_t>> b;  // per block, per row
  std::vector<std::int64_t> coeff;           // coefficient of J_lambda at each rank
  std::int64_t M = 0;                        // c^T J_lambda

  int num_rows() const;
};

LinearProgram build_lp(int d, const Partition& lambda, const std::vector<Bijectivization>& specs);

struct PackingRow {
  int block = 0;
  int class_row = 0;  // row index inside blocks[block]
  std::string label;
  std::vector<std::uint32_t> support;  // sorted ranks
  std::int64_t weight = 0;
};

struct PackingInstance {
  int d = 0;
  Partition lambda;
  std::int64_t M = 0;
  std::vector<std::string> block_names;
  std::vector<PackingRow> rows;  // grouped by block, original order kept

  int num_rows() const { return static_cast<int>(rows.size()); }
  std::int64_t total_weight() const;
  std::vector<std::int64_t> block_weights(int block) const;
};

// Drops rows whose weight is not positive.
PackingInstance prune(const LinearProgram& lp);

// Weighted graph on at most a few hundred vertices.
struct WeightedGraph {
  int n = 0;
  std::vector<std::int64_t> weight;
  std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

  explicit WeightedGraph(int n = 0);
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj[u][v >> 6] >> (v & 63)) & 1U; }
  int num_edges() const;
};

// Rows are the vertices, weighted by b', adjacent when supports meet.
WeightedGraph row_conflict_graph(const PackingInstance& inst);

// G(A', b'): block V_i of b'_i vertices per row.
struct ConflictGraph {
  std::vector<int> block_of;  // vertex -> row
  WeightedGraph graph;        // unit weights

  int num_vertices() const { return graph.n; }
};

ConflictGraph conflict_graph(const PackingInstance& inst);

struct IndependentSet {
  std::int64_t value = 0;
  std::vector<int> vertices;  // ascending
  std::uint64_t nodes = 0;    // search nodes visited
};

// Exact maximum weight independent set by branch and bound. Branches on the
// lowest candidate, include first, and keeps the first optimum found.
IndependentSet max_weight_independent_set(const WeightedGraph& g);

struct Packing {
  std::int64_t value = 0;
  std::vector<int> rows;
  std::uint64_t nodes = 0;
};

Packing max_weight_packing(const PackingInstance& inst);

// y in {0,1}^t to the union of the blocks V_i with y_i = 1.
std::vector<int> theta(const ConflictGraph& cg, const std::vector<int>& rows);

struct Counterexample {
  std::vector<Word> W;      // union of the selected classes
  std::vector<Word> W_bar;  // its complement in S_d
  std::int64_t selected_weight = 0;
  std::int64_t certificate = 0;        // M - b'^T y
  std::int64_t certificate_direct = 0;  // pair_J(lambda, sum of W_bar) evaluated word by word
  bool W_is_kr = false;
  bool W_bar_is_kr = false;
};

// Throws when rows overlap or the selection does not exceed M.
Counterexample extract_counterexample(const PackingInstance& inst, const LinearProgram& lp,
                                      const std::vector<int>& rows);

enum class Verdict { Holds, Fails, Unknown };
const char* verdict_str(Verdict v);

struct PackingBoundReport {
  std::int64_t M = 0;
  std::int64_t integer_optimum = 0;
  Verdict positive_sum = Verdict::Unknown;  // (i), equivalently (ii)-(iv)
  Verdict dual_value = Verdict::Unknown;    // (iv)
  Verdict certificate = Verdict::Unknown;   // (v) tested on the optimal selection
  std::string str() const;
};

PackingBoundReport check_packing_bound(const PackingInstance& inst, const LinearProgram& lp);

// I_lam^(1..8) followed by the plactic quotient.
std::vector<Bijectivization> standard_specs(int kmax = 8);

// The selection: non-superstandard plactic classes of shape 2222, the lam3
// class of 78634521 and the lam7 class of 75183642. Needs standard_specs().
std::vector<int> reference_selection(const PackingInstance& inst);

std::string instance_report(const PackingInstance& inst);

}  // namespace d0
